// Copyright 2026 The QPA Calculator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QPA_TOOLS_CLI_H
#define QPA_TOOLS_CLI_H

#include <iosfwd>

namespace qpa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. Normal output goes to
/// `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qpa::cli

#endif
