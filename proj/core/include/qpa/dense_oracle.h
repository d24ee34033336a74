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

#ifndef QPA_DENSE_ORACLE_H
#define QPA_DENSE_ORACLE_H

#include <optional>

#include "qpa/fidelity.h"
#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace qpa {

/// Two-copy sector fidelity computed by explicit linear algebra.
///
/// The environment and output irreps are realized inside tensor powers of
/// C^d (negative environment rows are shifted by a power of the
/// determinant, which cancels after normalization). The copy of `sigma`
/// inside environment (x) output is located through its highest weight
/// vector, its orthogonal projector is formed exactly, and the target
/// overlap is read off from the diagonal input state diag(p)^{(x)2}. No
/// coupling-coefficient formula is used.
///
/// Returns std::nullopt when `sigma` does not occur in environment (x)
/// output. Throws std::invalid_argument unless |sigma| == 2. All spectrum
/// entries must be positive.
std::optional<Rational> dense_two_copy_oracle(const YoungDiagram &sigma, const YoungDiagram &output, const YoungDiagram &environment,
                                              int k, const Spectrum &p, Objective objective);

/// The same sector with the symmetric output of m copies.
std::optional<Rational> dense_two_copy_oracle(const YoungDiagram &sigma, long m, const YoungDiagram &environment, int k, const Spectrum &p,
                                              Objective objective);

}  // namespace qpa

#endif
