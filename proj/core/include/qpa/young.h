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

#ifndef QPA_YOUNG_H
#define QPA_YOUNG_H

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qpa/rational.h"

namespace qpa {

/// Row lengths of a diagram with exactly d rows (trailing zeros kept).
/// Entries may be negative when the value labels an environment; they must
/// still be weakly decreasing.
struct YoungDiagram {
    std::vector<long> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<long> r) : rows(std::move(r)) {
    }

    int d() const {
        return static_cast<int>(rows.size());
    }
    long size() const;
    /// 1-based row access.
    long row(int i) const {
        return rows[i - 1];
    }
    /// Row gap rows[i] - rows[j] with 1-based indices, 1 <= i, j <= d.
    long gap(int i, int j) const {
        return row(i) - row(j);
    }
    bool is_dominant() const;
    bool is_partition() const;

    bool operator==(const YoungDiagram &other) const = default;
    auto operator<=>(const YoungDiagram &other) const = default;
};

/// "7,5,3,1" style text. Throws std::invalid_argument on bad input.
YoungDiagram parse_diagram(std::string_view text);
std::string to_string(const YoungDiagram &y);

/// Partitions of n into at most d parts, reverse lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(long n, int d);

/// Number of standard Young tableaux (hook lengths).
Integer specht_dim(const YoungDiagram &shape);

/// Dimension of the GL(d) irrep with the given dominant weight.
Integer weyl_dim(const YoungDiagram &weight);
Integer weyl_dim(const YoungDiagram &weight, int d);

/// Gel'fand-Tsetlin pattern; level b holds entries w_{1,b} >= ... >= w_{b,b}
/// and level d is the diagram itself.
class GTPattern {
   public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<long>> levels);

    int d() const {
        return static_cast<int>(levels_.size());
    }
    /// w_{i,b}, 1 <= i <= b <= d.
    long w(int i, int b) const {
        return levels_[b - 1][i - 1];
    }
    const std::vector<long> &level(int b) const {
        return levels_[b - 1];
    }
    /// #_b, the number of letters b in the corresponding tableau.
    long occupancy(int b) const;
    std::vector<long> occupancies() const;
    /// #_{b,l}: how many letters b sit in row l.
    long row_occupancy(int b, int l) const;
    bool is_interlacing() const;

    bool operator==(const GTPattern &other) const = default;

   private:
    std::vector<std::vector<long>> levels_;
};

/// Streams every pattern with top row `top`. Order: level d-1 is chosen
/// first, then d-2 and so on; within a level the entries run
/// lexicographically from low to high.
void for_each_gt_pattern(const YoungDiagram &top, const std::function<void(const GTPattern &)> &visit);
std::vector<GTPattern> enumerate_gt_patterns(const YoungDiagram &top);

}  // namespace qpa

#endif
