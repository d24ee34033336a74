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

#ifndef QPA_GYD_H
#define QPA_GYD_H

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpa/rational.h"
#include "qpa/young.h"

namespace qpa {

/// (row, column).
using Cell = std::pair<long, long>;

/// Arbitrary finite set of lattice cells. Cells are kept sorted row-major
/// and translated so that the smallest row and the smallest column are 0.
class GeneralizedDiagram {
   public:
    GeneralizedDiagram() = default;
    explicit GeneralizedDiagram(std::vector<Cell> cells);

    const std::vector<Cell> &cells() const {
        return cells_;
    }
    size_t size() const {
        return cells_.size();
    }
    /// Index of a cell, or -1.
    long index_of(const Cell &c) const;

    bool operator==(const GeneralizedDiagram &other) const = default;

   private:
    std::vector<Cell> cells_;
};

/// "i,j;i,j;..." text form.
GeneralizedDiagram parse_gyd(std::string_view text);
std::string to_string(const GeneralizedDiagram &g);

/// Cells of an ordinary diagram.
GeneralizedDiagram diagram_cells(const YoungDiagram &shape);
/// Cells of outer \ inner, inner <= outer row by row.
GeneralizedDiagram skew_cells(const YoungDiagram &outer, const YoungDiagram &inner);

/// Per-cell bounds lower <= entry <= upper, aligned with cells().
struct ConstraintMap {
    std::vector<int> lower;
    std::vector<int> upper;

    static ConstraintMap trivial(const GeneralizedDiagram &g, int d);
};

/// Entries aligned with cells().
using Filling = std::vector<int>;

/// Every filling that weakly increases to the right and strictly increases
/// downwards between cells that are both present, within the constraint.
void for_each_gwt(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::function<void(const Filling &)> &visit);
std::vector<Filling> enumerate_gwt(const GeneralizedDiagram &g, int d, const ConstraintMap &x);

using FillingWeight = std::function<Rational(const Filling &)>;

/// sum over admissible fillings of F(w) prod_b q_b^{#_b(w)}; F defaults to 1.
Rational constrained_schur(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::vector<Rational> &q,
                           const FillingWeight &f = nullptr);

/// Weighted sum over the plain sum; zero when the plain sum vanishes.
Rational constrained_weyl_average(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::vector<Rational> &q,
                                  const FillingWeight &f);

/// Weyl average over the GT patterns of an ordinary diagram.
Rational weyl_average(const YoungDiagram &shape, const std::vector<Rational> &q, const std::function<Rational(const GTPattern &)> &f);

/// Lowest and highest admissible fillings of an ordinary or skew diagram
/// (entrywise minimum and maximum over all fillings).
Filling lowest_filling(const GeneralizedDiagram &g, int d);
Filling highest_filling(const GeneralizedDiagram &g, int d);

}  // namespace qpa

#endif
