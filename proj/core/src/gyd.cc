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

#include "qpa/gyd.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qpa/schur.h"

namespace qpa {

GeneralizedDiagram::GeneralizedDiagram(std::vector<Cell> cells) {
    if (!cells.empty()) {
        long min_i = std::numeric_limits<long>::max();
        long min_j = std::numeric_limits<long>::max();
        for (const Cell &c : cells) {
            min_i = std::min(min_i, c.first);
            min_j = std::min(min_j, c.second);
        }
        for (Cell &c : cells) {
            c.first -= min_i;
            c.second -= min_j;
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    cells_ = std::move(cells);
}

long GeneralizedDiagram::index_of(const Cell &c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) {
        return -1;
    }
    return it - cells_.begin();
}

GeneralizedDiagram parse_gyd(std::string_view text) {
    std::vector<Cell> cells;
    size_t start = 0;
    while (start <= text.size()) {
        size_t semi = text.find(';', start);
        std::string_view item = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
        if (!item.empty()) {
            std::vector<Rational> xy = parse_rational_list(item);
            if (xy.size() != 2 || xy[0].get_den() != 1 || xy[1].get_den() != 1) {
                throw std::invalid_argument("bad cell '" + std::string(item) + "' (expected i,j)");
            }
            cells.emplace_back(xy[0].get_num().get_si(), xy[1].get_num().get_si());
        }
        if (semi == std::string_view::npos) {
            break;
        }
        start = semi + 1;
    }
    return GeneralizedDiagram(cells);
}

std::string to_string(const GeneralizedDiagram &g) {
    std::ostringstream out;
    for (size_t a = 0; a < g.cells().size(); a++) {
        if (a) {
            out << ';';
        }
        out << g.cells()[a].first << ',' << g.cells()[a].second;
    }
    return out.str();
}

GeneralizedDiagram diagram_cells(const YoungDiagram &shape) {
    return skew_cells(shape, YoungDiagram(std::vector<long>(shape.d(), 0)));
}

GeneralizedDiagram skew_cells(const YoungDiagram &outer, const YoungDiagram &inner) {
    if (outer.d() != inner.d()) {
        throw std::invalid_argument("skew shape needs equal row counts");
    }
    std::vector<Cell> cells;
    for (int i = 0; i < outer.d(); i++) {
        if (inner.rows[i] > outer.rows[i]) {
            throw std::invalid_argument("skew shape needs inner <= outer in every row");
        }
        for (long j = inner.rows[i]; j < outer.rows[i]; j++) {
            cells.emplace_back(i, j);
        }
    }
    return GeneralizedDiagram(cells);
}

ConstraintMap ConstraintMap::trivial(const GeneralizedDiagram &g, int d) {
    return ConstraintMap{std::vector<int>(g.size(), 1), std::vector<int>(g.size(), d)};
}

namespace {

struct GwtWalker {
    const GeneralizedDiagram &g;
    const ConstraintMap &x;
    const std::function<void(const Filling &)> &visit;
    std::vector<long> left;
    std::vector<long> up;
    Filling cur;

    void fill(size_t a) {
        if (a == cur.size()) {
            visit(cur);
            return;
        }
        int lo = x.lower[a];
        int hi = x.upper[a];
        if (left[a] >= 0) {
            lo = std::max(lo, cur[left[a]]);
        }
        if (up[a] >= 0) {
            lo = std::max(lo, cur[up[a]] + 1);
        }
        for (int v = lo; v <= hi; v++) {
            cur[a] = v;
            fill(a + 1);
        }
    }
};

}  // namespace

void for_each_gwt(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::function<void(const Filling &)> &visit) {
    size_t n = g.size();
    if (x.lower.size() != n || x.upper.size() != n) {
        throw std::invalid_argument("constraint map must cover every cell");
    }
    GwtWalker walker{g, x, visit, std::vector<long>(n), std::vector<long>(n), Filling(n, 0)};
    for (size_t a = 0; a < n; a++) {
        const Cell &c = g.cells()[a];
        walker.left[a] = g.index_of({c.first, c.second - 1});
        walker.up[a] = g.index_of({c.first - 1, c.second});
        if (x.lower[a] < 1 || x.upper[a] > d) {
            throw std::invalid_argument("constraints must lie in 1..d");
        }
    }
    walker.fill(0);
}

std::vector<Filling> enumerate_gwt(const GeneralizedDiagram &g, int d, const ConstraintMap &x) {
    std::vector<Filling> out;
    for_each_gwt(g, d, x, [&](const Filling &w) {
        out.push_back(w);
    });
    return out;
}

Rational constrained_schur(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::vector<Rational> &q,
                           const FillingWeight &f) {
    if (static_cast<int>(q.size()) != d) {
        throw std::invalid_argument("constrained_schur: need one variable per letter");
    }
    MonomialTable table(q, static_cast<long>(g.size()));
    Rational total = 0;
    std::vector<long> counts(d);
    for_each_gwt(g, d, x, [&](const Filling &w) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int v : w) {
            counts[v - 1]++;
        }
        Rational mono = table.monomial(counts);
        total += f ? f(w) * mono : mono;
    });
    return total;
}

Rational constrained_weyl_average(const GeneralizedDiagram &g, int d, const ConstraintMap &x, const std::vector<Rational> &q,
                                  const FillingWeight &f) {
    Rational norm = constrained_schur(g, d, x, q);
    if (norm == 0) {
        return 0;
    }
    return constrained_schur(g, d, x, q, f) / norm;
}

Rational weyl_average(const YoungDiagram &shape, const std::vector<Rational> &q, const std::function<Rational(const GTPattern &)> &f) {
    MonomialTable table(q, shape.size());
    Rational num = 0;
    Rational den = 0;
    for_each_gt_pattern(shape, [&](const GTPattern &w) {
        Rational mono = table.monomial(w);
        den += mono;
        num += mono * f(w);
    });
    if (den == 0) {
        return 0;
    }
    return num / den;
}

Filling lowest_filling(const GeneralizedDiagram &g, int d) {
    Filling best;
    for_each_gwt(g, d, ConstraintMap::trivial(g, d), [&](const Filling &w) {
        if (best.empty()) {
            best = w;
        }
        for (size_t a = 0; a < w.size(); a++) {
            best[a] = std::min(best[a], w[a]);
        }
    });
    return best;
}

Filling highest_filling(const GeneralizedDiagram &g, int d) {
    Filling best;
    for_each_gwt(g, d, ConstraintMap::trivial(g, d), [&](const Filling &w) {
        if (best.empty()) {
            best = w;
        }
        for (size_t a = 0; a < w.size(); a++) {
            best[a] = std::max(best[a], w[a]);
        }
    });
    return best;
}

}  // namespace qpa
