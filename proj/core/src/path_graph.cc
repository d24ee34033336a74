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

#include "qpa/path_graph.h"

#include <algorithm>

namespace qpa {

PathGraph PathGraph::from_permutation(const std::vector<int> &pi) {
    int d = static_cast<int>(pi.size());
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < d; i++) {
        if (sorted[i] != i + 1) {
            throw std::invalid_argument("path graph needs a permutation of 1..d");
        }
    }
    PathGraph g;
    g.d_ = d;
    g.pos_.assign(d, std::vector<int>(d, 0));
    g.type_.assign(d, std::vector<EdgeType>(d, EdgeType::back));
    for (int i = 1; i <= d; i++) {
        g.pos_[pi[i - 1] - 1][d - 1] = i;
    }
    // Walk down one level at a time. Path b stops at level b; every path
    // a < b either keeps its row or slides one row up to make room.
    for (int b = d; b >= 2; b--) {
        int stop = g.pos_[b - 1][b - 1];
        for (int a = 1; a < b; a++) {
            int p = g.pos_[a - 1][b - 1];
            if (p < stop) {
                g.type_[a - 1][b - 1] = EdgeType::back;
                g.pos_[a - 1][b - 2] = p;
            } else {
                g.type_[a - 1][b - 1] = EdgeType::forward;
                g.pos_[a - 1][b - 2] = p - 1;
            }
        }
    }
    return g;
}

EdgeVariables wt_to_edge_vars(const GTPattern &w, const PathGraph &g) {
    int d = g.d();
    EdgeVariables t(d, std::vector<long>(d, 0));
    for (int b = 2; b <= d; b++) {
        for (int a = 1; a < b; a++) {
            long raw = w.w(g.position(a, b - 1), b - 1) - w.w(g.position(a, b), b);
            t[a - 1][b - 1] = g.edge(a, b) == EdgeType::back ? -raw : raw;
        }
    }
    return t;
}

GTPattern edge_vars_to_wt(const EdgeVariables &t, const YoungDiagram &top, const PathGraph &g) {
    int d = g.d();
    if (top.d() != d) {
        throw std::invalid_argument("edge_vars_to_wt: top row length must equal d");
    }
    std::vector<std::vector<long>> levels(d);
    for (int b = 1; b <= d; b++) {
        levels[b - 1].assign(b, 0);
    }
    levels[d - 1] = top.rows;
    for (int b = d; b >= 2; b--) {
        for (int a = 1; a < b; a++) {
            long ta = t[a - 1][b - 1];
            if (ta < 0) {
                throw InadmissibleEdgeVariables("edge variable t(" + std::to_string(a) + "," + std::to_string(b) + ") is negative");
            }
            long raw = g.edge(a, b) == EdgeType::back ? -ta : ta;
            levels[b - 2][g.position(a, b - 1) - 1] = levels[b - 1][g.position(a, b) - 1] + raw;
        }
        for (int i = 1; i <= b - 1; i++) {
            long v = levels[b - 2][i - 1];
            if (!(levels[b - 1][i - 1] >= v && v >= levels[b - 1][i])) {
                throw InadmissibleEdgeVariables("interlacing fails at w(" + std::to_string(i) + "," + std::to_string(b - 1) + ") = " +
                                                std::to_string(v) + ": need " + std::to_string(levels[b - 1][i - 1]) +
                                                " >= w >= " + std::to_string(levels[b - 1][i]));
            }
        }
    }
    return GTPattern(levels);
}

GTPattern lowest_weight_pattern(const YoungDiagram &top, const PathGraph &g) {
    EdgeVariables zero(g.d(), std::vector<long>(g.d(), 0));
    return edge_vars_to_wt(zero, top, g);
}

Rational edge_ratio(const PathGraph &g, int a, int b, const std::vector<Rational> &q) {
    if (g.edge(a, b) == EdgeType::back) {
        return q[b - 1] / q[a - 1];
    }
    return q[a - 1] / q[b - 1];
}

}  // namespace qpa
