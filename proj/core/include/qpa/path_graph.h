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

#ifndef QPA_PATH_GRAPH_H
#define QPA_PATH_GRAPH_H

#include <stdexcept>
#include <string>
#include <vector>

#include "qpa/rational.h"
#include "qpa/young.h"

namespace qpa {

enum class EdgeType { back, forward };  // '\' keeps the row, '/' shifts it by one

/// d disjoint paths through the GT lattice. Path a visits levels a..d; its
/// vertex at level b sits in row position(a, b).
class PathGraph {
   public:
    /// pi[i-1] = pi(i), a permutation of 1..d.
    static PathGraph from_permutation(const std::vector<int> &pi);

    int d() const {
        return d_;
    }
    int position(int a, int b) const {
        return pos_[a - 1][b - 1];
    }
    /// Type of the edge of path a between levels b-1 and b, a < b <= d.
    EdgeType edge(int a, int b) const {
        return type_[a - 1][b - 1];
    }
    bool operator==(const PathGraph &other) const = default;

   private:
    int d_ = 0;
    std::vector<std::vector<int>> pos_;
    std::vector<std::vector<EdgeType>> type_;
};

/// t[a-1][b-1] for a < b; other slots are zero.
using EdgeVariables = std::vector<std::vector<long>>;

class InadmissibleEdgeVariables : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Nonnegative edge variables |w(lower vertex) - w(upper vertex)|.
EdgeVariables wt_to_edge_vars(const GTPattern &w, const PathGraph &g);

/// Inverse of wt_to_edge_vars. Throws InadmissibleEdgeVariables naming the
/// violated interlacing inequality.
GTPattern edge_vars_to_wt(const EdgeVariables &t, const YoungDiagram &top, const PathGraph &g);

/// Pattern reached with every edge variable zero.
GTPattern lowest_weight_pattern(const YoungDiagram &top, const PathGraph &g);

/// Ratio attached to edge (a, b): q_b/q_a for '\', q_a/q_b for '/'.
Rational edge_ratio(const PathGraph &g, int a, int b, const std::vector<Rational> &q);

}  // namespace qpa

#endif
