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

#ifndef QPA_PROTOCOL_H
#define QPA_PROTOCOL_H

#include <string>
#include <vector>

#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace qpa {

/// Spectrum relabelled so that the target eigenvalue sits in the last slot.
struct Reindexed {
    std::vector<Rational> q;
    /// sigma[i-1] is the new position of the original index i.
    std::vector<int> sigma;
};

/// sigma(i) = i for i < k, sigma(k) = d, sigma(i) = i - 1 for i > k, and
/// q_{sigma(i)} = p_i. Throws std::invalid_argument when p_k is degenerate.
Reindexed reindex_spectrum(const Spectrum &p, int k);

/// Undoes reindex_spectrum.
std::vector<Rational> restore_spectrum(const Reindexed &r);

/// Boxes removed from each row, m_i >= 0.
using RemovalVector = std::vector<long>;

std::string to_string(const RemovalVector &r);
RemovalVector parse_removal(const std::string &text);
long removal_total(const RemovalVector &r);

/// shape - r.
YoungDiagram apply_removal(const YoungDiagram &shape, const RemovalVector &r);

/// m_i <= gap(i, i+1) for i < d, every m_i >= 0.
bool is_valid_removal(const YoungDiagram &shape, const RemovalVector &r);

/// i* = min{i >= k : gap(k, i+1) >= m}, with gap(k, d+1) infinite.
int terminal_index(const YoungDiagram &shape, int k, long m);

/// I* = min{i >= k : D_{k,i+1} >= R}, with D_{k,d+1} infinite.
/// `p` is the sorted spectrum as doubles.
int terminal_index_macro(const std::vector<double> &p, int k, double rate);

/// Removal vector of the overhang rule for target row k.
RemovalVector overhang_removal(const YoungDiagram &shape, int k, long m);

/// The rule is only meant for sectors with at least m boxes in row k.
bool overhang_supported(const YoungDiagram &shape, int k, long m);

/// Every admissible removal vector, sorted lexicographically descending so
/// that the first entry takes boxes from the top rows.
std::vector<RemovalVector> enumerate_environments(const YoungDiagram &shape, long m);

}  // namespace qpa

#endif
