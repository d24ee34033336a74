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

#ifndef QPA_SCHUR_H
#define QPA_SCHUR_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace qpa {

/// Caches q_b^e for every letter b and exponent e <= max_exponent, so that
/// monomials over many GT patterns cost one multiplication per letter.
class MonomialTable {
   public:
    MonomialTable(const std::vector<Rational> &q, long max_exponent);
    Rational monomial(const std::vector<long> &exponents) const;
    Rational monomial(const GTPattern &w) const;

   private:
    std::vector<std::vector<Rational>> powers_;
};

/// Sum over GT patterns of the monomial weight prod_b q_b^{#_b}.
Rational schur_polynomial(const YoungDiagram &shape, const std::vector<Rational> &q);

/// det[h_{shape_i - i + j}(q)] evaluated exactly.
Rational schur_jacobi_trudi(const YoungDiagram &shape, const std::vector<Rational> &q);

/// g^shape * s_shape(p).
Rational sw_mass(const YoungDiagram &shape, const Spectrum &p);

/// Every diagram of n boxes with at most d rows, paired with its mass.
std::vector<std::pair<YoungDiagram, Rational>> sw_distribution(long n, const Spectrum &p);

/// Row-insertion shape of a word over the letters 1..d.
YoungDiagram rsk_shape(const std::vector<int> &word, int d);

/// Draws n i.i.d. letters from p and returns their insertion shape.
YoungDiagram sample_sw(long n, const std::vector<double> &p, uint64_t seed);

}  // namespace qpa

#endif
