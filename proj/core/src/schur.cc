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

#include "qpa/schur.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qpa {

MonomialTable::MonomialTable(const std::vector<Rational> &q, long max_exponent) : powers_(q.size()) {
    for (size_t b = 0; b < q.size(); b++) {
        powers_[b].resize(max_exponent + 1);
        powers_[b][0] = 1;
        for (long e = 1; e <= max_exponent; e++) {
            powers_[b][e] = powers_[b][e - 1] * q[b];
        }
    }
}

Rational MonomialTable::monomial(const std::vector<long> &exponents) const {
    Rational r = 1;
    for (size_t b = 0; b < exponents.size(); b++) {
        if (exponents[b] < 0 || exponents[b] >= static_cast<long>(powers_[b].size())) {
            throw std::out_of_range("monomial exponent outside the cached range");
        }
        r *= powers_[b][exponents[b]];
    }
    return r;
}

Rational MonomialTable::monomial(const GTPattern &w) const {
    return monomial(w.occupancies());
}

Rational schur_polynomial(const YoungDiagram &shape, const std::vector<Rational> &q) {
    if (static_cast<int>(q.size()) != shape.d()) {
        throw std::invalid_argument("schur_polynomial: variable count must equal the row count");
    }
    MonomialTable table(q, std::max<long>(shape.size(), 0));
    Rational total = 0;
    for_each_gt_pattern(shape, [&](const GTPattern &w) {
        total += table.monomial(w);
    });
    return total;
}

namespace {

// h_0..h_max of the given variables.
std::vector<Rational> complete_homogeneous(const std::vector<Rational> &q, long max_degree) {
    std::vector<Rational> h(max_degree + 1, Rational(0));
    h[0] = 1;
    // Adding one variable x at a time: h'_k = sum_j x^j h_{k-j} = h_k + x h'_{k-1}.
    for (const Rational &x : q) {
        for (long k = 1; k <= max_degree; k++) {
            h[k] += x * h[k - 1];
        }
    }
    return h;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    size_t n = a.size();
    Rational det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) {
            pivot++;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; r++) {
            if (a[r][c] == 0) {
                continue;
            }
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; j++) {
                a[r][j] -= f * a[c][j];
            }
        }
    }
    return det;
}

}  // namespace

Rational schur_jacobi_trudi(const YoungDiagram &shape, const std::vector<Rational> &q) {
    if (!shape.is_partition()) {
        throw std::invalid_argument("schur_jacobi_trudi needs a partition");
    }
    int len = 0;
    for (long r : shape.rows) {
        if (r > 0) {
            len++;
        }
    }
    if (len == 0) {
        return 1;
    }
    std::vector<Rational> h = complete_homogeneous(q, shape.size() + len);
    std::vector<std::vector<Rational>> m(len, std::vector<Rational>(len));
    for (int i = 0; i < len; i++) {
        for (int j = 0; j < len; j++) {
            long idx = shape.rows[i] - i + j;
            m[i][j] = idx < 0 ? Rational(0) : h[idx];
        }
    }
    return determinant(std::move(m));
}

Rational sw_mass(const YoungDiagram &shape, const Spectrum &p) {
    return Rational(specht_dim(shape)) * schur_polynomial(shape, p.probs());
}

std::vector<std::pair<YoungDiagram, Rational>> sw_distribution(long n, const Spectrum &p) {
    std::vector<std::pair<YoungDiagram, Rational>> out;
    for (const YoungDiagram &shape : enumerate_diagrams(n, p.d())) {
        out.emplace_back(shape, sw_mass(shape, p));
    }
    return out;
}

YoungDiagram rsk_shape(const std::vector<int> &word, int d) {
    std::vector<std::vector<int>> rows;
    for (int letter : word) {
        if (letter < 1 || letter > d) {
            throw std::invalid_argument("rsk_shape: letter outside 1..d");
        }
        int x = letter;
        for (size_t r = 0;; r++) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
            if (it == rows[r].end()) {
                rows[r].push_back(x);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<long> lengths(d, 0);
    for (size_t r = 0; r < rows.size(); r++) {
        lengths[r] = static_cast<long>(rows[r].size());
    }
    return YoungDiagram(lengths);
}

YoungDiagram sample_sw(long n, const std::vector<double> &p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> letter(p.begin(), p.end());
    std::vector<int> word(n);
    for (long i = 0; i < n; i++) {
        word[i] = letter(rng) + 1;
    }
    return rsk_shape(word, static_cast<int>(p.size()));
}

}  // namespace qpa
