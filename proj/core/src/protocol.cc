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

#include "qpa/protocol.h"

#include <stdexcept>

namespace qpa {

Reindexed reindex_spectrum(const Spectrum &p, int k) {
    int d = p.d();
    if (k < 1 || k > d) {
        throw std::invalid_argument("target index k must lie in 1..d");
    }
    if (!p.nondegenerate_at(k)) {
        throw std::invalid_argument("target eigenvalue p_" + std::to_string(k) + " must be nondegenerate");
    }
    Reindexed r;
    r.q.resize(d);
    r.sigma.resize(d);
    for (int i = 1; i <= d; i++) {
        int s = i < k ? i : (i == k ? d : i - 1);
        r.sigma[i - 1] = s;
        r.q[s - 1] = p.p(i);
    }
    return r;
}

std::vector<Rational> restore_spectrum(const Reindexed &r) {
    std::vector<Rational> p(r.q.size());
    for (size_t i = 0; i < r.q.size(); i++) {
        p[i] = r.q[r.sigma[i] - 1];
    }
    return p;
}

std::string to_string(const RemovalVector &r) {
    return to_string(YoungDiagram(r));
}

RemovalVector parse_removal(const std::string &text) {
    RemovalVector r;
    for (const Rational &x : parse_rational_list(text)) {
        if (x.get_den() != 1 || x < 0) {
            throw std::invalid_argument("removal counts must be nonnegative integers: '" + text + "'");
        }
        r.push_back(x.get_num().get_si());
    }
    return r;
}

long removal_total(const RemovalVector &r) {
    long s = 0;
    for (long x : r) {
        s += x;
    }
    return s;
}

YoungDiagram apply_removal(const YoungDiagram &shape, const RemovalVector &r) {
    if (static_cast<int>(r.size()) != shape.d()) {
        throw std::invalid_argument("removal vector length must equal the row count");
    }
    YoungDiagram out = shape;
    for (int i = 0; i < shape.d(); i++) {
        out.rows[i] -= r[i];
    }
    return out;
}

bool is_valid_removal(const YoungDiagram &shape, const RemovalVector &r) {
    int d = shape.d();
    if (static_cast<int>(r.size()) != d) {
        return false;
    }
    for (int i = 1; i <= d; i++) {
        if (r[i - 1] < 0) {
            return false;
        }
        if (i < d && r[i - 1] > shape.gap(i, i + 1)) {
            return false;
        }
    }
    return true;
}

int terminal_index(const YoungDiagram &shape, int k, long m) {
    int d = shape.d();
    for (int i = k; i < d; i++) {
        if (shape.gap(k, i + 1) >= m) {
            return i;
        }
    }
    return d;
}

int terminal_index_macro(const std::vector<double> &p, int k, double rate) {
    int d = static_cast<int>(p.size());
    for (int i = k; i < d; i++) {
        if (p[k - 1] - p[i] >= rate) {
            return i;
        }
    }
    return d;
}

RemovalVector overhang_removal(const YoungDiagram &shape, int k, long m) {
    int d = shape.d();
    if (k < 1 || k > d) {
        throw std::invalid_argument("target index k must lie in 1..d");
    }
    if (m < 0) {
        throw std::invalid_argument("removal count must be nonnegative");
    }
    int istar = terminal_index(shape, k, m);
    std::vector<long> mu = shape.rows;
    for (int i = k; i < istar; i++) {
        mu[i - 1] = shape.row(i + 1);
    }
    mu[istar - 1] = shape.row(k) - m;
    RemovalVector r(d);
    for (int i = 0; i < d; i++) {
        r[i] = shape.rows[i] - mu[i];
    }
    return r;
}

bool overhang_supported(const YoungDiagram &shape, int k, long m) {
    return shape.row(k) >= m;
}

namespace {

void environments_rec(const YoungDiagram &shape, int slot, long remaining, RemovalVector &cur, std::vector<RemovalVector> &out) {
    int d = shape.d();
    if (slot == d - 1) {
        cur[slot] = remaining;
        out.push_back(cur);
        return;
    }
    long cap = std::min(remaining, shape.gap(slot + 1, slot + 2));
    for (long v = cap; v >= 0; v--) {
        cur[slot] = v;
        environments_rec(shape, slot + 1, remaining - v, cur, out);
    }
    cur[slot] = 0;
}

}  // namespace

std::vector<RemovalVector> enumerate_environments(const YoungDiagram &shape, long m) {
    std::vector<RemovalVector> out;
    if (shape.d() == 0) {
        return out;
    }
    RemovalVector cur(shape.d(), 0);
    environments_rec(shape, 0, m, cur, out);
    return out;
}

}  // namespace qpa
