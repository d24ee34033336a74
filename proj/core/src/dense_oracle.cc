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

#include "qpa/dense_oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qpa {

namespace {

using Key = std::vector<int>;
using Tensor = std::map<Key, Rational>;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

void add_to(Tensor &t, const Key &key, const Rational &c) {
    auto [it, fresh] = t.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) {
            t.erase(it);
        }
    }
}

// Moves one letter `from` to `to` in every possible position.
Tensor shift_letter(const Tensor &v, int from, int to) {
    Tensor out;
    for (const auto &[key, c] : v) {
        for (size_t pos = 0; pos < key.size(); pos++) {
            if (key[pos] == from) {
                Key k2 = key;
                k2[pos] = to;
                add_to(out, k2, c);
            }
        }
    }
    return out;
}

Rational dot(const Tensor &a, const Tensor &b) {
    const Tensor &small = a.size() <= b.size() ? a : b;
    const Tensor &large = a.size() <= b.size() ? b : a;
    Rational s = 0;
    for (const auto &[key, c] : small) {
        auto it = large.find(key);
        if (it != large.end()) {
            s += c * it->second;
        }
    }
    return s;
}

std::vector<long> weight_of(const Key &key, int d) {
    std::vector<long> w(d, 0);
    for (int x : key) {
        w[x]++;
    }
    return w;
}

// Irrep realized in (C^d)^{(x)N}. Basis vectors are kept in echelon form
// inside each weight space: each has a distinct pivot, its smallest key.
struct Module {
    int d = 0;
    std::vector<Tensor> basis;
    std::vector<std::vector<long>> weights;
    std::map<std::vector<long>, std::map<Key, int>> pivots;

    // Coefficients of v in the basis, or nothing when v leaves the span.
    bool reduce(Tensor v, std::map<int, Rational> *coeffs, Tensor *rest) const {
        if (v.empty()) {
            *rest = v;
            return true;
        }
        auto space = pivots.find(weight_of(v.begin()->first, d));
        while (!v.empty()) {
            if (space == pivots.end()) {
                break;
            }
            const auto &[key, c] = *v.begin();
            auto hit = space->second.find(key);
            if (hit == space->second.end()) {
                break;
            }
            const Tensor &b = basis[hit->second];
            Rational f = c / b.begin()->second;
            if (coeffs) {
                (*coeffs)[hit->second] += f;
            }
            for (const auto &[bk, bc] : b) {
                add_to(v, bk, -f * bc);
            }
        }
        *rest = std::move(v);
        return rest->empty();
    }

    bool insert(const Tensor &v) {
        Tensor rest;
        if (reduce(v, nullptr, &rest)) {
            return false;
        }
        std::vector<long> w = weight_of(rest.begin()->first, d);
        pivots[w][rest.begin()->first] = static_cast<int>(basis.size());
        basis.push_back(std::move(rest));
        weights.push_back(w);
        return true;
    }

    Vec coords(const Tensor &v) const {
        std::map<int, Rational> c;
        Tensor rest;
        if (!reduce(v, &c, &rest)) {
            throw std::logic_error("dense oracle: vector left its module");
        }
        Vec out(basis.size(), 0);
        for (const auto &[i, x] : c) {
            out[i] = x;
        }
        return out;
    }

    size_t dim() const {
        return basis.size();
    }
};

// Product of antisymmetrized columns: the highest weight vector for a
// partition, then closed under the lowering operators.
Module realize(const YoungDiagram &nu) {
    int d = nu.d();
    Module mod;
    mod.d = d;
    Tensor hw;
    hw[Key{}] = 1;
    long width = nu.rows.empty() ? 0 : nu.rows[0];
    for (long c = 0; c < width; c++) {
        int h = 0;
        while (h < d && nu.rows[h] > c) {
            h++;
        }
        std::vector<int> perm(h);
        std::iota(perm.begin(), perm.end(), 0);
        Tensor next;
        do {
            int inversions = 0;
            for (int a = 0; a < h; a++) {
                for (int b = a + 1; b < h; b++) {
                    inversions += perm[a] > perm[b];
                }
            }
            for (const auto &[key, x] : hw) {
                Key k2 = key;
                k2.insert(k2.end(), perm.begin(), perm.end());
                add_to(next, k2, inversions % 2 ? Rational(-x) : x);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        hw = std::move(next);
    }
    mod.insert(hw);
    for (size_t idx = 0; idx < mod.basis.size(); idx++) {
        for (int i = 0; i + 1 < d; i++) {
            Tensor v = shift_letter(mod.basis[idx], i, i + 1);
            if (!v.empty()) {
                mod.insert(v);
            }
        }
    }
    return mod;
}

// Matrix of a letter shift in module coordinates, column j = image of b_j.
Mat shift_matrix(const Module &mod, int from, int to) {
    size_t n = mod.dim();
    Mat out(n, Vec(n, 0));
    for (size_t j = 0; j < n; j++) {
        Vec c = mod.coords(shift_letter(mod.basis[j], from, to));
        for (size_t i = 0; i < n; i++) {
            out[i][j] = c[i];
        }
    }
    return out;
}

Mat gram(const Module &mod) {
    size_t n = mod.dim();
    Mat g(n, Vec(n, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            if (mod.weights[i] == mod.weights[j]) {
                g[i][j] = g[j][i] = dot(mod.basis[i], mod.basis[j]);
            }
        }
    }
    return g;
}

Mat inverse(Mat a) {
    size_t n = a.size();
    Mat inv(n, Vec(n, 0));
    for (size_t i = 0; i < n; i++) {
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            piv++;
        }
        if (piv == n) {
            throw std::logic_error("dense oracle: singular Gram matrix");
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = a[col][col];
        for (size_t j = 0; j < n; j++) {
            a[col][j] /= s;
            inv[col][j] /= s;
        }
        for (size_t r = 0; r < n; r++) {
            if (r != col && a[r][col] != 0) {
                Rational f = a[r][col];
                for (size_t j = 0; j < n; j++) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    return inv;
}

// Null space of a (rows x cols) by reduced row echelon form.
std::vector<Vec> kernel(Mat a, size_t cols) {
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < a.size(); col++) {
        size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) {
            piv++;
        }
        if (piv == a.size()) {
            continue;
        }
        std::swap(a[piv], a[row]);
        Rational s = a[row][col];
        for (auto &x : a[row]) {
            x /= s;
        }
        for (size_t r = 0; r < a.size(); r++) {
            if (r != row && a[r][col] != 0) {
                Rational f = a[r][col];
                for (size_t j = 0; j < cols; j++) {
                    a[r][j] -= f * a[row][j];
                }
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        row++;
    }
    std::vector<Vec> out;
    for (size_t free = 0; free < cols; free++) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) {
            continue;
        }
        Vec v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); r++) {
            v[pivot_col[r]] = -a[r][free];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Operator X (x) 1 + 1 (x) Y on product coordinates a * nb + s.
Vec apply_sum(const Mat &x, const Mat &y, const Vec &v, size_t na, size_t nb) {
    Vec out(na * nb, 0);
    for (size_t a = 0; a < na; a++) {
        for (size_t s = 0; s < nb; s++) {
            const Rational &c = v[a * nb + s];
            if (c == 0) {
                continue;
            }
            for (size_t a2 = 0; a2 < na; a2++) {
                if (x[a2][a] != 0) {
                    out[a2 * nb + s] += x[a2][a] * c;
                }
            }
            for (size_t s2 = 0; s2 < nb; s2++) {
                if (y[s2][s] != 0) {
                    out[a * nb + s2] += y[s2][s] * c;
                }
            }
        }
    }
    return out;
}

// Operator X (x) Y on product coordinates.
Vec apply_kron(const Mat &x, const Mat &y, const Vec &v, size_t na, size_t nb) {
    Vec half(na * nb, 0);
    for (size_t a = 0; a < na; a++) {
        for (size_t s = 0; s < nb; s++) {
            for (size_t s2 = 0; s2 < nb; s2++) {
                if (y[s][s2] != 0 && v[a * nb + s2] != 0) {
                    half[a * nb + s] += y[s][s2] * v[a * nb + s2];
                }
            }
        }
    }
    Vec out(na * nb, 0);
    for (size_t a = 0; a < na; a++) {
        for (size_t a2 = 0; a2 < na; a2++) {
            if (x[a][a2] == 0) {
                continue;
            }
            for (size_t s = 0; s < nb; s++) {
                out[a * nb + s] += x[a][a2] * half[a2 * nb + s];
            }
        }
    }
    return out;
}

Rational inner(const Vec &a, const Vec &b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

Mat identity(size_t n) {
    Mat m(n, Vec(n, 0));
    for (size_t i = 0; i < n; i++) {
        m[i][i] = 1;
    }
    return m;
}

}  // namespace

std::optional<Rational> dense_two_copy_oracle(const YoungDiagram &sigma, const YoungDiagram &output, const YoungDiagram &environment,
                                              int k, const Spectrum &p, Objective objective) {
    int d = p.d();
    if (sigma.size() != 2) {
        throw std::invalid_argument("dense oracle handles two input copies only");
    }
    if (sigma.d() != d || output.d() != d || environment.d() != d) {
        throw std::invalid_argument("dense oracle: every label needs d rows");
    }
    if (!sigma.is_partition() || !output.is_partition() || !environment.is_dominant()) {
        throw std::invalid_argument("dense oracle: labels must be dominant");
    }
    if (k < 1 || k > d) {
        throw std::invalid_argument("dense oracle: target index out of range");
    }
    for (const Rational &x : p.probs()) {
        if (x <= 0) {
            throw std::invalid_argument("dense oracle needs a full-rank spectrum");
        }
    }
    long shift = std::max(0L, -environment.rows[d - 1]);
    YoungDiagram nu = environment;
    for (long &r : nu.rows) {
        r += shift;
    }
    Module env = realize(nu);
    Module out = realize(output);
    size_t na = env.dim();
    size_t nb = out.dim();
    size_t np = na * nb;

    std::vector<Mat> raise_env, raise_out, lower_env, lower_out;
    for (int i = 0; i + 1 < d; i++) {
        raise_env.push_back(shift_matrix(env, i + 1, i));
        raise_out.push_back(shift_matrix(out, i + 1, i));
        lower_env.push_back(shift_matrix(env, i, i + 1));
        lower_out.push_back(shift_matrix(out, i, i + 1));
    }

    // Highest weight vectors of weight sigma + shift.
    std::vector<long> target = sigma.rows;
    for (long &t : target) {
        t += shift;
    }
    std::vector<size_t> slots;
    for (size_t a = 0; a < na; a++) {
        for (size_t s = 0; s < nb; s++) {
            std::vector<long> w = env.weights[a];
            for (int i = 0; i < d; i++) {
                w[i] += out.weights[s][i];
            }
            if (w == target) {
                slots.push_back(a * nb + s);
            }
        }
    }
    if (slots.empty()) {
        return std::nullopt;
    }
    Mat constraints;
    for (int i = 0; i + 1 < d; i++) {
        std::vector<Vec> images;
        for (size_t slot : slots) {
            Vec e(np, 0);
            e[slot] = 1;
            images.push_back(apply_sum(raise_env[i], raise_out[i], e, na, nb));
        }
        for (size_t r = 0; r < np; r++) {
            Vec row(slots.size(), 0);
            bool any = false;
            for (size_t c = 0; c < slots.size(); c++) {
                row[c] = images[c][r];
                any = any || row[c] != 0;
            }
            if (any) {
                constraints.push_back(std::move(row));
            }
        }
    }
    std::vector<Vec> hw = kernel(constraints, slots.size());
    if (hw.empty()) {
        return std::nullopt;
    }
    if (hw.size() > 1) {
        throw std::logic_error("dense oracle: sector occurs with multiplicity");
    }

    // Submodule spanned by lowering the highest weight vector.
    std::vector<Vec> sub;
    std::map<size_t, size_t> sub_pivot;
    auto try_insert = [&](Vec v) {
        for (;;) {
            size_t lead = 0;
            while (lead < np && v[lead] == 0) {
                lead++;
            }
            if (lead == np) {
                return;
            }
            auto hit = sub_pivot.find(lead);
            if (hit == sub_pivot.end()) {
                sub_pivot[lead] = sub.size();
                sub.push_back(std::move(v));
                return;
            }
            const Vec &b = sub[hit->second];
            Rational f = v[lead] / b[lead];
            for (size_t j = 0; j < np; j++) {
                if (b[j] != 0) {
                    v[j] -= f * b[j];
                }
            }
        }
    };
    Vec top(np, 0);
    for (size_t c = 0; c < slots.size(); c++) {
        top[slots[c]] = hw[0][c];
    }
    try_insert(top);
    for (size_t idx = 0; idx < sub.size(); idx++) {
        for (int i = 0; i + 1 < d; i++) {
            try_insert(apply_sum(lower_env[i], lower_out[i], sub[idx], na, nb));
        }
    }

    Mat g_env = gram(env);
    Mat g_out = gram(out);

    // Target observable compressed to the output module.
    Mat k_out(nb, Vec(nb, 0));
    for (size_t s = 0; s < nb; s++) {
        for (size_t s2 = 0; s2 < nb; s2++) {
            Rational x = 0;
            if (objective == Objective::all_site) {
                Key all(static_cast<size_t>(output.size()), k - 1);
                auto i1 = out.basis[s].find(all);
                auto i2 = out.basis[s2].find(all);
                if (i1 != out.basis[s].end() && i2 != out.basis[s2].end()) {
                    x = i1->second * i2->second;
                }
            } else {
                for (const auto &[key, c] : out.basis[s]) {
                    if (!key.empty() && key[0] == k - 1) {
                        auto it = out.basis[s2].find(key);
                        if (it != out.basis[s2].end()) {
                            x += c * it->second;
                        }
                    }
                }
            }
            k_out[s][s2] = x;
        }
    }
    Mat g_out_inv = inverse(g_out);
    Mat q_out(nb, Vec(nb, 0));
    for (size_t i = 0; i < nb; i++) {
        for (size_t j = 0; j < nb; j++) {
            for (size_t l = 0; l < nb; l++) {
                q_out[i][j] += g_out_inv[i][l] * k_out[l][j];
            }
        }
    }

    // Input state diag(p) acting on the product; the determinant power from
    // the shift is a common scalar and drops out of the ratio.
    Vec diag(np, 0);
    for (size_t a = 0; a < na; a++) {
        for (size_t s = 0; s < nb; s++) {
            Rational w = 1;
            for (int i = 0; i < d; i++) {
                w *= power(p.p(i + 1), static_cast<unsigned long>(env.weights[a][i] + out.weights[s][i]));
            }
            diag[a * nb + s] = w;
        }
    }
    auto scale = [&](const Vec &v) {
        Vec r(np);
        for (size_t i = 0; i < np; i++) {
            r[i] = diag[i] * v[i];
        }
        return r;
    };

    size_t r = sub.size();
    std::vector<Vec> g_sub(r);
    for (size_t j = 0; j < r; j++) {
        g_sub[j] = apply_kron(g_env, g_out, sub[j], na, nb);
    }
    Mat m(r, Vec(r, 0));
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            m[i][j] = inner(sub[i], g_sub[j]);
        }
    }
    Mat m_inv = inverse(m);
    Mat id_env = identity(na);
    Mat num(r, Vec(r, 0));
    Mat den(r, Vec(r, 0));
    for (size_t j = 0; j < r; j++) {
        Vec dv = scale(sub[j]);
        Vec kdv = apply_kron(id_env, q_out, dv, na, nb);
        for (size_t i = 0; i < r; i++) {
            den[i][j] = inner(g_sub[i], dv);
            num[i][j] = inner(g_sub[i], kdv);
        }
    }
    Rational tr_num = 0;
    Rational tr_den = 0;
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            tr_num += m_inv[i][j] * num[j][i];
            tr_den += m_inv[i][j] * den[j][i];
        }
    }
    return tr_num / tr_den;
}

std::optional<Rational> dense_two_copy_oracle(const YoungDiagram &sigma, long m, const YoungDiagram &environment, int k, const Spectrum &p,
                                              Objective objective) {
    std::vector<long> rows(p.d(), 0);
    rows[0] = m;
    return dense_two_copy_oracle(sigma, YoungDiagram(rows), environment, k, p, objective);
}

}  // namespace qpa
