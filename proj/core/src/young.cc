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

#include "qpa/young.h"

#include <sstream>
#include <stdexcept>

namespace qpa {

long YoungDiagram::size() const {
    long s = 0;
    for (long r : rows) {
        s += r;
    }
    return s;
}

bool YoungDiagram::is_dominant() const {
    for (size_t i = 1; i < rows.size(); i++) {
        if (rows[i] > rows[i - 1]) {
            return false;
        }
    }
    return true;
}

bool YoungDiagram::is_partition() const {
    return is_dominant() && (rows.empty() || rows.back() >= 0);
}

YoungDiagram parse_diagram(std::string_view text) {
    std::vector<long> rows;
    for (const Rational &x : parse_rational_list(text)) {
        if (x.get_den() != 1) {
            throw std::invalid_argument("diagram rows must be integers: '" + std::string(text) + "'");
        }
        rows.push_back(x.get_num().get_si());
    }
    YoungDiagram y(rows);
    if (!y.is_dominant()) {
        throw std::invalid_argument("diagram rows must be weakly decreasing: '" + std::string(text) + "'");
    }
    return y;
}

std::string to_string(const YoungDiagram &y) {
    std::ostringstream out;
    for (size_t i = 0; i < y.rows.size(); i++) {
        if (i) {
            out << ',';
        }
        out << y.rows[i];
    }
    return out.str();
}

namespace {

void partitions_rec(long remaining, long cap, int slot, std::vector<long> &cur, std::vector<YoungDiagram> &out) {
    int d = static_cast<int>(cur.size());
    if (slot == d) {
        if (remaining == 0) {
            out.emplace_back(cur);
        }
        return;
    }
    // The remaining slots can hold at most cap * (d - slot) boxes.
    long hi = std::min(cap, remaining);
    for (long v = hi; v >= 0; v--) {
        if (v * (d - slot) < remaining) {
            break;
        }
        cur[slot] = v;
        partitions_rec(remaining - v, v, slot + 1, cur, out);
    }
    cur[slot] = 0;
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(long n, int d) {
    if (n < 0 || d < 1) {
        throw std::invalid_argument("enumerate_diagrams needs n >= 0 and d >= 1");
    }
    std::vector<YoungDiagram> out;
    std::vector<long> cur(d, 0);
    partitions_rec(n, n, 0, cur, out);
    return out;
}

Integer specht_dim(const YoungDiagram &shape) {
    if (!shape.is_partition()) {
        throw std::invalid_argument("specht_dim needs a partition, got " + to_string(shape));
    }
    long n = shape.size();
    Integer hooks = 1;
    int d = shape.d();
    for (int i = 0; i < d; i++) {
        for (long j = 0; j < shape.rows[i]; j++) {
            long arm = shape.rows[i] - j - 1;
            long leg = 0;
            for (int r = i + 1; r < d && shape.rows[r] > j; r++) {
                leg++;
            }
            hooks *= arm + leg + 1;
        }
    }
    return factorial(n) / hooks;
}

Integer weyl_dim(const YoungDiagram &weight) {
    int d = weight.d();
    Rational r = 1;
    for (int i = 0; i < d; i++) {
        for (int j = i + 1; j < d; j++) {
            Rational factor(weight.rows[i] - weight.rows[j] + j - i, j - i);
            factor.canonicalize();
            r *= factor;
        }
    }
    return r.get_num();
}

Integer weyl_dim(const YoungDiagram &weight, int d) {
    if (weight.d() != d) {
        throw std::invalid_argument("weyl_dim: diagram " + to_string(weight) + " does not have " + std::to_string(d) + " rows");
    }
    return weyl_dim(weight);
}

GTPattern::GTPattern(std::vector<std::vector<long>> levels) : levels_(std::move(levels)) {
    for (size_t b = 0; b < levels_.size(); b++) {
        if (levels_[b].size() != b + 1) {
            throw std::invalid_argument("GT pattern level sizes must be 1..d");
        }
    }
}

long GTPattern::occupancy(int b) const {
    long s = 0;
    for (long x : levels_[b - 1]) {
        s += x;
    }
    if (b > 1) {
        for (long x : levels_[b - 2]) {
            s -= x;
        }
    }
    return s;
}

std::vector<long> GTPattern::occupancies() const {
    std::vector<long> out(d());
    for (int b = 1; b <= d(); b++) {
        out[b - 1] = occupancy(b);
    }
    return out;
}

long GTPattern::row_occupancy(int b, int l) const {
    if (l > b) {
        return 0;
    }
    if (l == b) {
        // Row b holds no letters smaller than b, so every cell counts.
        return w(b, b);
    }
    return w(l, b) - w(l, b - 1);
}

bool GTPattern::is_interlacing() const {
    for (int b = 1; b < d(); b++) {
        for (int i = 1; i <= b; i++) {
            if (!(w(i, b + 1) >= w(i, b) && w(i, b) >= w(i + 1, b + 1))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct GTWalker {
    std::vector<std::vector<long>> levels;
    const std::function<void(const GTPattern &)> &visit;

    void fill(int b, int i) {
        // Level b (1-based) entry i (1-based), bounded by level b+1.
        if (b == 0) {
            visit(GTPattern(levels));
            return;
        }
        if (i > b) {
            fill(b - 1, 1);
            return;
        }
        const std::vector<long> &up = levels[b];
        for (long v = up[i]; v <= up[i - 1]; v++) {
            levels[b - 1][i - 1] = v;
            fill(b, i + 1);
        }
    }
};

}  // namespace

void for_each_gt_pattern(const YoungDiagram &top, const std::function<void(const GTPattern &)> &visit) {
    int d = top.d();
    if (d == 0) {
        return;
    }
    if (!top.is_dominant()) {
        throw std::invalid_argument("GT patterns need a weakly decreasing top row");
    }
    GTWalker walker{std::vector<std::vector<long>>(d), visit};
    for (int b = 0; b < d; b++) {
        walker.levels[b].assign(b + 1, 0);
    }
    walker.levels[d - 1] = top.rows;
    walker.fill(d - 1, 1);
}

std::vector<GTPattern> enumerate_gt_patterns(const YoungDiagram &top) {
    std::vector<GTPattern> out;
    for_each_gt_pattern(top, [&](const GTPattern &w) {
        out.push_back(w);
    });
    return out;
}

}  // namespace qpa
