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

#include "qpa/spectrum.h"

#include <stdexcept>

namespace qpa {

Spectrum::Spectrum(std::vector<Rational> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("spectrum must have at least one entry");
    }
    Rational total = 0;
    for (size_t i = 0; i < probs_.size(); i++) {
        if (probs_[i] < 0) {
            throw std::invalid_argument("spectrum entries must be nonnegative");
        }
        if (i > 0 && probs_[i] > probs_[i - 1]) {
            throw std::invalid_argument("spectrum must be sorted nonincreasing");
        }
        total += probs_[i];
    }
    if (total != 1) {
        throw std::invalid_argument("spectrum must sum to 1, got " + to_string(total));
    }
}

std::vector<double> Spectrum::as_doubles() const {
    std::vector<double> out;
    out.reserve(probs_.size());
    for (const Rational &x : probs_) {
        out.push_back(to_double(x));
    }
    return out;
}

bool Spectrum::nondegenerate_at(int k) const {
    if (k < 1 || k > d()) {
        return false;
    }
    if (k > 1 && p(k - 1) == p(k)) {
        return false;
    }
    if (k < d() && p(k + 1) == p(k)) {
        return false;
    }
    return true;
}

bool Spectrum::nondegenerate() const {
    for (int i = 1; i < d(); i++) {
        if (p(i) == p(i + 1)) {
            return false;
        }
    }
    return true;
}

Rational Spectrum::min_gap(int k) const {
    Rational best = -1;
    for (int i = 1; i <= d(); i++) {
        if (i == k) {
            continue;
        }
        Rational g = abs(gap(k, i));
        if (best < 0 || g < best) {
            best = g;
        }
    }
    return best;
}

Spectrum parse_spectrum(std::string_view text) {
    return Spectrum(parse_rational_list(text));
}

std::string to_string(const Spectrum &p) {
    std::string out;
    for (int i = 1; i <= p.d(); i++) {
        if (i > 1) {
            out += ',';
        }
        out += to_string(p.p(i));
    }
    return out;
}

Spectrum depolarized_spectrum(int d, const Rational &eta) {
    std::vector<Rational> probs(d, eta / d);
    probs[0] = 1 - eta * (d - 1) / d;
    return Spectrum(probs);
}

}  // namespace qpa
