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

#ifndef QPA_SPECTRUM_H
#define QPA_SPECTRUM_H

#include <string>
#include <string_view>
#include <vector>

#include "qpa/rational.h"

namespace qpa {

/// Exact probability vector, sorted nonincreasing and summing to one.
class Spectrum {
   public:
    Spectrum() = default;
    /// Throws std::invalid_argument unless the entries are nonnegative,
    /// nonincreasing and sum to exactly one.
    explicit Spectrum(std::vector<Rational> probs);

    int d() const {
        return static_cast<int>(probs_.size());
    }
    /// 1-based.
    const Rational &p(int i) const {
        return probs_[i - 1];
    }
    const std::vector<Rational> &probs() const {
        return probs_;
    }
    std::vector<double> as_doubles() const;

    /// D_{i,j} = p_i - p_j.
    Rational gap(int i, int j) const {
        return p(i) - p(j);
    }
    /// True when p_k differs from both neighbours.
    bool nondegenerate_at(int k) const;
    bool nondegenerate() const;
    /// min over i != k of |D_{k,i}|.
    Rational min_gap(int k) const;

   private:
    std::vector<Rational> probs_;
};

Spectrum parse_spectrum(std::string_view text);
std::string to_string(const Spectrum &p);

/// (1 - eta (d-1)/d, eta/d, ..., eta/d).
Spectrum depolarized_spectrum(int d, const Rational &eta);

}  // namespace qpa

#endif
