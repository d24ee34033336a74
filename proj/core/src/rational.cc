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

#include "qpa/rational.h"

#include <cctype>
#include <stdexcept>

namespace qpa {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    Integer v(std::string(s), 10);
    return negative ? Integer(-v) : v;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    size_t e = s.find_first_of("eE");
    if (e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1), whole).get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    size_t dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exponent -= static_cast<long>(s.size() - dot - 1);
    }
    if (!all_digits(digits)) {
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    Rational r{Integer(digits, 10)};
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        r /= Rational(ten_pow);
    } else {
        r *= Rational(ten_pow);
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty number");
    }
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)), text);
        Integer den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(s, text);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational &x) {
    return x.get_str();
}

double to_double(const Rational &x) {
    return x.get_d();
}

Rational power(const Rational &x, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;
}

Rational rising(const Rational &a, long m) {
    Rational r = 1;
    for (long j = 0; j < m; j++) {
        r *= a + j;
    }
    return r;
}

Rational falling(const Rational &a, long m) {
    Rational r = 1;
    for (long j = 0; j < m; j++) {
        r *= a - j;
    }
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer multiset_count(long d, long k) {
    return binomial(d + k - 1, k);
}

}  // namespace qpa
