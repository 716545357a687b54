/*
   Copyright 2026 The octsolve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "octsolve/prime_field.hpp"

#include <charconv>
#include <stdexcept>

namespace octsolve {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    }
}

PrimeField::Element PrimeField::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a.value == 0) throw std::domain_error("division by zero in " + name());
    // extended Euclid on signed 64-bit values
    std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return from_int(s0);
}

std::optional<PrimeField::Element> PrimeField::sqrt(Element a) const {
    if (a.value == 0 || p_ == 2) return a;
    auto power = [this](Element b, std::uint64_t e) {
        Element acc = one();
        while (e > 0) {
            if (e & 1) acc = mul(acc, b);
            b = mul(b, b);
            e >>= 1;
        }
        return acc;
    };
    if (power(a, (p_ - 1) / 2) != one()) return std::nullopt;

    // p - 1 = q * 2^s with q odd
    std::uint64_t q = p_ - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Element z{2};
    while (power(z, (p_ - 1) / 2) == one()) z.value++;

    Element c = power(z, q);
    Element t = power(a, q);
    Element r = power(a, (q + 1) / 2);
    unsigned m = s;
    while (t != one()) {
        unsigned i = 0;
        Element t2 = t;
        while (t2 != one()) {
            t2 = mul(t2, t2);
            ++i;
        }
        Element b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Element other = neg(r);
    return other < r ? other : r;
}

FieldCapabilities PrimeField::capabilities() const noexcept {
    FieldCapabilities caps;
    caps.has_sqrt = true;
    caps.has_cbrt = false;
    caps.enumerable = true;
    caps.has_univariate_roots = true;
    caps.exact = true;
    caps.characteristic = p_;
    return caps;
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
    long long n = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("not an integer literal for " + name() + ": '" + std::string(text) + "'");
    }
    return from_int(n);
}

PrimeField::Element PrimeField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return {dist(rng)};
}

}  // namespace octsolve
