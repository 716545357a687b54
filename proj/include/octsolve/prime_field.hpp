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

#ifndef OCTSOLVE_PRIME_FIELD_HPP
#define OCTSOLVE_PRIME_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "field.hpp"

namespace octsolve {

/// Least nonnegative representative of a residue class mod p.
struct Residue {
    std::uint32_t value = 0;

    friend constexpr bool operator==(Residue, Residue) = default;
    friend constexpr auto operator<=>(Residue, Residue) = default;
};

/// GF(p) for a prime p < 2^31.
class PrimeField {
   public:
    using Element = Residue;

    /// Throws std::invalid_argument unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {1}; }
    Element from_int(long long n) const noexcept;

    Element add(Element a, Element b) const noexcept {
        std::uint32_t s = a.value + b.value;
        return {s >= p_ ? s - p_ : s};
    }
    Element sub(Element a, Element b) const noexcept { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
    Element mul(Element a, Element b) const noexcept {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    Element neg(Element a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
    /// Throws std::domain_error on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const noexcept { return a.value == 0; }
    bool equal(Element a, Element b) const noexcept { return a == b; }
    bool less(Element a, Element b) const noexcept { return a < b; }

    /// Tonelli-Shanks. Of the two roots the least representative is returned.
    std::optional<Element> sqrt(Element a) const;

    std::uint64_t characteristic() const noexcept { return p_; }
    FieldCapabilities capabilities() const noexcept;

    std::uint64_t order() const noexcept { return p_; }
    Element element(std::uint64_t i) const noexcept { return {static_cast<std::uint32_t>(i)}; }

    std::string format(Element a) const { return std::to_string(a.value); }
    /// Accepts any (possibly negative) decimal integer and reduces it mod p.
    Element parse(std::string_view text) const;
    Element random(std::mt19937_64& rng) const;
    std::string name() const { return "gf:" + std::to_string(p_); }

   private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace octsolve

#endif
