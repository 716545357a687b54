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

#ifndef OCTSOLVE_RATIONAL_FIELD_HPP
#define OCTSOLVE_RATIONAL_FIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "field.hpp"

namespace octsolve {

/// Q with GMP rationals kept in lowest terms.
class RationalField {
   public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long n) const;

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const;

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }

    /// Nonnegative root when numerator and denominator are both perfect squares.
    std::optional<Element> sqrt(const Element& a) const;

    std::uint64_t characteristic() const noexcept { return 0; }
    FieldCapabilities capabilities() const noexcept;

    std::string format(const Element& a) const { return a.get_str(); }
    /// Integers or "a/b" fractions.
    Element parse(std::string_view text) const;
    /// Small fractions n/d with |n| <= 20, 1 <= d <= 6.
    Element random(std::mt19937_64& rng) const;
    std::string name() const { return "q"; }
};

}  // namespace octsolve

#endif
