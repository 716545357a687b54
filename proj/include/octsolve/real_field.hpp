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

#ifndef OCTSOLVE_REAL_FIELD_HPP
#define OCTSOLVE_REAL_FIELD_HPP

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "field.hpp"

namespace octsolve {

/// R as IEEE doubles. One relative tolerance decides equality, root
/// acceptance and residual checks: a == b iff |a - b| <= eps * max(1, |a|, |b|).
class RealField {
   public:
    using Element = double;

    static constexpr double kDefaultTolerance = 1e-9;

    explicit RealField(double tolerance = kDefaultTolerance) : eps_(tolerance) {}

    Element zero() const noexcept { return 0.0; }
    Element one() const noexcept { return 1.0; }
    Element from_int(long long n) const noexcept { return static_cast<double>(n); }

    Element add(Element a, Element b) const noexcept { return a + b; }
    Element sub(Element a, Element b) const noexcept { return a - b; }
    Element mul(Element a, Element b) const noexcept { return a * b; }
    Element neg(Element a) const noexcept { return -a; }
    Element inv(Element a) const;
    Element div(Element a, Element b) const;

    bool is_zero(Element a) const noexcept { return std::fabs(a) <= eps_; }
    bool equal(Element a, Element b) const noexcept {
        return std::fabs(a - b) <= eps_ * std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    }
    bool less(Element a, Element b) const noexcept { return a < b; }

    /// Nonnegative root; values within tolerance of zero count as zero.
    std::optional<Element> sqrt(Element a) const;
    Element cbrt(Element a) const noexcept { return std::cbrt(a); }
    Element abs(Element a) const noexcept { return std::fabs(a); }
    double to_double(Element a) const noexcept { return a; }
    double tolerance() const noexcept { return eps_; }

    std::uint64_t characteristic() const noexcept { return 0; }
    FieldCapabilities capabilities() const noexcept;

    std::string format(Element a) const;
    Element parse(std::string_view text) const;
    /// Uniform on [-10, 10].
    Element random(std::mt19937_64& rng) const;
    std::string name() const { return "r"; }

    /// Exact conversions used to run root isolation in exact arithmetic.
    static mpq_class to_rational(Element a);
    static Element from_rational(const mpq_class& q) { return q.get_d(); }

   private:
    double eps_;
};

}  // namespace octsolve

#endif
