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

#include "octsolve/real_field.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace octsolve {

RealField::Element RealField::inv(Element a) const {
    if (a == 0.0) throw std::domain_error("division by zero in R");
    return 1.0 / a;
}

RealField::Element RealField::div(Element a, Element b) const {
    if (b == 0.0) throw std::domain_error("division by zero in R");
    return a / b;
}

std::optional<RealField::Element> RealField::sqrt(Element a) const {
    if (is_zero(a)) return 0.0;
    if (a < 0) return std::nullopt;
    return std::sqrt(a);
}

FieldCapabilities RealField::capabilities() const noexcept {
    FieldCapabilities caps;
    caps.has_sqrt = true;
    caps.has_cbrt = true;
    caps.enumerable = false;
    caps.has_univariate_roots = true;
    caps.exact = false;
    caps.characteristic = 0;
    return caps;
}

std::string RealField::format(Element a) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

RealField::Element RealField::parse(std::string_view text) const {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw std::invalid_argument("not a real literal: '" + std::string(text) + "'");
    }
    return value;
}

RealField::Element RealField::random(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    return dist(rng);
}

mpq_class RealField::to_rational(Element a) {
    if (!std::isfinite(a)) throw std::domain_error("non-finite real has no exact rational value");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), a);
    return q;
}

}  // namespace octsolve
