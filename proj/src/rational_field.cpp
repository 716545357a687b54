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

#include "octsolve/rational_field.hpp"

#include <cctype>
#include <stdexcept>

namespace octsolve {

RationalField::Element RationalField::from_int(long long n) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    return Element(z);
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero in Q");
    return a / b;
}

std::optional<RationalField::Element> RationalField::sqrt(const Element& a) const {
    if (sgn(a) < 0) return std::nullopt;
    const mpz_class& num = a.get_num();
    const mpz_class& den = a.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Element r(rn, rd);
    r.canonicalize();
    return r;
}

FieldCapabilities RationalField::capabilities() const noexcept {
    FieldCapabilities caps;
    caps.has_sqrt = true;
    caps.has_cbrt = false;
    caps.enumerable = false;
    caps.has_univariate_roots = true;
    caps.exact = true;
    caps.characteristic = 0;
    return caps;
}

RationalField::Element RationalField::parse(std::string_view text) const {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Element r(n, d);
    r.canonicalize();
    return r;
}

RationalField::Element RationalField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 6);
    Element r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace octsolve
