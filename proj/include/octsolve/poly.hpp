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

#ifndef OCTSOLVE_POLY_HPP
#define OCTSOLVE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace octsolve {

/// Univariate polynomial over F, coefficients stored lowest degree first.
/// The leading stored coefficient is never zero; the zero polynomial has no
/// coefficients.
template <Field F>
class ScalarPoly {
   public:
    using Element = element_t<F>;

    ScalarPoly() = default;
    ScalarPoly(const F& k, std::vector<Element> low_to_high) : c_(std::move(low_to_high)) { trim(k); }

    static ScalarPoly constant(const F& k, const Element& a) { return ScalarPoly(k, {a}); }
    /// x^n
    static ScalarPoly monomial(const F& k, std::size_t n, const Element& a) {
        std::vector<Element> c(n + 1, k.zero());
        c[n] = a;
        return ScalarPoly(k, std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Element>& coefficients() const noexcept { return c_; }
    const Element& leading() const { return c_.back(); }
    /// Zero past the degree.
    Element coeff(const F& k, std::size_t i) const { return i < c_.size() ? c_[i] : k.zero(); }

    Element operator()(const F& k, const Element& x) const {
        Element acc = k.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
        return acc;
    }

   private:
    void trim(const F& k) {
        while (!c_.empty() && k.is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Element> c_;
};

template <Field F>
ScalarPoly<F> poly_add(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<element_t<F>> c(n, k.zero());
    for (std::size_t i = 0; i < n; ++i) c[i] = k.add(a.coeff(k, i), b.coeff(k, i));
    return ScalarPoly<F>(k, std::move(c));
}

template <Field F>
ScalarPoly<F> poly_neg(const F& k, const ScalarPoly<F>& a) {
    std::vector<element_t<F>> c;
    c.reserve(a.coefficients().size());
    for (const auto& x : a.coefficients()) c.push_back(k.neg(x));
    return ScalarPoly<F>(k, std::move(c));
}

template <Field F>
ScalarPoly<F> poly_sub(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    return poly_add(k, a, poly_neg(k, b));
}

template <Field F>
ScalarPoly<F> poly_scale(const F& k, const ScalarPoly<F>& a, const element_t<F>& s) {
    std::vector<element_t<F>> c;
    c.reserve(a.coefficients().size());
    for (const auto& x : a.coefficients()) c.push_back(k.mul(x, s));
    return ScalarPoly<F>(k, std::move(c));
}

template <Field F>
ScalarPoly<F> poly_mul(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<element_t<F>> c(x.size() + y.size() - 1, k.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(x[i], y[j]));
    }
    return ScalarPoly<F>(k, std::move(c));
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <Field F>
std::pair<ScalarPoly<F>, ScalarPoly<F>> poly_divmod(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {ScalarPoly<F>{}, a};
    std::vector<element_t<F>> r = a.coefficients();
    const auto& d = b.coefficients();
    const std::size_t db = d.size() - 1;
    std::vector<element_t<F>> q(r.size() - db, k.zero());
    const element_t<F> lead_inv = k.inv(d.back());
    for (std::size_t i = r.size(); i-- > db;) {
        element_t<F> t = k.mul(r[i], lead_inv);
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(t, d[j]));
        r[i] = k.zero();
    }
    return {ScalarPoly<F>(k, std::move(q)), ScalarPoly<F>(k, std::move(r))};
}

/// Division known to be exact; the remainder is discarded.
template <Field F>
ScalarPoly<F> poly_exact_div(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    return poly_divmod(k, a, b).first;
}

template <Field F>
ScalarPoly<F> poly_rem(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    return poly_divmod(k, a, b).second;
}

template <Field F>
ScalarPoly<F> poly_monic(const F& k, const ScalarPoly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(k, a, k.inv(a.leading()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
ScalarPoly<F> poly_gcd(const F& k, ScalarPoly<F> a, ScalarPoly<F> b) {
    while (!b.is_zero()) {
        auto r = poly_rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(k, a);
}

template <Field F>
ScalarPoly<F> poly_derivative(const F& k, const ScalarPoly<F>& a) {
    const auto& x = a.coefficients();
    if (x.size() <= 1) return {};
    std::vector<element_t<F>> c(x.size() - 1, k.zero());
    for (std::size_t i = 1; i < x.size(); ++i) c[i - 1] = k.mul(k.from_int(static_cast<long long>(i)), x[i]);
    return ScalarPoly<F>(k, std::move(c));
}

/// a^e mod m by repeated squaring.
template <Field F>
ScalarPoly<F> poly_powmod(const F& k, ScalarPoly<F> a, std::uint64_t e, const ScalarPoly<F>& m) {
    ScalarPoly<F> acc = ScalarPoly<F>::constant(k, k.one());
    a = poly_rem(k, a, m);
    while (e > 0) {
        if (e & 1) acc = poly_rem(k, poly_mul(k, acc, a), m);
        a = poly_rem(k, poly_mul(k, a, a), m);
        e >>= 1;
    }
    return acc;
}

template <Field F>
bool poly_equal(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    if (a.degree() != b.degree()) return false;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (!k.equal(a.coefficients()[i], b.coefficients()[i])) return false;
    }
    return true;
}

namespace detail {

/// Appends "c*m" to a sum, writing "- " for negative c and dropping a unit
/// coefficient in front of a monomial.
inline void append_term(std::string& out, std::string coeff, const std::string& monomial) {
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (!out.empty()) {
        out += negative ? " - " : " + ";
    } else if (negative) {
        out += "-";
    }
    if (monomial.empty()) {
        out += coeff;
    } else if (coeff == "1") {
        out += monomial;
    } else {
        out += coeff + "*" + monomial;
    }
}

}  // namespace detail

/// "3*y^2 - y" style rendering, highest degree first.
template <Field F>
std::string poly_format(const F& k, const ScalarPoly<F>& a, const std::string& var = "y") {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coefficients().size(); i-- > 0;) {
        const auto& c = a.coefficients()[i];
        if (k.is_zero(c)) continue;
        std::string mono;
        if (i >= 1) mono = var;
        if (i >= 2) mono += "^" + std::to_string(i);
        detail::append_term(out, k.format(c), mono);
    }
    return out;
}

}  // namespace octsolve

#endif
