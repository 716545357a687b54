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

#ifndef OCTSOLVE_FIBPOLY_HPP
#define OCTSOLVE_FIBPOLY_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octonion.hpp"
#include "poly.hpp"

namespace octsolve {

/// Polynomial in two variables (y, z) over F, stored as a map from
/// (deg_y, deg_z) to a nonzero coefficient. In the solver the variables are
/// (lambda, mu).
template <Field F>
class BiPoly {
   public:
    using Element = element_t<F>;
    using Exponent = std::pair<unsigned, unsigned>;

    BiPoly() = default;

    static BiPoly constant(const F& k, const Element& c) { return monomial(k, 0, 0, c); }
    static BiPoly monomial(const F& k, unsigned i, unsigned j, const Element& c) {
        BiPoly p;
        p.add_term(k, i, j, c);
        return p;
    }
    static BiPoly y(const F& k) { return monomial(k, 1, 0, k.one()); }
    static BiPoly z(const F& k) { return monomial(k, 0, 1, k.one()); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, Element>& terms() const noexcept { return terms_; }

    Element coeff(const F& k, unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? k.zero() : it->second;
    }

    void add_term(const F& k, unsigned i, unsigned j, const Element& c) {
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) terms_.erase(it);
    }

    /// -1 for the zero polynomial.
    int degree_y() const noexcept {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
        return d;
    }
    int degree_z() const noexcept {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
        return d;
    }

    Element operator()(const F& k, const Element& y, const Element& z) const {
        Element acc = k.zero();
        for (const auto& [e, c] : terms_) {
            acc = k.add(acc, k.mul(c, k.mul(field_pow(k, y, e.first), field_pow(k, z, e.second))));
        }
        return acc;
    }

    /// p(y0, z) as a polynomial in z.
    ScalarPoly<F> at_y(const F& k, const Element& y0) const {
        std::vector<Element> c(static_cast<std::size_t>(std::max(degree_z(), 0)) + 1, k.zero());
        for (const auto& [e, v] : terms_) c[e.second] = k.add(c[e.second], k.mul(v, field_pow(k, y0, e.first)));
        return ScalarPoly<F>(k, std::move(c));
    }
    /// p(y, z0) as a polynomial in y.
    ScalarPoly<F> at_z(const F& k, const Element& z0) const { return swapped().at_y(k, z0); }

    /// Coefficients in z: result[j] is the polynomial in y multiplying z^j.
    std::vector<ScalarPoly<F>> coefficients_in_z(const F& k) const {
        std::vector<std::vector<Element>> raw(static_cast<std::size_t>(degree_z() + 1));
        for (const auto& [e, c] : terms_) {
            auto& row = raw[e.second];
            if (row.size() <= e.first) row.resize(e.first + 1, k.zero());
            row[e.first] = c;
        }
        std::vector<ScalarPoly<F>> out;
        for (auto& row : raw) out.emplace_back(k, std::move(row));
        return out;
    }

    BiPoly swapped() const {
        BiPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.second, e.first}, c);
        return p;
    }

    /// Applies a coefficient map into another field (zero images are dropped).
    template <Field G, class Map>
    BiPoly<G> map_coefficients(const G& g, Map&& map) const {
        BiPoly<G> p;
        for (const auto& [e, c] : terms_) p.add_term(g, e.first, e.second, map(c));
        return p;
    }

   private:
    std::map<Exponent, Element> terms_;
};

template <Field F>
BiPoly<F> bi_add(const F& k, BiPoly<F> a, const BiPoly<F>& b) {
    for (const auto& [e, c] : b.terms()) a.add_term(k, e.first, e.second, c);
    return a;
}

template <Field F>
BiPoly<F> bi_scale(const F& k, const element_t<F>& s, const BiPoly<F>& a) {
    BiPoly<F> out;
    for (const auto& [e, c] : a.terms()) out.add_term(k, e.first, e.second, k.mul(s, c));
    return out;
}

template <Field F>
BiPoly<F> bi_sub(const F& k, const BiPoly<F>& a, const BiPoly<F>& b) {
    return bi_add(k, a, bi_scale(k, k.neg(k.one()), b));
}

template <Field F>
BiPoly<F> bi_mul(const F& k, const BiPoly<F>& a, const BiPoly<F>& b) {
    BiPoly<F> out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out.add_term(k, ea.first + eb.first, ea.second + eb.second, k.mul(ca, cb));
        }
    }
    return out;
}

template <Field F>
bool bi_equal(const F& k, const BiPoly<F>& a, const BiPoly<F>& b) {
    return bi_sub(k, a, b).is_zero();
}

template <Field F>
std::string bi_format(const F& k, const BiPoly<F>& p, const std::string& y = "y", const std::string& z = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        if (e.first > 0) mono = y + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) mono += (mono.empty() ? "" : "*") + z + (e.second > 1 ? "^" + std::to_string(e.second) : "");
        detail::append_term(out, k.format(c), mono);
    }
    return out;
}

/// Generalized Fibonacci polynomials: p_{-1} = 0, p_0 = 1,
/// p_{k+1} = y p_k + z p_{k-1}. Throws std::invalid_argument for n < -1.
template <Field F>
BiPoly<F> fib(const F& k, int n) {
    if (n < -1) throw std::invalid_argument("fib index must be >= -1");
    BiPoly<F> prev;                           // p_{-1}
    BiPoly<F> cur = BiPoly<F>::constant(k, k.one());  // p_0
    if (n == -1) return prev;
    const auto y = BiPoly<F>::y(k);
    const auto z = BiPoly<F>::z(k);
    for (int i = 0; i < n; ++i) {
        auto next = bi_add(k, bi_mul(k, y, cur), bi_mul(k, z, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// p_{-1}(y, z), ..., p_{n}(y, z) evaluated at a point; result[i] = p_{i-1}.
template <Field F>
std::vector<element_t<F>> fib_values(const F& k, int n, const element_t<F>& y, const element_t<F>& z) {
    std::vector<element_t<F>> out{k.zero(), k.one()};
    for (int i = 0; i < n; ++i) {
        out.push_back(k.add(k.mul(y, out[out.size() - 1]), k.mul(z, out[out.size() - 2])));
    }
    return out;
}

/// f(y) = a_n y^n + ... + a_1 y must be nonzero with zero constant term.
template <Field F>
void require_solvable_poly(const F& k, const ScalarPoly<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
    if (!k.is_zero(f.coeff(k, 0))) throw std::invalid_argument("constant term must be zero");
}

/// f^(y, z) = sum_k a_k p_{k-1}(y, z)
template <Field F>
BiPoly<F> fhat(const F& k, const ScalarPoly<F>& f) {
    require_solvable_poly(k, f);
    BiPoly<F> out;
    for (int i = 1; i <= f.degree(); ++i) out = bi_add(k, out, bi_scale(k, f.coeff(k, i), fib(k, i - 1)));
    return out;
}

/// f_check(y, z) = sum_k a_k p_{k-2}(y, z)
template <Field F>
BiPoly<F> fcheck(const F& k, const ScalarPoly<F>& f) {
    require_solvable_poly(k, f);
    BiPoly<F> out;
    for (int i = 1; i <= f.degree(); ++i) out = bi_add(k, out, bi_scale(k, f.coeff(k, i), fib(k, i - 2)));
    return out;
}

/// (f^(y, z), f_check(y, z)) at a point, via the recurrence.
template <Field F>
std::pair<element_t<F>, element_t<F>> fhat_fcheck_values(const F& k, const ScalarPoly<F>& f, const element_t<F>& y,
                                                         const element_t<F>& z) {
    auto p = fib_values(k, f.degree(), y, z);
    element_t<F> hat = k.zero(), check = k.zero();
    for (int i = 1; i <= f.degree(); ++i) {
        const auto& a = f.coefficients()[static_cast<std::size_t>(i)];
        hat = k.add(hat, k.mul(a, p[static_cast<std::size_t>(i)]));
        check = k.add(check, k.mul(a, p[static_cast<std::size_t>(i - 1)]));
    }
    return {hat, check};
}

/// f(a) = f^(alpha, beta) a + f_check(alpha, beta) beta 1 with alpha = tr(a)
/// and beta = -n(a).
template <Field F>
Octonion<F> eval_f_at_octonion(const F& k, const ScalarPoly<F>& f, const Octonion<F>& a) {
    require_solvable_poly(k, f);
    const auto alpha = trace(k, a);
    const auto beta = k.neg(norm(k, a));
    auto [hat, check] = fhat_fcheck_values(k, f, alpha, beta);
    return oadd_scalar(k, oscale(k, hat, a), k.mul(check, beta));
}

/// sum_k a_k a^k by repeated left multiplication, no closed forms involved.
template <Field F>
Octonion<F> eval_f_direct(const F& k, const ScalarPoly<F>& f, const Octonion<F>& a) {
    Octonion<F> acc = Octonion<F>::zero(k);
    Octonion<F> pw = a;
    for (int i = 1; i <= f.degree(); ++i) {
        if (i > 1) pw = omul(k, a, pw);
        acc = oadd(k, acc, oscale(k, f.coeff(k, static_cast<std::size_t>(i)), pw));
    }
    return oadd_scalar(k, acc, f.coeff(k, 0));
}

}  // namespace octsolve

#endif
