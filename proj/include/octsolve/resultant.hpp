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

#ifndef OCTSOLVE_RESULTANT_HPP
#define OCTSOLVE_RESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "fibpoly.hpp"

namespace octsolve {

/// Determinant of a square matrix over F[y] by fraction-free Bareiss
/// elimination. Every division is exact in F[y].
template <Field F>
ScalarPoly<F> bareiss_determinant(const F& k, std::vector<std::vector<ScalarPoly<F>>> m) {
    const std::size_t n = m.size();
    if (n == 0) return ScalarPoly<F>::constant(k, k.one());
    bool negate = false;
    ScalarPoly<F> prev = ScalarPoly<F>::constant(k, k.one());
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p].is_zero()) {
            std::size_t r = p + 1;
            while (r < n && m[r][p].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[p], m[r]);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                auto num = poly_sub(k, poly_mul(k, m[p][p], m[i][j]), poly_mul(k, m[i][p], m[p][j]));
                m[i][j] = poly_exact_div(k, num, prev);
            }
        }
        prev = m[p][p];
    }
    return negate ? poly_neg(k, m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Res_z(P, Q) as a polynomial in y, from the Sylvester matrix of P and Q
/// viewed as polynomials in z over F[y]. Requires both nonzero and at least
/// one of positive degree in z.
template <Field F>
ScalarPoly<F> resultant_in_z(const F& k, const BiPoly<F>& p, const BiPoly<F>& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const auto a = p.coefficients_in_z(k);
    const auto b = q.coefficients_in_z(k);
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    if (m == 0 && n == 0) throw std::invalid_argument("resultant needs a positive degree in z");
    auto power = [&](const ScalarPoly<F>& base, std::size_t e) {
        auto acc = ScalarPoly<F>::constant(k, k.one());
        for (std::size_t i = 0; i < e; ++i) acc = poly_mul(k, acc, base);
        return acc;
    };
    if (m == 0) return power(a[0], n);
    if (n == 0) return power(b[0], m);

    const std::size_t size = m + n;
    std::vector<std::vector<ScalarPoly<F>>> s(size, std::vector<ScalarPoly<F>>(size));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    }
    return bareiss_determinant(k, std::move(s));
}

template <Field F>
BiPoly<F> bi_derivative_y(const F& k, const BiPoly<F>& p) {
    BiPoly<F> out;
    for (const auto& [e, c] : p.terms()) {
        if (e.first > 0) out.add_term(k, e.first - 1, e.second, k.mul(k.from_int(e.first), c));
    }
    return out;
}

template <Field F>
BiPoly<F> bi_derivative_z(const F& k, const BiPoly<F>& p) {
    return bi_derivative_y(k, p.swapped()).swapped();
}

}  // namespace octsolve

#endif
