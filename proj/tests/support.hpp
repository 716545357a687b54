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

// Helpers shared by the unit tests.

#ifndef OCTSOLVE_TESTS_SUPPORT_HPP
#define OCTSOLVE_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "octsolve/octonion.hpp"
#include "octsolve/poly.hpp"
#include "octsolve/prime_field.hpp"
#include "octsolve/rational_field.hpp"
#include "octsolve/real_field.hpp"

namespace octsolve::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20260417);
    return r;
}

/// Runs fn(k) for GF(2), GF(3), GF(5), GF(10007), Q and R.
template <class Fn>
void for_each_field(Fn&& fn) {
    for (std::uint32_t p : {2u, 3u, 5u, 10007u}) fn(PrimeField(p));
    fn(RationalField{});
    fn(RealField{});
}

/// Every octonion over GF(p), index order as in the oracle.
inline std::vector<Octonion<PrimeField>> all_octonions(const PrimeField& k) {
    const std::uint32_t p = k.modulus();
    std::uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= p;
    std::vector<Octonion<PrimeField>> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto a = Octonion<PrimeField>::zero(k);
        std::uint64_t r = idx;
        for (std::size_t i = 8; i-- > 0;) {
            a.component(i) = Residue{static_cast<std::uint32_t>(r % p)};
            r /= p;
        }
        out.push_back(a);
    }
    return out;
}

/// Componentwise equality with a tolerance scaled by the larger magnitude
/// of the two inputs (exact on exact fields).
template <Field F>
bool close(const F& k, const Octonion<F>& a, const Octonion<F>& b, double tol = 1e-9) {
    if constexpr (std::is_same_v<F, RealField>) {
        double scale = 1;
        for (std::size_t i = 0; i < 8; ++i) scale = std::max({scale, std::fabs(a.component(i)), std::fabs(b.component(i))});
        for (std::size_t i = 0; i < 8; ++i) {
            if (std::fabs(a.component(i) - b.component(i)) > tol * scale) return false;
        }
        return true;
    } else {
        (void)tol;
        return oequal(k, a, b);
    }
}

template <Field F>
bool close(const F& k, const element_t<F>& a, const element_t<F>& b, double tol = 1e-9) {
    if constexpr (std::is_same_v<F, RealField>) {
        return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
    } else {
        (void)tol;
        return k.equal(a, b);
    }
}

/// Non-scalar octonion with the given trace and norm: (t, (-n, 0, 0); (1, 0, 0), 0).
template <Field F>
Octonion<F> with_trace_norm(const F& k, const element_t<F>& t, const element_t<F>& n) {
    return Octonion<F>::canonical(k, t, k.neg(n));
}

/// A ScalarPoly from coefficients a_0, a_1, ... given as integers.
template <Field F>
ScalarPoly<F> poly_from_ints(const F& k, std::initializer_list<long long> low_to_high) {
    std::vector<element_t<F>> c;
    for (auto x : low_to_high) c.push_back(k.from_int(x));
    return ScalarPoly<F>(k, std::move(c));
}

/// Random f with zero constant term and degree exactly d.
template <Field F>
ScalarPoly<F> random_poly(const F& k, int d) {
    std::vector<element_t<F>> c(static_cast<std::size_t>(d) + 1, k.zero());
    for (int i = 1; i <= d; ++i) c[static_cast<std::size_t>(i)] = k.random(rng());
    while (k.is_zero(c[static_cast<std::size_t>(d)])) c[static_cast<std::size_t>(d)] = k.random(rng());
    return ScalarPoly<F>(k, std::move(c));
}

}  // namespace octsolve::testing

#endif
