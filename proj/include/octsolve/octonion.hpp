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

#ifndef OCTSOLVE_OCTONION_HPP
#define OCTSOLVE_OCTONION_HPP

#include <optional>
#include <random>
#include <string>
#include <utility>

#include "linalg3.hpp"

namespace octsolve {

/// Split octonion as a Zorn vector matrix
///
///     [ alpha  u   ]
///     [ v      beta]
///
/// with alpha, beta in F and u, v in F^3.
template <Field F>
struct Octonion {
    element_t<F> alpha;
    Vec3<F> u;
    Vec3<F> v;
    element_t<F> beta;

    static Octonion zero(const F& k) { return {k.zero(), Vec3<F>::zero(k), Vec3<F>::zero(k), k.zero()}; }
    static Octonion scalar(const F& k, const element_t<F>& s) { return {s, Vec3<F>::zero(k), Vec3<F>::zero(k), s}; }
    static Octonion unit(const F& k) { return scalar(k, k.one()); }
    /// (alpha, (mu, 0, 0); (1, 0, 0), 0): trace alpha, norm -mu.
    static Octonion canonical(const F& k, const element_t<F>& alpha, const element_t<F>& mu) {
        Vec3<F> u = Vec3<F>::zero(k);
        u[0] = mu;
        return {alpha, u, Vec3<F>::basis(k, 0), k.zero()};
    }

    /// Component i of (alpha, u1, u2, u3, v1, v2, v3, beta).
    const element_t<F>& component(std::size_t i) const {
        if (i == 0) return alpha;
        if (i < 4) return u[i - 1];
        if (i < 7) return v[i - 4];
        return beta;
    }
    element_t<F>& component(std::size_t i) { return const_cast<element_t<F>&>(std::as_const(*this).component(i)); }
};

/// Basis e1, e2, u_i, v_i in that order (index 0..7), matching component().
template <Field F>
Octonion<F> basis_octonion(const F& k, std::size_t i) {
    Octonion<F> a = Octonion<F>::zero(k);
    a.component(i) = k.one();
    return a;
}

template <Field F>
Octonion<F> oadd(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    return {k.add(a.alpha, b.alpha), vadd(k, a.u, b.u), vadd(k, a.v, b.v), k.add(a.beta, b.beta)};
}

template <Field F>
Octonion<F> osub(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    return {k.sub(a.alpha, b.alpha), vsub(k, a.u, b.u), vsub(k, a.v, b.v), k.sub(a.beta, b.beta)};
}

template <Field F>
Octonion<F> oscale(const F& k, const element_t<F>& s, const Octonion<F>& a) {
    return {k.mul(s, a.alpha), vscale(k, s, a.u), vscale(k, s, a.v), k.mul(s, a.beta)};
}

template <Field F>
Octonion<F> oneg(const F& k, const Octonion<F>& a) {
    return {k.neg(a.alpha), vneg(k, a.u), vneg(k, a.v), k.neg(a.beta)};
}

/// a + s * 1
template <Field F>
Octonion<F> oadd_scalar(const F& k, const Octonion<F>& a, const element_t<F>& s) {
    return {k.add(a.alpha, s), a.u, a.v, k.add(a.beta, s)};
}

/// Zorn product:
///   alpha'' = alpha alpha' + u.v'
///   u''     = alpha u' + beta' u - v x v'
///   v''     = alpha' v + beta v' + u x u'
///   beta''  = beta beta' + v.u'
template <Field F>
Octonion<F> omul(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    return {k.add(k.mul(a.alpha, b.alpha), dot(k, a.u, b.v)),
            vsub(k, vadd(k, vscale(k, a.alpha, b.u), vscale(k, b.beta, a.u)), cross(k, a.v, b.v)),
            vadd(k, vadd(k, vscale(k, b.alpha, a.v), vscale(k, a.beta, b.v)), cross(k, a.u, b.u)),
            k.add(k.mul(a.beta, b.beta), dot(k, a.v, b.u))};
}

template <Field F>
Octonion<F> conj(const F& k, const Octonion<F>& a) {
    return {a.beta, vneg(k, a.u), vneg(k, a.v), a.alpha};
}

template <Field F>
element_t<F> trace(const F& k, const Octonion<F>& a) {
    return k.add(a.alpha, a.beta);
}

template <Field F>
element_t<F> norm(const F& k, const Octonion<F>& a) {
    return k.sub(k.mul(a.alpha, a.beta), dot(k, a.u, a.v));
}

/// q(a, b) = n(a + b) - n(a) - n(b)
template <Field F>
element_t<F> bilin(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    return k.sub(k.sub(norm(k, oadd(k, a, b)), norm(k, a)), norm(k, b));
}

/// conj(a) / n(a), or nothing when n(a) = 0 (no one-sided inverse exists).
template <Field F>
std::optional<Octonion<F>> oinverse(const F& k, const Octonion<F>& a) {
    element_t<F> n = norm(k, a);
    if (k.is_zero(n)) return std::nullopt;
    return oscale(k, k.inv(n), conj(k, a));
}

/// a^n by square-and-multiply; power-associativity makes the bracketing irrelevant.
template <Field F>
Octonion<F> power(const F& k, Octonion<F> a, unsigned n) {
    Octonion<F> acc = Octonion<F>::unit(k);
    while (n > 0) {
        if (n & 1) acc = omul(k, acc, a);
        a = omul(k, a, a);
        n >>= 1;
    }
    return acc;
}

template <Field F>
bool is_scalar(const F& k, const Octonion<F>& a) {
    return vis_zero(k, a.u) && vis_zero(k, a.v) && k.equal(a.alpha, a.beta);
}

template <Field F>
bool oequal(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    return k.equal(a.alpha, b.alpha) && vequal(k, a.u, b.u) && vequal(k, a.v, b.v) && k.equal(a.beta, b.beta);
}

/// Lexicographic on components; used to emit solutions in a fixed order.
template <Field F>
bool oless(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (k.equal(a.component(i), b.component(i))) continue;
        return k.less(a.component(i), b.component(i));
    }
    return false;
}

template <Field F>
Octonion<F> random_octonion(const F& k, std::mt19937_64& rng) {
    Octonion<F> a = Octonion<F>::zero(k);
    for (std::size_t i = 0; i < 8; ++i) a.component(i) = k.random(rng);
    return a;
}

/// "[alpha; u1,u2,u3; v1,v2,v3; beta]"
template <Field F>
std::string format_octonion(const F& k, const Octonion<F>& a) {
    std::string s = "[" + k.format(a.alpha) + "; ";
    for (std::size_t i = 0; i < 3; ++i) s += k.format(a.u[i]) + (i < 2 ? "," : "; ");
    for (std::size_t i = 0; i < 3; ++i) s += k.format(a.v[i]) + (i < 2 ? "," : "; ");
    return s + k.format(a.beta) + "]";
}

}  // namespace octsolve

#endif
