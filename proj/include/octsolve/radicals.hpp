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

#ifndef OCTSOLVE_RADICALS_HPP
#define OCTSOLVE_RADICALS_HPP

#include <stdexcept>
#include <string>
#include <type_traits>

#include "real_field.hpp"
#include "solver.hpp"

namespace octsolve {

/// Which closed form produced a square-root set.
enum class SqrtBranch {
    Scalar,               ///< c = gamma 1
    BothSquares,          ///< tr(c) +- 2 sqrt(n(c)) both nonzero squares
    AlphaSquare,          ///< only tr(c) + 2 sqrt(n(c)) is a nonzero square
    BetaSquare,           ///< only tr(c) - 2 sqrt(n(c)) is a nonzero square
    NeitherSquare,
    NormNotSquare,
    Char2TraceNonzero,    ///< tr(c) and n(c) both squares: one root
    Char2NotSquare,       ///< tr(c) != 0 but tr(c) or n(c) not a square
    Char2Traceless,
};

enum class CbrtBranch {
    Scalar,
    TraceNonzero,
    TracelessPositive,
    TracelessZero,
    TracelessNegative,
};

std::string to_string(SqrtBranch b);
std::string to_string(CbrtBranch b);

template <Field F, class Branch>
struct RadicalResult {
    SolutionSet<F> solutions;
    Branch branch;
};

namespace detail {

template <Field F>
bool is_nonzero_square(const F& k, const element_t<F>& a) {
    return !k.is_zero(a) && k.sqrt(a).has_value();
}

/// Adds x when x^d == c (exactly, or within tolerance over R).
template <Field F>
void push_checked_root(const F& k, SolutionSet<F>& out, const Octonion<F>& x, const Octonion<F>& c, unsigned d) {
    if (residual_ok(k, power(k, x, d), c)) {
        out.points.push_back(x);
    } else if (k.capabilities().exact) {
        throw std::logic_error("closed-form root " + format_octonion(k, x) + " failed verification");
    } else {
        out.diagnostics.push_back("discarded " + format_octonion(k, x) + ": residual above tolerance");
    }
}

/// (c + s 1) / r and its negative.
template <Field F>
void push_pm(const F& k, SolutionSet<F>& out, const Octonion<F>& c, const element_t<F>& s, const element_t<F>& r) {
    auto x = oscale(k, k.inv(r), oadd_scalar(k, c, s));
    push_checked_root(k, out, x, c, 2);
    push_checked_root(k, out, oneg(k, x), c, 2);
}

}  // namespace detail

/// All x with x^2 = c, using s as the chosen element of Omega_{n(c)} for
/// non-scalar c in characteristic other than 2. The caller must pass
/// s with s^2 = n(c).
template <Field F>
RadicalResult<F, SqrtBranch> sqrt_octonion_with_root(const F& k, const Octonion<F>& c, const element_t<F>& s) {
    RadicalResult<F, SqrtBranch> out{{}, SqrtBranch::Scalar};
    auto& sol = out.solutions;

    if (is_scalar(k, c)) {
        const auto gamma = c.alpha;
        if (auto r = k.sqrt(gamma)) {
            sol.points.push_back(Octonion<F>::scalar(k, *r));
            sol.points.push_back(Octonion<F>::scalar(k, k.neg(*r)));
        }
        sol.orbits.push_back({k.zero(), gamma});
        detail::sort_unique_points(k, sol.points);
        return out;
    }

    const auto t = trace(k, c);
    const auto n = norm(k, c);

    if (k.characteristic() == 2) {
        if (k.is_zero(t)) {
            out.branch = SqrtBranch::Char2Traceless;
            return out;
        }
        auto rt = k.sqrt(t);
        auto rn = k.sqrt(n);
        if (!rt || !rn) {
            out.branch = SqrtBranch::Char2NotSquare;
            return out;
        }
        out.branch = SqrtBranch::Char2TraceNonzero;
        auto x = oscale(k, k.inv(*rt), oadd_scalar(k, c, *rn));
        detail::push_checked_root(k, sol, x, c, 2);
        return out;
    }

    if (!k.equal(k.mul(s, s), n)) throw std::invalid_argument("chosen root does not square to n(c)");
    const auto two_s = k.add(s, s);
    const auto alpha = k.add(t, two_s);
    const auto beta = k.sub(t, two_s);
    const bool a_sq = detail::is_nonzero_square(k, alpha);
    const bool b_sq = detail::is_nonzero_square(k, beta);
    if (a_sq && b_sq) {
        out.branch = SqrtBranch::BothSquares;
    } else if (a_sq) {
        out.branch = SqrtBranch::AlphaSquare;
    } else if (b_sq) {
        out.branch = SqrtBranch::BetaSquare;
    } else {
        out.branch = SqrtBranch::NeitherSquare;
    }
    if (a_sq) detail::push_pm(k, sol, c, s, *k.sqrt(alpha));
    if (b_sq) detail::push_pm(k, sol, c, k.neg(s), *k.sqrt(beta));
    detail::sort_unique_points(k, sol.points);
    return out;
}

/// All x in O(F) with x^2 = c. The field's own square root picks
/// sqrt(n(c)).
template <Field F>
RadicalResult<F, SqrtBranch> sqrt_octonion(const F& k, const Octonion<F>& c) {
    if (is_scalar(k, c) || k.characteristic() == 2) return sqrt_octonion_with_root(k, c, k.zero());
    auto s = k.sqrt(norm(k, c));
    if (!s) return {{}, SqrtBranch::NormNotSquare};
    return sqrt_octonion_with_root(k, c, *s);
}

/// False exactly when x^2 = c has no real solution: c non-scalar and either
/// n(c) < 0, or 0 <= 4 n(c) <= tr(c)^2 with tr(c) <= 0.
bool real_sqrt_feasible(const RealField& k, const Octonion<RealField>& c);

template <Field F>
    requires(!std::is_same_v<F, RealField>)
bool real_sqrt_feasible(const F& k, const Octonion<F>&) {
    throw std::invalid_argument("real_sqrt_feasible needs the real field, got " + k.name());
}

/// All real x with x^3 = c.
///
/// Traceless c with n(c) > 0 has three roots: -c / cbrt(n) and
/// (c / cbrt(n) +- sqrt(3) n^(1/6) 1) / 2.
RadicalResult<RealField, CbrtBranch> cbrt_octonion_real(const RealField& k, const Octonion<RealField>& c);

template <Field F>
    requires(!std::is_same_v<F, RealField>)
RadicalResult<F, CbrtBranch> cbrt_octonion_real(const F& k, const Octonion<F>&) {
    throw std::invalid_argument("cube roots are implemented over the real field only, got " + k.name());
}

/// (2s + t)^2 (s - 4t) - 27 s (4n - t^2) with s = lambda^3, as a polynomial
/// in lambda over Q.
ScalarPoly<RationalField> cbrt_lambda_polynomial(const mpq_class& t, const mpq_class& n);

}  // namespace octsolve

#endif
