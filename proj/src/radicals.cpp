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

#include "octsolve/radicals.hpp"

#include <cmath>

#include "octsolve/roots.hpp"

namespace octsolve {

std::string to_string(SqrtBranch b) {
    switch (b) {
        case SqrtBranch::Scalar:
            return "scalar";
        case SqrtBranch::BothSquares:
            return "both-squares";
        case SqrtBranch::AlphaSquare:
            return "alpha-square";
        case SqrtBranch::BetaSquare:
            return "beta-square";
        case SqrtBranch::NeitherSquare:
            return "neither-square";
        case SqrtBranch::NormNotSquare:
            return "norm-not-square";
        case SqrtBranch::Char2TraceNonzero:
            return "char2-trace-nonzero";
        case SqrtBranch::Char2NotSquare:
            return "char2-not-square";
        case SqrtBranch::Char2Traceless:
            return "char2-traceless";
    }
    return "unknown";
}

std::string to_string(CbrtBranch b) {
    switch (b) {
        case CbrtBranch::Scalar:
            return "scalar";
        case CbrtBranch::TraceNonzero:
            return "trace-nonzero";
        case CbrtBranch::TracelessPositive:
            return "traceless-positive";
        case CbrtBranch::TracelessZero:
            return "traceless-zero";
        case CbrtBranch::TracelessNegative:
            return "traceless-negative";
    }
    return "unknown";
}

bool real_sqrt_feasible(const RealField& k, const Octonion<RealField>& c) {
    if (is_scalar(k, c)) return true;
    const double t = trace(k, c);
    const double n = norm(k, c);
    if (n < 0 && !k.is_zero(n)) return false;
    const bool n_nonneg = n >= 0 || k.is_zero(n);
    const bool below = 4 * n <= t * t || k.equal(4 * n, t * t);
    const bool t_nonpos = t <= 0 || k.is_zero(t);
    return !(n_nonneg && below && t_nonpos);
}

ScalarPoly<RationalField> cbrt_lambda_polynomial(const mpq_class& t, const mpq_class& n) {
    const RationalField kq;
    // in s: (4 s^2 + 4 t s + t^2)(s - 4t) - 27 (4n - t^2) s
    //     = 4 s^3 - 12 t s^2 + (t^2 - 16 t^2 - 27(4n - t^2)) s - 4 t^3
    const mpq_class c3 = 4;
    const mpq_class c2 = -12 * t;
    const mpq_class c1 = t * t - 16 * t * t - 27 * (4 * n - t * t);
    const mpq_class c0 = -4 * t * t * t;
    std::vector<mpq_class> c(10, mpq_class(0));
    c[9] = c3;
    c[6] = c2;
    c[3] = c1;
    c[0] = c0;
    return ScalarPoly<RationalField>(kq, std::move(c));
}

namespace {

void sort_points(const RealField& k, SolutionSet<RealField>& s) { detail::sort_unique_points(k, s.points); }

}  // namespace

RadicalResult<RealField, CbrtBranch> cbrt_octonion_real(const RealField& k, const Octonion<RealField>& c) {
    RadicalResult<RealField, CbrtBranch> out{{}, CbrtBranch::Scalar};
    auto& sol = out.solutions;

    if (is_scalar(k, c)) {
        const double g = k.cbrt(c.alpha);
        sol.points.push_back(Octonion<RealField>::scalar(k, g));
        sol.orbits.push_back({-g, -g * g});
        return out;
    }

    const double t = trace(k, c);
    const double n = norm(k, c);

    if (k.is_zero(t)) {
        if (k.is_zero(n)) {
            out.branch = CbrtBranch::TracelessZero;
            return out;
        }
        const double r = k.cbrt(n);
        detail::push_checked_root(k, sol, oscale(k, -1.0 / r, c), c, 3);
        if (n > 0) {
            out.branch = CbrtBranch::TracelessPositive;
            const double shift = std::sqrt(3.0) * std::pow(n, 1.0 / 6.0);
            const auto half = oscale(k, 0.5 / r, c);
            detail::push_checked_root(k, sol, oadd_scalar(k, half, shift / 2), c, 3);
            detail::push_checked_root(k, sol, oadd_scalar(k, half, -shift / 2), c, 3);
        } else {
            out.branch = CbrtBranch::TracelessNegative;
        }
        sort_points(k, sol);
        return out;
    }

    out.branch = CbrtBranch::TraceNonzero;
    const auto poly = cbrt_lambda_polynomial(RealField::to_rational(t), RealField::to_rational(n));
    const auto centered = oadd_scalar(k, c, -t / 2);
    for (double lam : real_roots(poly)) {
        const double denom = 2 * lam * lam * lam + t;
        if (k.is_zero(denom)) {
            sol.diagnostics.push_back("skipped lambda " + k.format(lam) + ": 2 lambda^3 + tr(c) vanishes");
            continue;
        }
        auto x = oadd_scalar(k, oscale(k, 3 * lam / denom, centered), lam / 2);
        detail::push_checked_root(k, sol, x, c, 3);
    }
    sort_points(k, sol);
    return out;
}

}  // namespace octsolve
