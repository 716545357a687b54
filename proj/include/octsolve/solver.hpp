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

#ifndef OCTSOLVE_SOLVER_HPP
#define OCTSOLVE_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "fibpoly.hpp"
#include "resultant.hpp"
#include "roots.hpp"

namespace octsolve {

/// Thrown when a bivariate system has a positive-dimensional solution set.
class UnderdeterminedSystem : public std::runtime_error {
   public:
    UnderdeterminedSystem() : std::runtime_error("underdetermined system") {}
};

/// Which polynomial system in (lambda, mu) encodes f(x) = c for non-scalar c.
enum class SystemForm {
    Auto,               ///< CharNot2 or one of the Char2 forms, by characteristic and tr(c)
    Raw,                ///< trace and norm equations, any characteristic
    CharNot2,           ///< (l^2 + 4m) f^^2 = tr^2 - 4n, l f^ + 2m f_ = tr
    Char2TraceNonzero,  ///< lambda != 0, cleared of the 1/lambda^2 denominator
    Char2Traceless,     ///< lambda = 0
    ScalarOrbits,       ///< f^ = 0, m f_ = gamma (scalar c)
};

std::string to_string(SystemForm form);

/// Two equations P = Q = 0 in (lambda, mu) with optional side conditions.
template <Field F>
struct SystemInstance {
    SystemForm form = SystemForm::Raw;
    BiPoly<F> first;
    BiPoly<F> second;
    /// Solutions must satisfy nonvanishing(lambda, mu) != 0 when set.
    std::optional<BiPoly<F>> nonvanishing;
    bool lambda_nonzero = false;
};

/// The polynomial system for f(x) = c with c non-scalar, given tr(c) and n(c).
template <Field F>
SystemInstance<F> build_system(const F& k, const ScalarPoly<F>& f, const element_t<F>& trc, const element_t<F>& nc,
                               SystemForm form = SystemForm::Auto) {
    const auto hat = fhat(k, f);
    const auto check = fcheck(k, f);
    const auto lam = BiPoly<F>::y(k);
    const auto mu = BiPoly<F>::z(k);
    auto cst = [&](const element_t<F>& a) { return BiPoly<F>::constant(k, a); };
    auto two = k.from_int(2);
    auto four = k.from_int(4);

    if (form == SystemForm::Auto) {
        if (k.characteristic() != 2) {
            form = SystemForm::CharNot2;
        } else {
            form = k.is_zero(trc) ? SystemForm::Char2Traceless : SystemForm::Char2TraceNonzero;
        }
    }
    if ((form == SystemForm::Char2TraceNonzero || form == SystemForm::Char2Traceless) && k.characteristic() != 2) {
        throw std::invalid_argument("characteristic-2 system requested over " + k.name());
    }
    if (form == SystemForm::CharNot2 && k.characteristic() == 2) {
        throw std::invalid_argument("characteristic-not-2 system requested over " + k.name());
    }

    SystemInstance<F> sys;
    sys.form = form;
    sys.nonvanishing = hat;
    // lambda f^ + 2 mu f_ - tr(c)
    const auto trace_eq = bi_sub(k, bi_add(k, bi_mul(k, lam, hat), bi_scale(k, two, bi_mul(k, mu, check))), cst(trc));

    switch (form) {
        case SystemForm::Raw: {
            // -mu f^2 + lambda mu f^ f_ + mu^2 f_^2 - n(c)
            auto hh = bi_mul(k, hat, hat);
            auto cc = bi_mul(k, check, check);
            auto norm_eq = bi_scale(k, k.neg(k.one()), bi_mul(k, mu, hh));
            norm_eq = bi_add(k, norm_eq, bi_mul(k, bi_mul(k, lam, mu), bi_mul(k, hat, check)));
            norm_eq = bi_add(k, norm_eq, bi_mul(k, bi_mul(k, mu, mu), cc));
            sys.first = trace_eq;
            sys.second = bi_sub(k, norm_eq, cst(nc));
            break;
        }
        case SystemForm::CharNot2: {
            // (lambda^2 + 4 mu) f^2 - (tr^2 - 4 n)
            auto disc = bi_add(k, bi_mul(k, lam, lam), bi_scale(k, four, mu));
            auto rhs = k.sub(k.mul(trc, trc), k.mul(four, nc));
            sys.first = bi_sub(k, bi_mul(k, disc, bi_mul(k, hat, hat)), cst(rhs));
            sys.second = trace_eq;
            break;
        }
        case SystemForm::Char2TraceNonzero: {
            // lambda^2 (mu^2 f_^2 + mu tr f_ - n) - mu tr^2, and lambda f^ - tr
            auto mc = bi_mul(k, mu, check);
            auto inner = bi_add(k, bi_mul(k, mc, mc), bi_scale(k, trc, mc));
            inner = bi_sub(k, inner, cst(nc));
            auto lam2 = bi_mul(k, lam, lam);
            sys.first = bi_sub(k, bi_mul(k, lam2, inner), bi_scale(k, k.mul(trc, trc), mu));
            sys.second = bi_sub(k, bi_mul(k, lam, hat), cst(trc));
            sys.lambda_nonzero = true;
            break;
        }
        case SystemForm::Char2Traceless: {
            // mu f^(0, mu)^2 + mu^2 f_(0, mu)^2 - n, and lambda = 0
            auto h0 = hat.at_y(k, k.zero());
            auto c0 = check.at_y(k, k.zero());
            BiPoly<F> h0b, c0b;
            for (std::size_t j = 0; j < h0.coefficients().size(); ++j) h0b.add_term(k, 0, j, h0.coefficients()[j]);
            for (std::size_t j = 0; j < c0.coefficients().size(); ++j) c0b.add_term(k, 0, j, c0.coefficients()[j]);
            auto eq = bi_add(k, bi_mul(k, mu, bi_mul(k, h0b, h0b)), bi_mul(k, bi_mul(k, mu, mu), bi_mul(k, c0b, c0b)));
            sys.first = bi_sub(k, eq, cst(nc));
            sys.second = lam;
            break;
        }
        default:
            throw std::invalid_argument("build_system: unsupported form " + to_string(form));
    }
    return sys;
}

/// f^(lambda, mu) = 0 and mu f_(lambda, mu) = gamma, whose solutions label the
/// orbits solving f(x) = gamma 1.
template <Field F>
SystemInstance<F> build_scalar_orbit_system(const F& k, const ScalarPoly<F>& f, const element_t<F>& gamma) {
    SystemInstance<F> sys;
    sys.form = SystemForm::ScalarOrbits;
    sys.first = fhat(k, f);
    sys.second = bi_sub(k, bi_mul(k, BiPoly<F>::z(k), fcheck(k, f)), BiPoly<F>::constant(k, gamma));
    return sys;
}

namespace detail {

constexpr std::uint64_t kPairEnumerationLimit = 1024;

template <Field F>
using Pair = std::pair<element_t<F>, element_t<F>>;

template <Field F>
bool side_conditions_hold(const F& k, const SystemInstance<F>& sys, const element_t<F>& lam, const element_t<F>& mu) {
    if (sys.lambda_nonzero && k.is_zero(lam)) return false;
    if (sys.nonvanishing && k.is_zero((*sys.nonvanishing)(k, lam, mu))) return false;
    return true;
}

template <Field F>
void sort_unique_pairs(const F& k, std::vector<Pair<F>>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [&](const Pair<F>& a, const Pair<F>& b) {
        if (!k.equal(a.first, b.first)) return k.less(a.first, b.first);
        if (!k.equal(a.second, b.second)) return k.less(a.second, b.second);
        return false;
    });
    auto last = std::unique(pairs.begin(), pairs.end(), [&](const Pair<F>& a, const Pair<F>& b) {
        return k.equal(a.first, b.first) && k.equal(a.second, b.second);
    });
    pairs.erase(last, pairs.end());
}

/// Common roots of two univariate polynomials; both zero means every value.
template <Field F>
std::vector<element_t<F>> common_roots(const F& k, const ScalarPoly<F>& a, const ScalarPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw UnderdeterminedSystem();
    auto g = poly_gcd(k, a, b);
    if (g.degree() < 1) return {};
    return univariate_roots(k, g);
}

/// Equations with a zero member, or with no dependence on mu at all.
template <Field F>
std::optional<std::vector<Pair<F>>> degenerate_cases(const F& k, const BiPoly<F>& p, const BiPoly<F>& q) {
    if (p.is_zero() || q.is_zero()) {
        const auto& other = p.is_zero() ? q : p;
        if (!other.is_zero() && other.degree_y() <= 0 && other.degree_z() <= 0) return std::vector<Pair<F>>{};
        throw UnderdeterminedSystem();
    }
    if (p.degree_z() <= 0 && q.degree_z() <= 0) {
        if (!common_roots(k, p.at_z(k, k.zero()), q.at_z(k, k.zero())).empty()) throw UnderdeterminedSystem();
        return std::vector<Pair<F>>{};
    }
    return std::nullopt;
}

/// Exact elimination: lambda from Res_mu, then mu from the gcd of the
/// specializations. Falls back to eliminating lambda first.
template <Field F>
std::vector<Pair<F>> eliminate_exact(const F& k, const BiPoly<F>& p, const BiPoly<F>& q, bool swapped = false) {
    if (auto d = degenerate_cases(k, p, q)) {
        if (d->empty() || !swapped) return *d;
    }
    if (p.degree_z() <= 0 && q.degree_z() <= 0) {
        // only reachable on the swapped pass, handled by degenerate_cases
        return {};
    }
    auto r = resultant_in_z(k, p, q);
    if (r.is_zero()) {
        if (swapped) throw UnderdeterminedSystem();
        auto flipped = eliminate_exact(k, p.swapped(), q.swapped(), true);
        for (auto& pr : flipped) std::swap(pr.first, pr.second);
        return flipped;
    }
    std::vector<Pair<F>> out;
    if (r.degree() < 1) return out;
    for (const auto& lam : univariate_roots(k, r)) {
        for (const auto& mu : common_roots(k, p.at_y(k, lam), q.at_y(k, lam))) out.emplace_back(lam, mu);
    }
    return out;
}

inline ScalarPoly<RealField> trim_relative(const RealField& k, const ScalarPoly<RealField>& a) {
    double scale = 0;
    for (double c : a.coefficients()) scale = std::max(scale, std::fabs(c));
    std::vector<double> c = a.coefficients();
    for (double& x : c) {
        if (std::fabs(x) <= 1e-12 * scale) x = 0;
    }
    return ScalarPoly<RealField>(k, std::move(c));
}

/// Sum of |term| at a point: the magnitude that residuals are measured against.
inline double term_scale(const BiPoly<RealField>& p, double y, double z) {
    double s = 0;
    for (const auto& [e, c] : p.terms()) s += std::fabs(c * std::pow(y, e.first) * std::pow(z, e.second));
    return std::max(1.0, s);
}

inline double scaled_residual(const RealField& k, const BiPoly<RealField>& p, double y, double z) {
    return std::fabs(p(k, y, z)) / term_scale(p, y, z);
}

/// Damped Newton on the 2x2 system; returns the best point seen.
inline std::pair<double, double> newton_polish(const RealField& k, const BiPoly<RealField>& p,
                                               const BiPoly<RealField>& q, double lam, double mu) {
    const auto py = bi_derivative_y(k, p), pz = bi_derivative_z(k, p);
    const auto qy = bi_derivative_y(k, q), qz = bi_derivative_z(k, q);
    auto residual = [&](double y, double z) { return scaled_residual(k, p, y, z) + scaled_residual(k, q, y, z); };
    double best = residual(lam, mu);
    for (int it = 0; it < 12 && best > 0; ++it) {
        const double a = py(k, lam, mu), b = pz(k, lam, mu), c = qy(k, lam, mu), d = qz(k, lam, mu);
        const double det = a * d - b * c;
        if (det == 0 || !std::isfinite(det)) break;
        const double fp = p(k, lam, mu), fq = q(k, lam, mu);
        const double dl = (fp * d - fq * b) / det;
        const double dm = (fq * a - fp * c) / det;
        double step = 1.0;
        bool improved = false;
        for (int half = 0; half < 6; ++half, step /= 2) {
            const double nl = lam - step * dl, nm = mu - step * dm;
            const double r = residual(nl, nm);
            if (std::isfinite(r) && r < best) {
                lam = nl;
                mu = nm;
                best = r;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return {lam, mu};
}

/// Elimination over R: the resultant is formed and isolated exactly in Q from
/// the binary values of the coefficients; back-substitution and polishing run
/// in doubles, and a pair survives only if both residuals are within tolerance.
inline std::vector<Pair<RealField>> eliminate_real(const RealField& k, const BiPoly<RealField>& p,
                                                   const BiPoly<RealField>& q) {
    if (auto d = degenerate_cases(k, p, q)) return *d;
    const RationalField kq;
    auto lift = [&](const BiPoly<RealField>& a) {
        return a.map_coefficients(kq, [](double c) { return RealField::to_rational(c); });
    };
    const auto pq = lift(p), qq = lift(q);

    std::vector<Pair<RealField>> candidates;
    auto r = resultant_in_z(kq, pq, qq);
    if (!r.is_zero()) {
        for (double lam : real_roots(r)) {
            auto a = trim_relative(k, p.at_y(k, lam));
            auto b = trim_relative(k, q.at_y(k, lam));
            if (a.degree() < 1 && b.degree() < 1) {
                if (a.is_zero() && b.is_zero()) throw UnderdeterminedSystem();
                continue;
            }
            const auto& pick = (b.degree() < 1 || (a.degree() >= 1 && a.degree() <= b.degree())) ? a : b;
            for (double mu : univariate_roots(k, pick)) candidates.emplace_back(lam, mu);
        }
    } else {
        if (pq.degree_y() <= 0 && qq.degree_y() <= 0) throw UnderdeterminedSystem();
        auto rs = resultant_in_z(kq, pq.swapped(), qq.swapped());
        if (rs.is_zero()) throw UnderdeterminedSystem();
        for (double mu : real_roots(rs)) {
            auto a = trim_relative(k, p.at_z(k, mu));
            auto b = trim_relative(k, q.at_z(k, mu));
            if (a.degree() < 1 && b.degree() < 1) {
                if (a.is_zero() && b.is_zero()) throw UnderdeterminedSystem();
                continue;
            }
            const auto& pick = (b.degree() < 1 || (a.degree() >= 1 && a.degree() <= b.degree())) ? a : b;
            for (double lam : univariate_roots(k, pick)) candidates.emplace_back(lam, mu);
        }
    }

    std::vector<Pair<RealField>> out;
    for (auto [lam, mu] : candidates) {
        std::tie(lam, mu) = newton_polish(k, p, q, lam, mu);
        if (scaled_residual(k, p, lam, mu) <= k.tolerance() && scaled_residual(k, q, lam, mu) <= k.tolerance()) {
            out.emplace_back(lam, mu);
        }
    }
    return out;
}

}  // namespace detail

/// All (lambda, mu) in F^2 solving the system and its side conditions, in
/// ascending order. Small finite fields are enumerated; otherwise mu is
/// eliminated with a resultant. Throws UnderdeterminedSystem when the
/// solution set is a curve.
template <Field F>
std::vector<std::pair<element_t<F>, element_t<F>>> solve_bivariate(const F& k, const SystemInstance<F>& sys) {
    std::vector<detail::Pair<F>> out;
    bool enumerated = false;
    if constexpr (EnumerableField<F>) {
        if (k.order() <= detail::kPairEnumerationLimit) {
            enumerated = true;
            for (std::uint64_t i = 0; i < k.order(); ++i) {
                const auto lam = k.element(i);
                for (std::uint64_t j = 0; j < k.order(); ++j) {
                    const auto mu = k.element(j);
                    if (k.is_zero(sys.first(k, lam, mu)) && k.is_zero(sys.second(k, lam, mu))) out.emplace_back(lam, mu);
                }
            }
        }
    }
    if (!enumerated) {
        if constexpr (std::is_same_v<F, RealField>) {
            out = detail::eliminate_real(k, sys.first, sys.second);
        } else {
            out = detail::eliminate_exact(k, sys.first, sys.second);
        }
    }
    std::erase_if(out, [&](const detail::Pair<F>& pr) { return !detail::side_conditions_hold(k, sys, pr.first, pr.second); });
    detail::sort_unique_pairs(k, out);
    return out;
}

/// Orbits O(lambda, mu) given implicitly when their labels form a curve.
template <Field F>
struct OrbitVariety {
    BiPoly<F> fhat;
    /// mu * f_check(lambda, mu) - gamma
    BiPoly<F> mucheck;
};

template <Field F>
struct SolutionSet {
    /// Explicit solutions in ascending order.
    std::vector<Octonion<F>> points;
    /// Whole orbits O(lambda, mu) contained in the solution set (scalar c only).
    std::vector<OrbitLabel<F>> orbits;
    std::optional<OrbitVariety<F>> variety;
    /// Candidates rejected by residual checks (R only).
    std::vector<std::string> diagnostics;
};

namespace detail {

/// max_i |a_i - b_i| / max(1, max_i |b_i|).
inline double relative_residual(const Octonion<RealField>& a, const Octonion<RealField>& b) {
    double diff = 0, scale = 1;
    for (std::size_t i = 0; i < 8; ++i) {
        diff = std::max(diff, std::fabs(a.component(i) - b.component(i)));
        scale = std::max(scale, std::fabs(b.component(i)));
    }
    return diff / scale;
}

/// Exact equality, or relative residual within the field tolerance over R.
template <Field F>
bool residual_ok(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    if constexpr (std::is_same_v<F, RealField>) {
        return relative_residual(a, b) <= k.tolerance();
    } else {
        return oequal(k, a, b);
    }
}

template <Field F>
void sort_unique_points(const F& k, std::vector<Octonion<F>>& pts) {
    std::sort(pts.begin(), pts.end(), [&](const Octonion<F>& a, const Octonion<F>& b) { return oless(k, a, b); });
    pts.erase(std::unique(pts.begin(), pts.end(), [&](const Octonion<F>& a, const Octonion<F>& b) { return oequal(k, a, b); }),
              pts.end());
}

}  // namespace detail

/// Every solution of f(x) = c, where f has scalar coefficients and no
/// constant term.
///
/// For c = gamma 1 the solutions are nu 1 with f(nu) = gamma and the orbits
/// O(lambda, mu) with f^(lambda, mu) = 0 and mu f_(lambda, mu) = gamma. For
/// non-scalar c each (lambda, mu) of the system gives the single solution
/// x = (c - mu f_(lambda, mu) 1) / f^(lambda, mu), with tr x = lambda and
/// n x = -mu.
template <Field F>
SolutionSet<F> solve(const F& k, const ScalarPoly<F>& f, const Octonion<F>& c, SystemForm form = SystemForm::Auto) {
    require_solvable_poly(k, f);
    SolutionSet<F> out;

    if (is_scalar(k, c)) {
        const auto gamma = c.alpha;
        const auto shifted = poly_sub(k, f, ScalarPoly<F>::constant(k, gamma));
        for (const auto& nu : univariate_roots(k, shifted)) {
            auto x = Octonion<F>::scalar(k, nu);
            if (detail::residual_ok(k, eval_f_direct(k, f, x), c)) {
                out.points.push_back(x);
            } else {
                out.diagnostics.push_back("discarded scalar root " + k.format(nu) + ": residual above tolerance");
            }
        }
        const auto sys = build_scalar_orbit_system(k, f, gamma);
        try {
            for (const auto& [lam, mu] : solve_bivariate(k, sys)) {
                auto rep = Octonion<F>::canonical(k, lam, mu);
                if (detail::residual_ok(k, eval_f_direct(k, f, rep), c)) {
                    out.orbits.push_back({lam, mu});
                } else {
                    out.diagnostics.push_back("discarded orbit label (" + k.format(lam) + ", " + k.format(mu) +
                                              "): residual above tolerance");
                }
            }
        } catch (const UnderdeterminedSystem&) {
            out.orbits.clear();
            out.variety = OrbitVariety<F>{sys.first, sys.second};
        }
        detail::sort_unique_points(k, out.points);
        return out;
    }

    const auto trc = trace(k, c);
    const auto nc = norm(k, c);
    const auto sys = build_system(k, f, trc, nc, form);
    for (const auto& [lam, mu] : solve_bivariate(k, sys)) {
        auto [hat, check] = fhat_fcheck_values(k, f, lam, mu);
        auto x = oscale(k, k.inv(hat), oadd_scalar(k, c, k.neg(k.mul(mu, check))));
        const bool labels_match = k.equal(trace(k, x), lam) && k.equal(norm(k, x), k.neg(mu));
        const bool solves = detail::residual_ok(k, eval_f_direct(k, f, x), c);
        if (labels_match && solves) {
            out.points.push_back(x);
            continue;
        }
        if (k.capabilities().exact) {
            throw std::logic_error("solution for (" + k.format(lam) + ", " + k.format(mu) + ") failed verification");
        }
        out.diagnostics.push_back("discarded candidate for (" + k.format(lam) + ", " + k.format(mu) + "): " +
                                  (labels_match ? "residual above tolerance" : "trace/norm mismatch"));
    }
    detail::sort_unique_points(k, out.points);
    return out;
}

/// |points| <= (deg f)^2 for non-scalar c.
template <Field F>
bool count_bound_check(const F& k, const ScalarPoly<F>& f, const Octonion<F>& c, const SolutionSet<F>& sol) {
    if (is_scalar(k, c)) throw std::invalid_argument("count bound applies to non-scalar c only");
    const auto n = static_cast<std::size_t>(f.degree());
    return sol.orbits.empty() && sol.points.size() <= n * n;
}

}  // namespace octsolve

#endif
