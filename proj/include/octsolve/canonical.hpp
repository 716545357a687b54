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

#ifndef OCTSOLVE_CANONICAL_HPP
#define OCTSOLVE_CANONICAL_HPP

#include <variant>

#include "automorphism.hpp"

namespace octsolve {

/// The orbit of nu * 1.
template <Field F>
struct ScalarLabel {
    element_t<F> nu;
};

/// The orbit O(lambda, mu) of (lambda, (mu, 0, 0); (1, 0, 0), 0): all
/// non-scalar elements with trace lambda and norm -mu.
template <Field F>
struct OrbitLabel {
    element_t<F> lambda;
    element_t<F> mu;
};

template <Field F>
struct CanonicalForm {
    std::variant<ScalarLabel<F>, OrbitLabel<F>> kind;
    /// witness.apply(input) == representative
    AutomorphismWord<F> witness;
    Octonion<F> representative;

    bool is_scalar() const noexcept { return std::holds_alternative<ScalarLabel<F>>(kind); }
};

namespace detail {

template <Field F>
class CanonicalBuilder {
   public:
    CanonicalBuilder(const F& k, const Octonion<F>& a) : k_(k), a_(a) {}

    void sl3(const Matrix3<F>& g) {
        if (mequal(k_, g, Matrix3<F>::identity(k_))) return;
        record(Sl3Move<F>{g});
    }
    void delta1(const Vec3<F>& u) {
        if (vis_zero(k_, u)) return;
        record(Delta1Move<F>{u});
    }
    void delta2(const Vec3<F>& v) {
        if (vis_zero(k_, v)) return;
        record(Delta2Move<F>{v});
    }
    void hbar() { record(HbarMove{}); }

    const Octonion<F>& current() const noexcept { return a_; }

    CanonicalForm<F> finish_orbit() {
        auto lambda = a_.alpha;
        auto mu = a_.u[0];
        return {OrbitLabel<F>{lambda, mu}, std::move(word_), Octonion<F>::canonical(k_, lambda, mu)};
    }

   private:
    void record(Generator<F> g) {
        a_ = apply_generator(k_, g, a_);
        word_.push(std::move(g));
    }

    const F& k_;
    Octonion<F> a_;
    AutomorphismWord<F> word_;
};

}  // namespace detail

/// Orbit representative of a under Aut(O) together with a generator word
/// that moves a onto it. Every normalization step is an explicit move in
/// the witness; trivial moves (identity matrix, zero vectors) are skipped.
template <Field F>
CanonicalForm<F> canonicalize(const F& k, const Octonion<F>& a) {
    const Vec3<F> c1 = Vec3<F>::basis(k, 0);
    detail::CanonicalBuilder<F> b(k, a);

    if (vis_zero(k, a.u) && vis_zero(k, a.v)) {
        if (k.equal(a.alpha, a.beta)) {
            return {ScalarLabel<F>{a.alpha}, {}, Octonion<F>::scalar(k, a.alpha)};
        }
        // (a1, 0; 0, a8) -> (a1, 0; (a8 - a1) c1, a8) -> (a1, 0; c1, a8)
        b.delta2(c1);
        b.sl3(sl3_rescale_c1(k, b.current().v[0]));
        const auto a8 = b.current().beta;
        if (!k.is_zero(a8)) b.delta1(vscale(k, k.neg(a8), c1));
        return b.finish_orbit();
    }

    if (vis_zero(k, b.current().v)) b.hbar();
    b.sl3(sl3_send_to_c1(k, b.current().v));
    // v = c1; clear the lower-right entry, leaving v = (1, *, *)
    b.delta1(vscale(k, k.neg(b.current().beta), c1));
    b.sl3(sl3_send_to_c1(k, b.current().v));
    // v = c1 again; bring u to (*, 0, 0) or (0, 1, 0) by a move that fixes v
    b.sl3(sl3_reduce_fixing_c1(k, b.current().u));

    const auto& u = b.current().u;
    if (k.is_zero(u[0]) && !k.is_zero(u[1])) {
        const auto alpha = b.current().alpha;
        if (!k.is_zero(alpha)) {
            Vec3<F> w = Vec3<F>::zero(k);
            w[1] = k.neg(k.inv(alpha));
            b.delta1(w);
        } else {
            b.delta2(Vec3<F>::basis(k, 2));
        }
    }
    return b.finish_orbit();
}

/// Orbit labels agree (scalars compare by value, others by (tr, -n)).
template <Field F>
bool same_orbit(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    auto ca = canonicalize(k, a);
    auto cb = canonicalize(k, b);
    if (ca.is_scalar() != cb.is_scalar()) return false;
    if (ca.is_scalar()) return k.equal(std::get<ScalarLabel<F>>(ca.kind).nu, std::get<ScalarLabel<F>>(cb.kind).nu);
    const auto& la = std::get<OrbitLabel<F>>(ca.kind);
    const auto& lb = std::get<OrbitLabel<F>>(cb.kind);
    return k.equal(la.lambda, lb.lambda) && k.equal(la.mu, lb.mu);
}

}  // namespace octsolve

#endif
