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

#ifndef OCTSOLVE_AUTOMORPHISM_HPP
#define OCTSOLVE_AUTOMORPHISM_HPP

#include <random>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "octonion.hpp"

namespace octsolve {

/// a -> (alpha, u g, v g^{-T}, beta) for g in SL3(F).
template <Field F>
struct Sl3Move {
    Matrix3<F> g;
};

template <Field F>
struct Delta1Move {
    Vec3<F> u;
};

template <Field F>
struct Delta2Move {
    Vec3<F> v;
};

/// (alpha, u, v, beta) -> (beta, -v, -u, alpha)
struct HbarMove {};

template <Field F>
using Generator = std::variant<Sl3Move<F>, Delta1Move<F>, Delta2Move<F>, HbarMove>;

template <Field F>
Octonion<F> apply_generator(const F& k, const Generator<F>& gen, const Octonion<F>& a) {
    return std::visit(
        [&](const auto& m) -> Octonion<F> {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Sl3Move<F>>) {
                return {a.alpha, vmul(k, a.u, m.g), vmul(k, a.v, inverse_transpose(k, m.g)), a.beta};
            } else if constexpr (std::is_same_v<M, Delta1Move<F>>) {
                const auto uv = dot(k, m.u, a.v);
                const auto s = k.sub(k.sub(a.alpha, a.beta), uv);
                return {k.sub(a.alpha, uv), vadd(k, vscale(k, s, m.u), a.u), vsub(k, a.v, cross(k, a.u, m.u)),
                        k.add(a.beta, uv)};
            } else if constexpr (std::is_same_v<M, Delta2Move<F>>) {
                const auto uv = dot(k, a.u, m.v);
                const auto s = k.sub(k.sub(a.beta, a.alpha), uv);
                return {k.add(a.alpha, uv), vadd(k, a.u, cross(k, a.v, m.v)), vadd(k, vscale(k, s, m.v), a.v),
                        k.sub(a.beta, uv)};
            } else {
                return {a.beta, vneg(k, a.v), vneg(k, a.u), a.alpha};
            }
        },
        gen);
}

/// A composition of generators, applied first to last.
template <Field F>
class AutomorphismWord {
   public:
    AutomorphismWord() = default;
    explicit AutomorphismWord(std::vector<Generator<F>> moves) : moves_(std::move(moves)) {}

    void push(Generator<F> g) { moves_.push_back(std::move(g)); }
    /// this, then other
    void append(const AutomorphismWord& other) { moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end()); }

    const std::vector<Generator<F>>& moves() const noexcept { return moves_; }
    std::size_t size() const noexcept { return moves_.size(); }
    bool empty() const noexcept { return moves_.empty(); }

    Octonion<F> apply(const F& k, Octonion<F> a) const {
        for (const auto& g : moves_) a = apply_generator(k, g, a);
        return a;
    }

   private:
    std::vector<Generator<F>> moves_;
};

/// True iff w(ab) = w(a) w(b) on `sample_size` random pairs.
template <Field F>
bool is_automorphism_on_sample(const F& k, const AutomorphismWord<F>& w, std::size_t sample_size,
                               std::mt19937_64& rng) {
    if (sample_size == 0) throw std::invalid_argument("sample_size must be positive");
    for (std::size_t i = 0; i < sample_size; ++i) {
        auto a = random_octonion(k, rng);
        auto b = random_octonion(k, rng);
        if (!oequal(k, w.apply(k, omul(k, a, b)), omul(k, w.apply(k, a), w.apply(k, b)))) return false;
    }
    return true;
}

}  // namespace octsolve

#endif
