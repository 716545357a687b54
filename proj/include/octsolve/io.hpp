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

#ifndef OCTSOLVE_IO_HPP
#define OCTSOLVE_IO_HPP

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "prime_field.hpp"
#include "rational_field.hpp"
#include "real_field.hpp"
#include "solver.hpp"

namespace octsolve {

using AnyField = std::variant<PrimeField, RationalField, RealField>;

/// "q", "r" or "gf:<prime>".
AnyField parse_field(std::string_view text);

/// Splits on commas, semicolons and whitespace; brackets are ignored.
std::vector<std::string> split_tokens(std::string_view text);

/// "a_n,...,a_1": coefficients from the leading one down to y^1. The
/// constant term is zero.
template <Field F>
ScalarPoly<F> parse_poly(const F& k, std::string_view text) {
    const auto tok = split_tokens(text);
    if (tok.empty()) throw std::invalid_argument("empty coefficient list");
    std::vector<element_t<F>> c(tok.size() + 1, k.zero());
    for (std::size_t i = 0; i < tok.size(); ++i) c[tok.size() - i] = k.parse(tok[i]);
    return ScalarPoly<F>(k, std::move(c));
}

/// "[alpha; u1,u2,u3; v1,v2,v3; beta]", or eight values in that order.
template <Field F>
Octonion<F> parse_octonion(const F& k, std::string_view text) {
    const auto tok = split_tokens(text);
    if (tok.size() != 8) throw std::invalid_argument("an octonion needs 8 components, got " + std::to_string(tok.size()));
    auto a = Octonion<F>::zero(k);
    for (std::size_t i = 0; i < 8; ++i) a.component(i) = k.parse(tok[i]);
    return a;
}

/// GF(p) as an integer, Q as a string "a/b", R as a number.
template <Field F>
nlohmann::json element_json(const F& k, const element_t<F>& a) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        return a.value;
    } else if constexpr (std::is_same_v<F, RealField>) {
        return a;
    } else {
        return k.format(a);
    }
}

template <Field F>
nlohmann::json vec_json(const F& k, const Vec3<F>& v) {
    auto j = nlohmann::json::array();
    for (const auto& x : v.x) j.push_back(element_json(k, x));
    return j;
}

template <Field F>
nlohmann::json octonion_json(const F& k, const Octonion<F>& a) {
    return {{"a", element_json(k, a.alpha)}, {"u", vec_json(k, a.u)}, {"v", vec_json(k, a.v)}, {"b", element_json(k, a.beta)}};
}

template <Field F>
nlohmann::json witness_json(const F& k, const AutomorphismWord<F>& w) {
    auto out = nlohmann::json::array();
    for (const auto& g : w.moves()) {
        std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, Sl3Move<F>>) {
                    auto rows = nlohmann::json::array();
                    for (const auto& r : m.g.m) {
                        auto row = nlohmann::json::array();
                        for (const auto& x : r) row.push_back(element_json(k, x));
                        rows.push_back(row);
                    }
                    out.push_back({{"move", "sl3"}, {"g", rows}});
                } else if constexpr (std::is_same_v<M, Delta1Move<F>>) {
                    out.push_back({{"move", "delta1"}, {"u", vec_json(k, m.u)}});
                } else if constexpr (std::is_same_v<M, Delta2Move<F>>) {
                    out.push_back({{"move", "delta2"}, {"v", vec_json(k, m.v)}});
                } else {
                    out.push_back({{"move", "hbar"}});
                }
            },
            g);
    }
    return out;
}

template <Field F>
nlohmann::json solution_json(const F& k, const SolutionSet<F>& s) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& x : s.points) j["points"].push_back(octonion_json(k, x));
    if (s.variety) {
        j["orbits"] = {{"variety",
                        {{"fhat", bi_format(k, s.variety->fhat, "lambda", "mu")},
                         {"mucheck", bi_format(k, s.variety->mucheck, "lambda", "mu")}}}};
    } else {
        j["orbits"] = nlohmann::json::array();
        for (const auto& o : s.orbits) j["orbits"].push_back({{"lambda", element_json(k, o.lambda)}, {"mu", element_json(k, o.mu)}});
    }
    if (!s.diagnostics.empty()) j["diagnostics"] = s.diagnostics;
    return j;
}

template <Field F>
nlohmann::json canonical_json(const F& k, const CanonicalForm<F>& cf) {
    nlohmann::json j;
    if (cf.is_scalar()) {
        j["label"] = {{"scalar", element_json(k, std::get<ScalarLabel<F>>(cf.kind).nu)}};
    } else {
        const auto& o = std::get<OrbitLabel<F>>(cf.kind);
        j["label"] = {{"lambda", element_json(k, o.lambda)}, {"mu", element_json(k, o.mu)}};
    }
    j["representative"] = octonion_json(k, cf.representative);
    j["witness"] = witness_json(k, cf.witness);
    return j;
}

/// Plain-text rendering: one point per line, then orbit labels.
template <Field F>
std::string solution_text(const F& k, const SolutionSet<F>& s) {
    std::string out;
    out += "points: " + std::to_string(s.points.size()) + "\n";
    for (const auto& x : s.points) out += "  " + format_octonion(k, x) + "\n";
    if (s.variety) {
        out += "orbits: all O(lambda, mu) with " + bi_format(k, s.variety->fhat, "lambda", "mu") + " = 0 and " +
               bi_format(k, s.variety->mucheck, "lambda", "mu") + " = 0\n";
    } else {
        out += "orbits: " + std::to_string(s.orbits.size()) + "\n";
        for (const auto& o : s.orbits) out += "  O(" + k.format(o.lambda) + ", " + k.format(o.mu) + ")\n";
    }
    for (const auto& d : s.diagnostics) out += "note: " + d + "\n";
    return out;
}

}  // namespace octsolve

#endif
