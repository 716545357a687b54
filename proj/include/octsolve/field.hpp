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

#ifndef OCTSOLVE_FIELD_HPP
#define OCTSOLVE_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace octsolve {

/// What a coefficient field can do beyond the four operations. The solver
/// branches on these flags instead of on concrete field types where it can.
struct FieldCapabilities {
    bool has_sqrt = true;
    bool has_cbrt = false;
    bool enumerable = false;
    bool has_univariate_roots = true;
    bool exact = true;
    std::uint64_t characteristic = 0;
};

/// A field context. Elements are plain values; every operation goes through
/// the context so that runtime parameters (the modulus of GF(p), the
/// tolerance of R) live in one place.
///
/// `is_zero` and `equal` are the field's notion of equality: exact for Q and
/// GF(p), tolerance-based for R.
template <class F>
concept Field = std::copy_constructible<F> &&
    requires(const F& k, const typename F::Element& a, const typename F::Element& b, long long n,
             std::string_view text, std::mt19937_64& rng) {
        typename F::Element;
        { k.zero() } -> std::same_as<typename F::Element>;
        { k.one() } -> std::same_as<typename F::Element>;
        { k.from_int(n) } -> std::same_as<typename F::Element>;
        { k.add(a, b) } -> std::same_as<typename F::Element>;
        { k.sub(a, b) } -> std::same_as<typename F::Element>;
        { k.mul(a, b) } -> std::same_as<typename F::Element>;
        { k.neg(a) } -> std::same_as<typename F::Element>;
        { k.inv(a) } -> std::same_as<typename F::Element>;
        { k.div(a, b) } -> std::same_as<typename F::Element>;
        { k.is_zero(a) } -> std::same_as<bool>;
        { k.equal(a, b) } -> std::same_as<bool>;
        { k.less(a, b) } -> std::same_as<bool>;
        { k.sqrt(a) } -> std::same_as<std::optional<typename F::Element>>;
        { k.characteristic() } -> std::same_as<std::uint64_t>;
        { k.capabilities() } -> std::same_as<FieldCapabilities>;
        { k.format(a) } -> std::same_as<std::string>;
        { k.parse(text) } -> std::same_as<typename F::Element>;
        { k.random(rng) } -> std::same_as<typename F::Element>;
        { k.name() } -> std::same_as<std::string>;
    };

/// Finite fields whose elements can be listed. `element(i)` for
/// i in [0, order()) visits each element exactly once.
template <class F>
concept EnumerableField = Field<F> && requires(const F& k, std::uint64_t i) {
    { k.order() } -> std::same_as<std::uint64_t>;
    { k.element(i) } -> std::same_as<typename F::Element>;
};

/// Fields with an ordered real structure (cube roots, absolute values).
template <class F>
concept RealLikeField = Field<F> && requires(const F& k, const typename F::Element& a) {
    { k.cbrt(a) } -> std::same_as<typename F::Element>;
    { k.abs(a) } -> std::same_as<typename F::Element>;
    { k.to_double(a) } -> std::same_as<double>;
    { k.tolerance() } -> std::same_as<double>;
};

template <Field F>
using element_t = typename F::Element;

/// Repeated squaring in the field; n may be negative for nonzero a.
template <Field F>
element_t<F> field_pow(const F& k, element_t<F> a, long long n) {
    if (n < 0) {
        a = k.inv(a);
        n = -n;
    }
    element_t<F> acc = k.one();
    while (n > 0) {
        if (n & 1) acc = k.mul(acc, a);
        a = k.mul(a, a);
        n >>= 1;
    }
    return acc;
}

}  // namespace octsolve

#endif
