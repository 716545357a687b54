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

#include <doctest.h>

#include "octsolve/fibpoly.hpp"
#include "octsolve/octonion.hpp"
#include "support.hpp"

using namespace octsolve;
using octsolve::testing::close;
using octsolve::testing::rng;

namespace {

// Zorn product written out coordinate by coordinate.
template <Field F>
Octonion<F> product_by_components(const F& k, const Octonion<F>& a, const Octonion<F>& b) {
    const auto& [a1, u, v, a8] = a;
    const auto& [b1, x, y, b8] = b;
    auto m = [&](auto p, auto q) { return k.mul(p, q); };
    auto s = [&](auto p, auto q) { return k.add(p, q); };
    auto d = [&](auto p, auto q) { return k.sub(p, q); };
    Octonion<F> r;
    r.alpha = s(m(a1, b1), s(s(m(u.x[0], y.x[0]), m(u.x[1], y.x[1])), m(u.x[2], y.x[2])));
    r.beta = s(m(a8, b8), s(s(m(v.x[0], x.x[0]), m(v.x[1], x.x[1])), m(v.x[2], x.x[2])));
    r.u.x[0] = d(s(m(a1, x.x[0]), m(b8, u.x[0])), d(m(v.x[1], y.x[2]), m(v.x[2], y.x[1])));
    r.u.x[1] = d(s(m(a1, x.x[1]), m(b8, u.x[1])), d(m(v.x[2], y.x[0]), m(v.x[0], y.x[2])));
    r.u.x[2] = d(s(m(a1, x.x[2]), m(b8, u.x[2])), d(m(v.x[0], y.x[1]), m(v.x[1], y.x[0])));
    r.v.x[0] = s(s(m(b1, v.x[0]), m(a8, y.x[0])), d(m(u.x[1], x.x[2]), m(u.x[2], x.x[1])));
    r.v.x[1] = s(s(m(b1, v.x[1]), m(a8, y.x[1])), d(m(u.x[2], x.x[0]), m(u.x[0], x.x[2])));
    r.v.x[2] = s(s(m(b1, v.x[2]), m(a8, y.x[2])), d(m(u.x[0], x.x[1]), m(u.x[1], x.x[0])));
    return r;
}

// Every bracketing of a^n.
template <Field F>
std::vector<Octonion<F>> all_bracketings(const F& k, const Octonion<F>& a, unsigned n) {
    if (n == 1) return {a};
    std::vector<Octonion<F>> out;
    for (unsigned i = 1; i < n; ++i) {
        for (const auto& l : all_bracketings(k, a, i)) {
            for (const auto& r : all_bracketings(k, a, n - i)) out.push_back(omul(k, l, r));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("octonion") {
    TEST_CASE("basis products") {
        const RationalField q;
        const auto u1 = basis_octonion(q, 1), u2 = basis_octonion(q, 2), v3 = basis_octonion(q, 6);
        CHECK(oequal(q, omul(q, u1, u2), v3));
        CHECK(oequal(q, omul(q, u2, u1), oneg(q, v3)));
        const auto one = Octonion<RationalField>::unit(q);
        for (int i = 0; i < 100; ++i) {
            const auto a = random_octonion(q, rng());
            CHECK(oequal(q, omul(q, one, a), a));
            CHECK(oequal(q, omul(q, a, one), a));
        }
    }

    TEST_CASE("structure constants over GF(3)") {
        const PrimeField k(3);
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                const auto a = basis_octonion(k, i), b = basis_octonion(k, j);
                CHECK(oequal(k, omul(k, a, b), product_by_components(k, a, b)));
            }
        }
        for (int t = 0; t < 5000; ++t) {
            const auto a = random_octonion(k, rng()), b = random_octonion(k, rng());
            CHECK(oequal(k, omul(k, a, b), product_by_components(k, a, b)));
        }
    }

    TEST_CASE("conjugation, trace, norm, bilinear form") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            const auto one = Octonion<F>::unit(k);
            CHECK(oequal(k, conj(k, one), one));
            CHECK(k.equal(norm(k, one), k.one()));
            for (int i = 0; i < 500; ++i) {
                const auto a = random_octonion(k, rng()), b = random_octonion(k, rng());
                CHECK(close(k, oadd(k, a, conj(k, a)), Octonion<F>::scalar(k, trace(k, a))));
                CHECK(close(k, omul(k, a, conj(k, a)), Octonion<F>::scalar(k, norm(k, a))));
                const auto expected = k.sub(k.add(k.mul(a.alpha, b.beta), k.mul(b.alpha, a.beta)),
                                            k.add(dot(k, a.u, b.v), dot(k, b.u, a.v)));
                CHECK(close(k, bilin(k, a, b), expected, 1e-8));
                const auto lam = k.random(rng()), mu = k.random(rng());
                const auto c = Octonion<F>::canonical(k, lam, mu);
                CHECK(k.equal(trace(k, c), lam));
                CHECK(k.equal(norm(k, c), k.neg(mu)));
            }
        });
    }

    TEST_CASE("inverses") {
        const RationalField q;
        const auto one = Octonion<RationalField>::unit(q);
        REQUIRE(oinverse(q, one).has_value());
        CHECK(oequal(q, *oinverse(q, one), one));
        CHECK_FALSE(oinverse(q, basis_octonion(q, 1)).has_value());
        const PrimeField k(5);
        int checked = 0;
        for (int i = 0; i < 2000; ++i) {
            const auto a = random_octonion(k, rng()), b = random_octonion(k, rng());
            const auto inv = oinverse(k, a);
            CHECK(inv.has_value() == !k.is_zero(norm(k, a)));
            if (!inv) continue;
            ++checked;
            CHECK(oequal(k, omul(k, *inv, omul(k, a, b)), b));
            CHECK(oequal(k, omul(k, omul(k, b, a), *inv), b));
            CHECK(oequal(k, omul(k, a, *inv), Octonion<PrimeField>::unit(k)));
        }
        CHECK(checked > 1000);
    }

    TEST_CASE("identities on random pairs") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int i = 0; i < 1000; ++i) {
                const auto a = random_octonion(k, rng()), b = random_octonion(k, rng());
                const auto aa = omul(k, a, a);
                // quadratic identity
                CHECK(close(k, oadd_scalar(k, osub(k, aa, oscale(k, trace(k, a), a)), norm(k, a)), Octonion<F>::zero(k), 1e-9));
                // alternative laws
                CHECK(close(k, omul(k, a, omul(k, a, b)), omul(k, aa, b)));
                CHECK(close(k, omul(k, omul(k, b, a), a), omul(k, b, aa)));
                // conjugate cancels
                CHECK(close(k, omul(k, conj(k, a), omul(k, a, b)), oscale(k, norm(k, a), b)));
                CHECK(close(k, omul(k, omul(k, b, a), conj(k, a)), oscale(k, norm(k, a), b)));
                // multiplicative norm, symmetric trace
                const auto ab = omul(k, a, b);
                CHECK(close(k, norm(k, ab), k.mul(norm(k, a), norm(k, b)), 1e-9));
                CHECK(close(k, trace(k, ab), trace(k, omul(k, b, a)), 1e-9));
                // norm of a sum
                const auto rhs = k.add(k.sub(k.add(norm(k, a), norm(k, b)), trace(k, ab)), k.mul(trace(k, a), trace(k, b)));
                CHECK(close(k, norm(k, oadd(k, a, b)), rhs, 1e-9));
            }
        });
    }

    TEST_CASE("powers do not depend on bracketing") {
        const PrimeField k(3);
        for (int i = 0; i < 200; ++i) {
            const auto a = random_octonion(k, rng());
            for (unsigned n = 1; n <= 5; ++n) {
                const auto p = power(k, a, n);
                for (const auto& b : all_bracketings(k, a, n)) CHECK(oequal(k, b, p));
            }
            CHECK(oequal(k, power(k, a, 0), Octonion<PrimeField>::unit(k)));
        }
    }

    TEST_CASE("powers of canonical elements") {
        const RationalField q;
        for (int i = 0; i < 50; ++i) {
            const auto lam = q.random(rng()), mu = q.random(rng());
            const auto a = Octonion<RationalField>::canonical(q, lam, mu);
            for (int n = 1; n <= 10; ++n) {
                const auto pn = fib(q, n)(q, lam, mu);
                const auto pn1 = fib(q, n - 1)(q, lam, mu);
                const auto pn2 = fib(q, n - 2)(q, lam, mu);
                const Octonion<RationalField> expected{pn, Vec3<RationalField>{{mu * pn1, 0, 0}},
                                                       Vec3<RationalField>{{pn1, 0, 0}}, mu * pn2};
                CHECK(oequal(q, power(q, a, static_cast<unsigned>(n)), expected));
            }
        }
    }

    TEST_CASE("formatting") {
        const RationalField q;
        const Octonion<RationalField> a{mpq_class(1, 2), Vec3<RationalField>{{1, 2, 3}}, Vec3<RationalField>{{-1, 0, 0}}, 4};
        CHECK(format_octonion(q, a) == "[1/2; 1,2,3; -1,0,0; 4]");
    }
}
