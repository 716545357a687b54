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
#include "support.hpp"

using namespace octsolve;
using octsolve::testing::close;
using octsolve::testing::rng;

namespace {

BiPoly<RationalField> from_terms(const RationalField& q, std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
    BiPoly<RationalField> p;
    for (const auto& [i, j, c] : terms) p.add_term(q, i, j, mpq_class(c));
    return p;
}

}  // namespace

TEST_SUITE("fibpoly") {
    TEST_CASE("table of small indices") {
        const RationalField q;
        CHECK(fib(q, -1).is_zero());
        CHECK(bi_equal(q, fib(q, 0), from_terms(q, {{0, 0, 1}})));
        CHECK(bi_equal(q, fib(q, 1), from_terms(q, {{1, 0, 1}})));
        CHECK(bi_equal(q, fib(q, 2), from_terms(q, {{2, 0, 1}, {0, 1, 1}})));
        CHECK(bi_equal(q, fib(q, 3), from_terms(q, {{3, 0, 1}, {1, 1, 2}})));
        CHECK(bi_equal(q, fib(q, 4), from_terms(q, {{4, 0, 1}, {2, 1, 3}, {0, 2, 1}})));
        CHECK(bi_equal(q, fib(q, 5), from_terms(q, {{5, 0, 1}, {3, 1, 4}, {1, 2, 3}})));
        CHECK(bi_equal(q, fib(q, 6), from_terms(q, {{6, 0, 1}, {4, 1, 5}, {2, 2, 6}, {0, 3, 1}})));
        CHECK(bi_format(q, fib(q, 6)) == "y^6 + 5*y^4*z + 6*y^2*z^2 + z^3");
        CHECK_THROWS_AS(fib(q, -2), std::invalid_argument);
    }

    TEST_CASE("recurrence") {
        const RationalField q;
        const auto y = BiPoly<RationalField>::y(q), z = BiPoly<RationalField>::z(q);
        for (int k = 0; k <= 12; ++k) {
            CHECK(bi_equal(q, fib(q, k + 1), bi_add(q, bi_mul(q, y, fib(q, k)), bi_mul(q, z, fib(q, k - 1)))));
        }
    }

    TEST_CASE("collapse in characteristic 2") {
        const PrimeField k(2);
        // p_3 = y^3 + 2yz = y^3 over GF(2)
        BiPoly<PrimeField> y3;
        y3.add_term(k, 3, 0, k.one());
        CHECK(bi_equal(k, fib(k, 3), y3));
    }

    TEST_CASE("fhat and fcheck: examples") {
        const RationalField q;
        const auto y2 = testing::poly_from_ints(q, {0, 0, 1});
        CHECK(bi_equal(q, fhat(q, y2), from_terms(q, {{1, 0, 1}})));
        CHECK(bi_equal(q, fcheck(q, y2), from_terms(q, {{0, 0, 1}})));
        const auto y3 = testing::poly_from_ints(q, {0, 0, 0, 1});
        CHECK(bi_equal(q, fhat(q, y3), from_terms(q, {{2, 0, 1}, {0, 1, 1}})));
        CHECK(bi_equal(q, fcheck(q, y3), from_terms(q, {{1, 0, 1}})));
        const auto y1 = testing::poly_from_ints(q, {0, 1});
        CHECK(bi_equal(q, fhat(q, y1), from_terms(q, {{0, 0, 1}})));
        CHECK(fcheck(q, y1).is_zero());
    }

    TEST_CASE("fhat and fcheck: invalid polynomials") {
        const RationalField q;
        CHECK_THROWS_WITH_AS(fhat(q, testing::poly_from_ints(q, {1, 1})), "constant term must be zero", std::invalid_argument);
        CHECK_THROWS_WITH_AS(fcheck(q, ScalarPoly<RationalField>{}), "polynomial must be nonzero", std::invalid_argument);
    }

    TEST_CASE("power formula") {
        testing::for_each_field([](const auto& k) {
            for (int t = 0; t < 100; ++t) {
                const auto a = random_octonion(k, rng());
                const auto alpha = trace(k, a), beta = k.neg(norm(k, a));
                for (int n = 1; n <= 10; ++n) {
                    const auto expected = oadd_scalar(k, oscale(k, fib(k, n - 1)(k, alpha, beta), a),
                                                      k.mul(fib(k, n - 2)(k, alpha, beta), beta));
                    CHECK(close(k, power(k, a, static_cast<unsigned>(n)), expected, 1e-8));
                }
            }
        });
    }

    TEST_CASE("closed-form evaluation matches repeated multiplication") {
        testing::for_each_field([](const auto& k) {
            for (int t = 0; t < 300; ++t) {
                const auto f = testing::random_poly(k, 1 + static_cast<int>(rng()() % 6));
                const auto a = random_octonion(k, rng());
                CHECK(close(k, eval_f_at_octonion(k, f, a), eval_f_direct(k, f, a), 1e-8));
            }
        });
        const RationalField q;
        const auto a = random_octonion(q, rng());
        CHECK(oequal(q, eval_f_at_octonion(q, testing::poly_from_ints(q, {0, 1}), a), a));
        const mpq_class alpha = trace(q, a), beta = -norm(q, a);
        CHECK(oequal(q, eval_f_at_octonion(q, testing::poly_from_ints(q, {0, 0, 1}), a), oadd_scalar(q, oscale(q, alpha, a), beta)));
    }

    TEST_CASE("evaluation at points") {
        const RationalField q;
        const auto p4 = fib(q, 4);
        CHECK(p4(q, mpq_class(2), mpq_class(3)) == 16 + 36 + 9);
        const auto at = p4.at_y(q, mpq_class(2));
        CHECK(at(q, mpq_class(3)) == 61);
        CHECK(p4.at_z(q, mpq_class(3))(q, mpq_class(2)) == 61);
        const auto [h, c] = fhat_fcheck_values(q, testing::poly_from_ints(q, {0, 2, 0, 1}), mpq_class(2), mpq_class(3));
        CHECK(h == 7 + 2);  // p_2(2,3) + 2 p_0
        CHECK(c == 2);      // p_1(2,3)
    }
}
