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

#include "octsolve/linalg3.hpp"
#include "support.hpp"

using namespace octsolve;
using octsolve::testing::rng;

namespace {

template <Field F>
Vec3<F> vec(const F& k, long long a, long long b, long long c) {
    return Vec3<F>{{k.from_int(a), k.from_int(b), k.from_int(c)}};
}

template <Field F>
Vec3<F> random_vec(const F& k) {
    return Vec3<F>{{k.random(rng()), k.random(rng()), k.random(rng())}};
}

template <Field F>
Matrix3<F> random_sl3(const F& k) {
    while (true) {
        Matrix3<F> g;
        for (auto& row : g.m) {
            for (auto& x : row) x = k.random(rng());
        }
        const auto d = det(k, g);
        if (k.is_zero(d)) continue;
        // scale the first row to det 1
        for (auto& x : g.m[0]) x = k.div(x, d);
        return g;
    }
}

template <Field F>
bool vclose(const F& k, const Vec3<F>& a, const Vec3<F>& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!testing::close(k, a.x[i], b.x[i], 1e-8)) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("linalg3") {
    TEST_CASE("dot and cross: examples") {
        const RationalField q;
        CHECK(dot(q, vec(q, 1, 0, 0), vec(q, 1, 0, 0)) == 1);
        CHECK(dot(q, vec(q, 1, 2, 3), vec(q, 4, 5, 6)) == 32);
        const PrimeField g3(3);
        CHECK(dot(g3, vec(g3, 1, 2, 0), vec(g3, 2, 2, 0)) == Residue{0});
        CHECK(vequal(q, cross(q, Vec3<RationalField>::basis(q, 0), Vec3<RationalField>::basis(q, 1)),
                     Vec3<RationalField>::basis(q, 2)));
        const auto u = vec(q, 3, -1, 7);
        CHECK(vis_zero(q, cross(q, u, u)));
        CHECK(vequal(q, cross(q, vec(q, 1, 2, 3), vec(q, 4, 5, 6)), vec(q, -3, 6, -3)));
    }

    TEST_CASE("dot and cross: algebraic properties") {
        testing::for_each_field([](const auto& k) {
            for (int i = 0; i < 1000; ++i) {
                const auto u = random_vec(k), v = random_vec(k), w = random_vec(k);
                const auto s = k.random(rng());
                const auto uv = cross(k, u, v);
                CHECK(testing::close(k, dot(k, uv, u), k.zero(), 1e-10));
                CHECK(testing::close(k, dot(k, uv, v), k.zero(), 1e-10));
                CHECK(k.equal(dot(k, u, v), dot(k, v, u)));
                CHECK(vclose(k, cross(k, v, u), vneg(k, uv)));
                CHECK(vclose(k, cross(k, vadd(k, vscale(k, s, u), w), v), vadd(k, vscale(k, s, uv), cross(k, w, v))));
                CHECK(testing::close(k, dot(k, vadd(k, vscale(k, s, u), w), v),
                                     k.add(k.mul(s, dot(k, u, v)), dot(k, w, v)), 1e-10));
            }
        });
    }

    TEST_CASE("matrix inverse and determinant") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int i = 0; i < 200; ++i) {
                const auto g = random_sl3(k);
                CHECK(testing::close(k, det(k, g), k.one(), 1e-9));
                const auto prod = mmul(k, g, inverse(k, g));
                for (std::size_t r = 0; r < 3; ++r) {
                    for (std::size_t c = 0; c < 3; ++c) CHECK(testing::close(k, prod.m[r][c], r == c ? k.one() : k.zero(), 1e-8));
                }
            }
            Matrix3<F> z;
            for (auto& row : z.m) row.fill(k.zero());
            CHECK_THROWS_AS(inverse(k, z), std::domain_error);
        });
    }

    TEST_CASE("send to c1: examples") {
        const RationalField q;
        CHECK(mequal(q, sl3_send_to_c1(q, vec(q, 1, 0, 0)), Matrix3<RationalField>::identity(q)));
        const auto v = vec(q, 0, 0, 5);
        const auto g = sl3_send_to_c1(q, v);
        CHECK(det(q, g) == 1);
        CHECK(vequal(q, vmul(q, v, inverse_transpose(q, g)), Vec3<RationalField>::basis(q, 0)));
        const PrimeField g2(2);
        const auto w = vec(g2, 1, 1, 0);
        const auto h = sl3_send_to_c1(g2, w);
        CHECK(det(g2, h) == Residue{1});
        CHECK(vequal(g2, vmul(g2, w, inverse_transpose(g2, h)), Vec3<PrimeField>::basis(g2, 0)));
        CHECK_THROWS_WITH_AS(sl3_send_to_c1(q, vec(q, 0, 0, 0)), "zero vector has no normalizer", std::invalid_argument);
    }

    TEST_CASE("send to c1: postcondition on random vectors") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int i = 0; i < 1000; ++i) {
                const auto v = random_vec(k);
                if (vis_zero(k, v)) continue;
                const auto g = sl3_send_to_c1(k, v);
                CHECK(testing::close(k, det(k, g), k.one(), 1e-9));
                CHECK(vclose(k, vmul(k, v, inverse_transpose(k, g)), Vec3<F>::basis(k, 0)));
            }
        });
    }

    TEST_CASE("rescale c1") {
        const RationalField q;
        CHECK(mequal(q, sl3_rescale_c1(q, mpq_class(1)), Matrix3<RationalField>::identity(q)));
        const auto g = sl3_rescale_c1(q, mpq_class(2));
        CHECK(mequal(q, inverse_transpose(q, g), Matrix3<RationalField>::diagonal(q, mpq_class(1, 2), mpq_class(2), mpq_class(1))));
        CHECK_THROWS_AS(sl3_rescale_c1(q, mpq_class(0)), std::invalid_argument);
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int i = 0; i < 1000; ++i) {
                const auto a = k.random(rng());
                if (k.is_zero(a)) continue;
                const auto h = sl3_rescale_c1(k, a);
                CHECK(testing::close(k, det(k, h), k.one(), 1e-9));
                const Vec3<F> v{{a, k.zero(), k.zero()}};
                CHECK(vclose(k, vmul(k, v, inverse_transpose(k, h)), Vec3<F>::basis(k, 0)));
            }
        });
    }

    TEST_CASE("reduce while fixing c1") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int i = 0; i < 1000; ++i) {
                auto u = random_vec(k);
                if (i % 4 == 1) u.x[0] = k.zero();
                if (i % 8 == 1) u.x[1] = k.zero();
                if (i % 16 == 1) u = Vec3<F>::zero(k);
                const auto g = sl3_reduce_fixing_c1(k, u);
                CHECK(testing::close(k, det(k, g), k.one(), 1e-9));
                const auto c1 = Vec3<F>::basis(k, 0);
                CHECK(vclose(k, vmul(k, c1, inverse_transpose(k, g)), c1));
                const auto image = vmul(k, u, g);
                if (!k.is_zero(u.x[0])) {
                    CHECK(vclose(k, image, Vec3<F>{{u.x[0], k.zero(), k.zero()}}));
                } else if (!vis_zero(k, u)) {
                    CHECK(vclose(k, image, Vec3<F>::basis(k, 1)));
                } else {
                    CHECK(vis_zero(k, image));
                }
            }
        });
    }

    TEST_CASE("transpose and inverse transpose") {
        const RationalField q;
        for (int i = 0; i < 200; ++i) {
            const auto g = random_sl3(q);
            CHECK(mequal(q, transpose(transpose(g)), g));
            CHECK(mequal(q, inverse_transpose(q, g), transpose(inverse(q, g))));
        }
    }
}
