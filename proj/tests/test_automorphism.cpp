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

#include "octsolve/automorphism.hpp"
#include "support.hpp"

using namespace octsolve;
using octsolve::testing::close;
using octsolve::testing::rng;

namespace {

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
        for (auto& x : g.m[0]) x = k.div(x, d);
        return g;
    }
}

template <Field F>
Generator<F> random_generator(const F& k, int kind) {
    switch (kind % 4) {
        case 0:
            return Sl3Move<F>{random_sl3(k)};
        case 1:
            return Delta1Move<F>{random_vec(k)};
        case 2:
            return Delta2Move<F>{random_vec(k)};
        default:
            return HbarMove{};
    }
}

}  // namespace

TEST_SUITE("automorphism") {
    TEST_CASE("empty word and involution") {
        const RationalField q;
        const AutomorphismWord<RationalField> empty;
        AutomorphismWord<RationalField> hh;
        hh.push(HbarMove{});
        hh.push(HbarMove{});
        for (int i = 0; i < 100; ++i) {
            const auto a = random_octonion(q, rng());
            CHECK(oequal(q, empty.apply(q, a), a));
            CHECK(oequal(q, hh.apply(q, a), a));
        }
    }

    TEST_CASE("generators fix the unit") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            const auto one = Octonion<F>::unit(k);
            for (int i = 0; i < 40; ++i) CHECK(close(k, apply_generator(k, random_generator(k, i), one), one));
        });
    }

    TEST_CASE("each generator is multiplicative and preserves the invariants") {
        testing::for_each_field([](const auto& k) {
            for (int kind = 0; kind < 4; ++kind) {
                for (int t = 0; t < 50; ++t) {
                    AutomorphismWord<std::decay_t<decltype(k)>> w;
                    w.push(random_generator(k, kind));
                    for (int s = 0; s < 10; ++s) {
                        const auto a = random_octonion(k, rng()), b = random_octonion(k, rng());
                        const auto wa = w.apply(k, a), wb = w.apply(k, b);
                        CHECK(close(k, w.apply(k, omul(k, a, b)), omul(k, wa, wb), 1e-8));
                        CHECK(close(k, trace(k, wa), trace(k, a), 1e-8));
                        CHECK(close(k, norm(k, wa), norm(k, a), 1e-8));
                        CHECK(close(k, bilin(k, wa, wb), bilin(k, a, b), 1e-8));
                        CHECK(close(k, conj(k, wa), w.apply(k, conj(k, a)), 1e-8));
                    }
                }
            }
        });
    }

    TEST_CASE("longer words") {
        const PrimeField k(7);
        for (int t = 0; t < 100; ++t) {
            AutomorphismWord<PrimeField> w;
            for (int i = 0; i < 6; ++i) w.push(random_generator(k, static_cast<int>(rng()() % 4)));
            CHECK(is_automorphism_on_sample(k, w, 50, rng()));
        }
        CHECK_THROWS_AS(is_automorphism_on_sample(k, AutomorphismWord<PrimeField>{}, 0, rng()), std::invalid_argument);
    }

    TEST_CASE("identity matrix is an automorphism") {
        const RationalField q;
        AutomorphismWord<RationalField> w;
        w.push(Sl3Move<RationalField>{Matrix3<RationalField>::identity(q)});
        CHECK(is_automorphism_on_sample(q, w, 100, rng()));
    }

    TEST_CASE("hbar over GF(2), all pairs") {
        const PrimeField k(2);
        const auto all = testing::all_octonions(k);
        const Generator<PrimeField> h = HbarMove{};
        bool ok = true;
        for (const auto& a : all) {
            const auto ha = apply_generator(k, h, a);
            for (const auto& b : all) {
                ok = ok && oequal(k, apply_generator(k, h, omul(k, a, b)), omul(k, ha, apply_generator(k, h, b)));
            }
        }
        CHECK(ok);
    }

    TEST_CASE("delta1 over GF(3)") {
        const PrimeField k(3);
        const auto all = testing::all_octonions(k);
        for (int t = 0; t < 5; ++t) {
            const Generator<PrimeField> d = Delta1Move<PrimeField>{random_vec(k)};
            bool ok = true;
            for (int s = 0; s < 20000; ++s) {
                const auto& a = all[rng()() % all.size()];
                const auto& b = all[rng()() % all.size()];
                ok = ok && oequal(k, apply_generator(k, d, omul(k, a, b)), omul(k, apply_generator(k, d, a), apply_generator(k, d, b)));
            }
            CHECK(ok);
        }
    }

    TEST_CASE("SL3 acts on the right") {
        testing::for_each_field([](const auto& k) {
            using F = std::decay_t<decltype(k)>;
            for (int t = 0; t < 100; ++t) {
                const auto g = random_sl3(k), h = random_sl3(k);
                AutomorphismWord<F> gh;
                gh.push(Sl3Move<F>{g});
                gh.push(Sl3Move<F>{h});
                AutomorphismWord<F> prod;
                prod.push(Sl3Move<F>{mmul(k, g, h)});
                const auto a = random_octonion(k, rng());
                CHECK(close(k, gh.apply(k, a), prod.apply(k, a), 1e-8));
            }
        });
    }
}
