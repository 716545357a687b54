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

#include "octsolve/io.hpp"
#include "support.hpp"

using namespace octsolve;

TEST_SUITE("io") {
    TEST_CASE("field specs") {
        CHECK(std::holds_alternative<RationalField>(parse_field("q")));
        CHECK(std::holds_alternative<RealField>(parse_field("r")));
        const auto g = parse_field("gf:7");
        REQUIRE(std::holds_alternative<PrimeField>(g));
        CHECK(std::get<PrimeField>(g).modulus() == 7);
        CHECK_THROWS_AS(parse_field("gf:8"), std::invalid_argument);
        CHECK_THROWS_AS(parse_field("gf:"), std::invalid_argument);
        CHECK_THROWS_AS(parse_field("c"), std::invalid_argument);
        CHECK_THROWS_AS(parse_field("gf:99999999999"), std::invalid_argument);
    }

    TEST_CASE("octonion text") {
        const RationalField q;
        const auto a = parse_octonion(q, "[1/2; 1,2,3; -1,0,0; 4]");
        CHECK(format_octonion(q, a) == "[1/2; 1,2,3; -1,0,0; 4]");
        CHECK(oequal(q, parse_octonion(q, "1 2 3 4 5 6 7 8"), parse_octonion(q, "[1;2,3,4;5,6,7;8]")));
        CHECK_THROWS_AS(parse_octonion(q, "[1;2;3]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_octonion(q, "[1;2,3,x;5,6,7;8]"), std::invalid_argument);
    }

    TEST_CASE("polynomial text") {
        const RationalField q;
        const auto f = parse_poly(q, "2,0,-1");
        CHECK(poly_format(q, f) == "2*y^3 - y");
        CHECK_THROWS_AS(parse_poly(q, ""), std::invalid_argument);
    }

    TEST_CASE("json shapes") {
        const PrimeField k(5);
        const auto a = parse_octonion(k, "[1;2,3,4;0,1,2;3]");
        const auto j = octonion_json(k, a);
        CHECK(j["a"] == 1);
        CHECK(j["u"] == nlohmann::json::array({2, 3, 4}));
        CHECK(j["b"] == 3);
        const RationalField q;
        CHECK(element_json(q, mpq_class(1, 3)) == "1/3");
        CHECK(element_json(RealField{}, 0.5) == 0.5);

        SolutionSet<RationalField> s;
        s.points.push_back(Octonion<RationalField>::unit(q));
        s.orbits.push_back({mpq_class(0), mpq_class(2)});
        const auto js = solution_json(q, s);
        CHECK(js["points"].size() == 1);
        CHECK(js["orbits"][0]["mu"] == "2");
        s.variety = OrbitVariety<RationalField>{fib(q, 1), fib(q, 0)};
        const auto jv = solution_json(q, s);
        CHECK(jv["orbits"]["variety"]["fhat"] == "lambda");
    }

    TEST_CASE("witness json") {
        const RationalField q;
        const auto cf = canonicalize(q, parse_octonion(q, "[1;2,3,4;5,6,7;8]"));
        const auto j = canonical_json(q, cf);
        CHECK(j["witness"].size() == cf.witness.size());
        CHECK(j["label"]["lambda"] == "9");
        CHECK(j["label"]["mu"] == "48");
    }
}
