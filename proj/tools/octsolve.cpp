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

// octsolve: solve f(x) = c over split octonions from the command line.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "octsolve/io.hpp"
#include "octsolve/oracle.hpp"
#include "octsolve/radicals.hpp"

namespace {

using namespace octsolve;
using nlohmann::json;

constexpr int kMalformed = 2;

template <Field F>
json trace_json(const F& k, const ScalarPoly<F>& f, const Octonion<F>& c) {
    json t;
    t["fhat"] = bi_format(k, fhat(k, f), "lambda", "mu");
    t["fcheck"] = bi_format(k, fcheck(k, f), "lambda", "mu");
    if (is_scalar(k, c)) {
        const auto sys = build_scalar_orbit_system(k, f, c.alpha);
        t["form"] = to_string(sys.form);
        t["equations"] = {bi_format(k, sys.first, "lambda", "mu"), bi_format(k, sys.second, "lambda", "mu")};
        return t;
    }
    const auto trc = trace(k, c);
    const auto nc = norm(k, c);
    const auto sys = build_system(k, f, trc, nc);
    t["trace"] = element_json(k, trc);
    t["norm"] = element_json(k, nc);
    t["form"] = to_string(sys.form);
    t["equations"] = {bi_format(k, sys.first, "lambda", "mu"), bi_format(k, sys.second, "lambda", "mu")};
    auto pairs = json::array();
    for (const auto& [l, m] : solve_bivariate(k, sys)) pairs.push_back({{"lambda", element_json(k, l)}, {"mu", element_json(k, m)}});
    t["pairs"] = pairs;
    return t;
}

/// Scalars print bare: strings without quotes, numbers as dumped.
std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_trace(const json& t) {
    std::cerr << "fhat   = " << t["fhat"].get<std::string>() << "\n";
    std::cerr << "fcheck = " << t["fcheck"].get<std::string>() << "\n";
    if (t.contains("trace")) std::cerr << "tr(c) = " << scalar_text(t["trace"]) << ", n(c) = " << scalar_text(t["norm"]) << "\n";
    std::cerr << "system (" << t["form"].get<std::string>() << "):\n";
    for (const auto& e : t["equations"]) std::cerr << "  " << e.get<std::string>() << " = 0\n";
    if (t.contains("pairs")) {
        std::cerr << "(lambda, mu) solutions: " << t["pairs"].size() << "\n";
        for (const auto& pr : t["pairs"]) std::cerr << "  (" << scalar_text(pr["lambda"]) << ", " << scalar_text(pr["mu"]) << ")\n";
    }
}

template <Field F>
int run_solve(const F& k, const std::string& ftext, const std::string& ctext, bool trace_on, bool as_json) {
    const auto f = parse_poly(k, ftext);
    const auto c = parse_octonion(k, ctext);
    require_solvable_poly(k, f);
    json t;
    if (trace_on) {
        t = trace_json(k, f, c);
        if (!as_json) print_trace(t);
    }
    const auto sol = solve(k, f, c);
    if (as_json) {
        auto j = solution_json(k, sol);
        if (trace_on) j["trace"] = t;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << solution_text(k, sol);
    }
    return 0;
}

template <Field F>
int run_sqrt(const F& k, const std::string& ctext, bool as_json) {
    const auto c = parse_octonion(k, ctext);
    const auto r = sqrt_octonion(k, c);
    if (as_json) {
        auto j = solution_json(k, r.solutions);
        j["branch"] = to_string(r.branch);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "branch: " << to_string(r.branch) << "\n" << solution_text(k, r.solutions);
    }
    return 0;
}

int run_cbrt(const std::string& ctext, bool as_json) {
    const RealField k;
    const auto c = parse_octonion(k, ctext);
    const auto r = cbrt_octonion_real(k, c);
    if (as_json) {
        auto j = solution_json(k, r.solutions);
        j["branch"] = to_string(r.branch);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "branch: " << to_string(r.branch) << "\n" << solution_text(k, r.solutions);
    }
    return 0;
}

template <Field F>
int run_canon(const F& k, const std::string& ctext, bool as_json) {
    const auto a = parse_octonion(k, ctext);
    const auto cf = canonicalize(k, a);
    if (as_json) {
        std::cout << canonical_json(k, cf).dump(2) << "\n";
        return 0;
    }
    std::cout << "representative: " << format_octonion(k, cf.representative) << "\n";
    std::cout << "witness moves: " << cf.witness.size() << "\n";
    std::cout << canonical_json(k, cf)["witness"].dump() << "\n";
    return 0;
}

int run_verify(const std::string& field, int max_degree, bool slow) {
    const auto any = parse_field(field);
    if (!std::holds_alternative<PrimeField>(any)) throw std::invalid_argument("verify needs --field gf:<p>");
    const auto& k = std::get<PrimeField>(any);
    if (k.modulus() == 5 && !slow) throw std::invalid_argument("gf:5 sweeps need --slow");
    const auto report = verify_solver(k, max_degree);
    std::cout << "field gf:" << report.p << ", degree <= " << report.max_degree << ": " << report.polynomials
              << " polynomials, " << report.instances << " instances\n";
    for (const auto& [form, n] : report.per_form) {
        const auto it = report.mismatches_per_form.find(form);
        const auto bad = it == report.mismatches_per_form.end() ? 0 : it->second;
        std::cout << "  " << form << ": " << n << " checked, " << bad << " mismatches\n";
    }
    std::cout << "count bound violations: " << report.bound_violations << "\n";
    for (const auto& s : report.counterexamples) std::cout << "counterexample: " << s << "\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve polynomial equations with scalar coefficients over split octonions"};
    app.require_subcommand(1);

    std::string field = "q";
    std::string ftext;
    std::string ctext;
    bool trace_on = false;
    bool as_json = false;

    auto* solve_cmd = app.add_subcommand("solve", "all x with f(x) = c");
    solve_cmd->add_option("--field", field, "q, r or gf:<p>");
    solve_cmd->add_option("--f", ftext, "coefficients a_n,...,a_1 (constant term is 0)")->required();
    solve_cmd->add_option("--c", ctext, "[alpha; u1,u2,u3; v1,v2,v3; beta]")->required();
    solve_cmd->add_flag("--trace", trace_on, "show the reduced system in (lambda, mu)");
    solve_cmd->add_flag("--json", as_json, "JSON output");

    auto* sqrt_cmd = app.add_subcommand("sqrt", "all x with x^2 = c");
    sqrt_cmd->add_option("--field", field, "q, r or gf:<p>");
    sqrt_cmd->add_option("--c", ctext, "[alpha; u1,u2,u3; v1,v2,v3; beta]")->required();
    sqrt_cmd->add_flag("--json", as_json, "JSON output");

    auto* cbrt_cmd = app.add_subcommand("cbrt", "all real x with x^3 = c");
    cbrt_cmd->add_option("--c", ctext, "[alpha; u1,u2,u3; v1,v2,v3; beta]")->required();
    cbrt_cmd->add_flag("--json", as_json, "JSON output");

    auto* canon_cmd = app.add_subcommand("canon", "canonical orbit representative with a witness");
    canon_cmd->add_option("--field", field, "q, r or gf:<p>");
    canon_cmd->add_option("--c", ctext, "[alpha; u1,u2,u3; v1,v2,v3; beta]")->required();
    canon_cmd->add_flag("--json", as_json, "JSON output");

    int max_degree = 3;
    bool slow = false;
    auto* verify_cmd = app.add_subcommand("verify", "compare the solver with exhaustive enumeration");
    verify_cmd->add_option("--field", field, "gf:2, gf:3 or gf:5")->required();
    verify_cmd->add_option("--max-degree", max_degree, "largest degree of f")->check(CLI::Range(1, 8));
    verify_cmd->add_flag("--slow", slow, "allow gf:5");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify_cmd) return run_verify(field, max_degree, slow);
        if (*cbrt_cmd) return run_cbrt(ctext, as_json);
        const auto any = parse_field(field);
        return std::visit(
            [&](const auto& k) {
                if (*solve_cmd) return run_solve(k, ftext, ctext, trace_on, as_json);
                if (*sqrt_cmd) return run_sqrt(k, ctext, as_json);
                return run_canon(k, ctext, as_json);
            },
            any);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
}
