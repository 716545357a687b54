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

#include "octsolve/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

namespace octsolve {

namespace {

void require_small(const PrimeField& k) {
    const auto p = k.modulus();
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("enumeration too large");
}

}  // namespace

std::uint64_t octonion_count(const PrimeField& k) {
    std::uint64_t n = 1;
    for (int i = 0; i < 8; ++i) n *= k.modulus();
    return n;
}

std::uint64_t encode(const PrimeField& k, const Octonion<PrimeField>& a) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < 8; ++i) idx = idx * k.modulus() + a.component(i).value;
    return idx;
}

Octonion<PrimeField> decode(const PrimeField& k, std::uint64_t index) {
    auto a = Octonion<PrimeField>::zero(k);
    for (std::size_t i = 8; i-- > 0;) {
        a.component(i) = Residue{static_cast<std::uint32_t>(index % k.modulus())};
        index /= k.modulus();
    }
    return a;
}

EnumerationPlan EnumerationPlan::make(const PrimeField& k, std::size_t block_count) {
    require_small(k);
    EnumerationPlan plan;
    plan.p = k.modulus();
    plan.total = octonion_count(k);
    if (block_count == 0) block_count = std::max(1u, std::thread::hardware_concurrency());
    block_count = std::min<std::uint64_t>(block_count, plan.total);
    const std::uint64_t step = plan.total / block_count;
    const std::uint64_t extra = plan.total % block_count;
    std::uint64_t at = 0;
    for (std::size_t b = 0; b < block_count; ++b) {
        const std::uint64_t len = step + (b < extra ? 1 : 0);
        plan.blocks.push_back({at, at + len});
        at += len;
    }
    return plan;
}

bool EnumerationPlan::covers_disjointly() const {
    std::uint64_t at = 0;
    for (const auto& b : blocks) {
        if (b.begin != at || b.end < b.begin) return false;
        at = b.end;
    }
    return at == total;
}

Octonion<PrimeField> eval_by_multiplication(const PrimeField& k, const ScalarPoly<PrimeField>& f,
                                            const Octonion<PrimeField>& a) {
    auto acc = Octonion<PrimeField>::scalar(k, f.coeff(k, 0));
    auto pw = Octonion<PrimeField>::scalar(k, k.one());
    for (int d = 1; d <= f.degree(); ++d) {
        pw = omul(k, a, pw);
        const auto c = f.coeff(k, static_cast<std::size_t>(d));
        if (!k.is_zero(c)) acc = oadd(k, acc, oscale(k, c, pw));
    }
    return acc;
}

ImageTable::ImageTable(const PrimeField& k, const ScalarPoly<PrimeField>& f) {
    const auto plan = EnumerationPlan::make(k);
    image_.resize(plan.total);
    std::vector<std::future<void>> jobs;
    for (const auto& b : plan.blocks) {
        jobs.push_back(std::async(std::launch::async, [&, b] {
            for (std::uint64_t i = b.begin; i < b.end; ++i) {
                image_[i] = static_cast<std::uint32_t>(encode(k, eval_by_multiplication(k, f, decode(k, i))));
            }
        }));
    }
    for (auto& j : jobs) j.get();

    start_.assign(plan.total + 1, 0);
    for (auto v : image_) ++start_[v + 1];
    for (std::uint64_t i = 0; i < plan.total; ++i) start_[i + 1] += start_[i];
    sorted_.resize(plan.total);
    auto fill = start_;
    for (std::uint64_t i = 0; i < plan.total; ++i) sorted_[fill[image_[i]]++] = static_cast<std::uint32_t>(i);
}

std::vector<std::uint64_t> ImageTable::preimage(std::uint64_t c_index) const {
    return {sorted_.begin() + start_[c_index], sorted_.begin() + start_[c_index + 1]};
}

std::vector<Octonion<PrimeField>> brute_solve(const PrimeField& k, const ScalarPoly<PrimeField>& f,
                                              const Octonion<PrimeField>& c) {
    require_small(k);
    require_solvable_poly(k, f);
    const ImageTable table(k, f);
    std::vector<Octonion<PrimeField>> out;
    for (auto i : table.preimage(encode(k, c))) out.push_back(decode(k, i));
    return out;
}

std::vector<Matrix3<PrimeField>> sl3_gf2(const PrimeField& k) {
    if (k.modulus() != 2) throw std::invalid_argument("SL3 enumeration is implemented for GF(2) only");
    std::vector<Matrix3<PrimeField>> out;
    for (unsigned bits = 0; bits < 512; ++bits) {
        Matrix3<PrimeField> g;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) g.m[i][j] = Residue{(bits >> (3 * i + j)) & 1u};
        }
        if (!k.is_zero(det(k, g))) out.push_back(g);
    }
    return out;
}

std::vector<Octonion<PrimeField>> brute_orbit(const PrimeField& k, const Octonion<PrimeField>& a) {
    if (k.modulus() != 2) throw std::invalid_argument("orbit closure is implemented for GF(2) only");
    std::vector<Generator<PrimeField>> gens;
    for (const auto& g : sl3_gf2(k)) gens.emplace_back(Sl3Move<PrimeField>{g});
    for (std::uint64_t i = 1; i < 8; ++i) {
        Vec3<PrimeField> w;
        for (std::size_t j = 0; j < 3; ++j) w.x[j] = Residue{static_cast<std::uint32_t>((i >> j) & 1u)};
        gens.emplace_back(Delta1Move<PrimeField>{w});
        gens.emplace_back(Delta2Move<PrimeField>{w});
    }
    gens.emplace_back(HbarMove{});

    std::set<std::uint64_t> seen{encode(k, a)};
    std::vector<Octonion<PrimeField>> frontier{a};
    while (!frontier.empty()) {
        std::vector<Octonion<PrimeField>> next;
        for (const auto& b : frontier) {
            for (const auto& g : gens) {
                auto c = apply_generator(k, g, b);
                if (seen.insert(encode(k, c)).second) next.push_back(c);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Octonion<PrimeField>> out;
    for (auto i : seen) out.push_back(decode(k, i));
    return out;
}

std::vector<Octonion<PrimeField>> expand_solution(const PrimeField& k, const SolutionSet<PrimeField>& s) {
    require_small(k);
    std::set<std::uint64_t> idx;
    for (const auto& x : s.points) idx.insert(encode(k, x));
    if (!s.orbits.empty()) {
        const auto total = octonion_count(k);
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto x = decode(k, i);
            if (is_scalar(k, x)) continue;
            const auto t = trace(k, x);
            const auto mu = k.neg(norm(k, x));
            for (const auto& o : s.orbits) {
                if (k.equal(o.lambda, t) && k.equal(o.mu, mu)) {
                    idx.insert(i);
                    break;
                }
            }
        }
    }
    std::vector<Octonion<PrimeField>> out;
    for (auto i : idx) out.push_back(decode(k, i));
    return out;
}

std::vector<ScalarPoly<PrimeField>> all_polynomials(const PrimeField& k, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
    std::uint64_t count = 1;
    for (int i = 0; i < max_degree; ++i) count *= k.modulus();
    std::vector<ScalarPoly<PrimeField>> out;
    for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<Residue> c(static_cast<std::size_t>(max_degree) + 1, k.zero());
        std::uint64_t r = code;
        for (int i = 1; i <= max_degree; ++i) {
            c[static_cast<std::size_t>(i)] = Residue{static_cast<std::uint32_t>(r % k.modulus())};
            r /= k.modulus();
        }
        out.emplace_back(k, std::move(c));
    }
    return out;
}

namespace {

std::string form_key(const PrimeField& k, const Octonion<PrimeField>& c) {
    if (is_scalar(k, c)) return "scalar";
    if (k.characteristic() != 2) return to_string(SystemForm::CharNot2);
    return to_string(k.is_zero(trace(k, c)) ? SystemForm::Char2Traceless : SystemForm::Char2TraceNonzero);
}

struct PolyOutcome {
    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t bound_violations = 0;
    std::map<std::string, std::uint64_t> per_form;
    std::map<std::string, std::uint64_t> mismatches_per_form;
    std::vector<std::string> counterexamples;
};

PolyOutcome check_polynomial(const PrimeField& k, const ScalarPoly<PrimeField>& f, std::size_t max_reports) {
    PolyOutcome out;
    const ImageTable table(k, f);
    const auto total = octonion_count(k);
    const auto p = k.modulus();

    // Non-scalar elements per (trace, norm), to size orbit expansions.
    std::vector<std::uint64_t> label_count(static_cast<std::size_t>(p) * p, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto x = decode(k, i);
        if (!is_scalar(k, x)) ++label_count[trace(k, x).value * p + norm(k, x).value];
    }

    for (std::uint64_t ci = 0; ci < total; ++ci) {
        const auto c = decode(k, ci);
        const auto key = form_key(k, c);
        ++out.instances;
        ++out.per_form[key];
        std::string problem;
        try {
            const auto sol = solve(k, f, c);
            std::vector<std::uint64_t> pts;
            for (const auto& x : sol.points) pts.push_back(encode(k, x));
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

            std::uint64_t claimed = pts.size();
            for (const auto& o : sol.orbits) claimed += label_count[o.lambda.value * p + k.neg(o.mu).value];
            if (sol.variety) problem = "finite field produced an orbit variety";

            const auto truth = table.preimage(ci);
            if (problem.empty() && claimed != truth.size()) {
                problem = "solver claims " + std::to_string(claimed) + " solutions, enumeration finds " +
                          std::to_string(truth.size());
            }
            for (std::size_t t = 0; problem.empty() && t < truth.size(); ++t) {
                const auto x = decode(k, truth[t]);
                bool covered = std::binary_search(pts.begin(), pts.end(), truth[t]);
                if (!covered && !is_scalar(k, x)) {
                    const auto lam = trace(k, x);
                    const auto mu = k.neg(norm(k, x));
                    for (const auto& o : sol.orbits) covered = covered || (o.lambda == lam && o.mu == mu);
                }
                if (!covered) problem = "missing solution " + format_octonion(k, x);
            }
            if (!is_scalar(k, c)) {
                const auto d = static_cast<std::uint64_t>(f.degree());
                if (!sol.orbits.empty() || truth.size() > d * d) ++out.bound_violations;
            }
        } catch (const std::exception& e) {
            problem = std::string("solver threw: ") + e.what();
        }
        if (!problem.empty()) {
            ++out.mismatches;
            ++out.mismatches_per_form[key];
            if (out.counterexamples.size() < max_reports) {
                out.counterexamples.push_back("f = " + poly_format(k, f, "y") + ", c = " + format_octonion(k, c) + ": " +
                                              problem);
            }
        }
    }
    return out;
}

}  // namespace

VerifyReport verify_solver(const PrimeField& k, int max_degree, std::size_t max_reports) {
    require_small(k);
    VerifyReport report;
    report.p = k.modulus();
    report.max_degree = max_degree;
    for (const auto& f : all_polynomials(k, max_degree)) {
        auto o = check_polynomial(k, f, max_reports);
        ++report.polynomials;
        report.instances += o.instances;
        report.mismatches += o.mismatches;
        report.bound_violations += o.bound_violations;
        for (const auto& [key, n] : o.per_form) report.per_form[key] += n;
        for (const auto& [key, n] : o.mismatches_per_form) report.mismatches_per_form[key] += n;
        for (auto& s : o.counterexamples) {
            if (report.counterexamples.size() < max_reports) report.counterexamples.push_back(std::move(s));
        }
    }
    return report;
}

}  // namespace octsolve
