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

#ifndef OCTSOLVE_ORACLE_HPP
#define OCTSOLVE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prime_field.hpp"
#include "solver.hpp"

namespace octsolve {

/// Octonions over GF(p) are numbered by their components in base p,
/// alpha being the most significant digit.
std::uint64_t octonion_count(const PrimeField& k);
std::uint64_t encode(const PrimeField& k, const Octonion<PrimeField>& a);
Octonion<PrimeField> decode(const PrimeField& k, std::uint64_t index);

/// Half-open index range [begin, end).
struct Block {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// A split of all p^8 octonions into contiguous blocks for a parallel sweep.
struct EnumerationPlan {
    std::uint32_t p = 0;
    std::uint64_t total = 0;
    std::vector<Block> blocks;

    /// Throws "enumeration too large" unless p is 2, 3 or 5.
    static EnumerationPlan make(const PrimeField& k, std::size_t block_count = 0);
    bool covers_disjointly() const;
};

/// f(a) by left-nested multiplication a(a(...a)), independent of any
/// closed-form power formula.
Octonion<PrimeField> eval_by_multiplication(const PrimeField& k, const ScalarPoly<PrimeField>& f,
                                            const Octonion<PrimeField>& a);

/// f(x) for every x in O(GF(p)), grouped by value.
class ImageTable {
   public:
    ImageTable(const PrimeField& k, const ScalarPoly<PrimeField>& f);

    /// Indices of all x with f(x) = c, ascending.
    std::vector<std::uint64_t> preimage(std::uint64_t c_index) const;
    std::uint64_t image(std::uint64_t x_index) const { return image_[x_index]; }

   private:
    std::vector<std::uint32_t> image_;
    std::vector<std::uint32_t> start_;   // CSR offsets by image value
    std::vector<std::uint32_t> sorted_;  // x indices grouped by image
};

/// {x in O(GF(p)) : f(x) = c}, ascending. p must be 2, 3 or 5.
std::vector<Octonion<PrimeField>> brute_solve(const PrimeField& k, const ScalarPoly<PrimeField>& f,
                                              const Octonion<PrimeField>& c);

/// SL3(GF(2)): all 168 invertible 3x3 matrices over GF(2).
std::vector<Matrix3<PrimeField>> sl3_gf2(const PrimeField& k);

/// Closure of {a} under every SL3 move, every delta1(u), delta2(v) and hbar.
/// GF(2) only.
std::vector<Octonion<PrimeField>> brute_orbit(const PrimeField& k, const Octonion<PrimeField>& a);

/// All octonions described by a solution set: its points and every member
/// of each listed orbit. p must be 2, 3 or 5.
std::vector<Octonion<PrimeField>> expand_solution(const PrimeField& k, const SolutionSet<PrimeField>& s);

/// Outcome of comparing solve() with enumeration for every f of bounded
/// degree and every c.
struct VerifyReport {
    std::uint32_t p = 0;
    int max_degree = 0;
    std::uint64_t polynomials = 0;
    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t bound_violations = 0;
    /// Instances checked per system form ("scalar" for c = gamma 1).
    std::map<std::string, std::uint64_t> per_form;
    std::map<std::string, std::uint64_t> mismatches_per_form;
    std::vector<std::string> counterexamples;

    bool passed() const { return mismatches == 0 && bound_violations == 0; }
};

/// Every f = a_d y^d + ... + a_1 y with d <= max_degree (not all a_i zero)
/// against every c in O(GF(p)). At most max_reports counterexamples are kept.
VerifyReport verify_solver(const PrimeField& k, int max_degree, std::size_t max_reports = 5);

/// All nonzero coefficient vectors (a_1, ..., a_d) over GF(p), as polynomials.
std::vector<ScalarPoly<PrimeField>> all_polynomials(const PrimeField& k, int max_degree);

}  // namespace octsolve

#endif
