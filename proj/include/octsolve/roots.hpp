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

#ifndef OCTSOLVE_ROOTS_HPP
#define OCTSOLVE_ROOTS_HPP

#include <gmpxx.h>

#include <vector>

#include "poly.hpp"
#include "prime_field.hpp"
#include "rational_field.hpp"
#include "real_field.hpp"

namespace octsolve {

/// Roots lying in F, sorted ascending and without repetition. All three throw
/// std::invalid_argument("indeterminate root set") on the zero polynomial.
///
/// GF(p): enumeration for small p, otherwise gcd with x^p - x followed by
/// Cantor-Zassenhaus splitting.
std::vector<Residue> univariate_roots(const PrimeField& k, const ScalarPoly<PrimeField>& p);
/// Q: exact Sturm isolation, then the unique candidate m/L per isolating
/// interval (L the leading coefficient of the primitive integer form).
std::vector<mpq_class> univariate_roots(const RationalField& k, const ScalarPoly<RationalField>& p);
/// R: the double coefficients are lifted exactly to Q, roots are isolated with
/// Sturm sequences and bisected to full double precision.
std::vector<double> univariate_roots(const RealField& k, const ScalarPoly<RealField>& p);

/// Distinct real roots of an exact polynomial, rounded to doubles.
std::vector<double> real_roots(const ScalarPoly<RationalField>& p);

/// Number of distinct real roots in (lo, hi] of an exact rational polynomial.
std::size_t count_real_roots(const ScalarPoly<RationalField>& p, const mpq_class& lo, const mpq_class& hi);

/// Isolating intervals (lo, hi] of the distinct real roots, each refined until
/// hi - lo <= width. lo == hi marks an exactly located root.
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
};
std::vector<RootInterval> isolate_real_roots(const ScalarPoly<RationalField>& p, const mpq_class& width);

}  // namespace octsolve

#endif
