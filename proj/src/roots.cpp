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

#include "octsolve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace octsolve {

namespace {

using QPoly = ScalarPoly<RationalField>;
const RationalField kQ;

void require_nonzero(bool zero) {
    if (zero) throw std::invalid_argument("indeterminate root set");
}

/// Integer coefficients, lowest degree first.
using ZPoly = std::vector<mpz_class>;

/// Multiply through by the denominators and divide out the content.
/// The scaling factor is positive, so signs are preserved.
QPoly primitive_integer_form(const QPoly& p) {
    mpz_class l = 1, g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<mpq_class> out;
    for (const auto& c : p.coefficients()) {
        mpq_class scaled = c * l;
        out.push_back(scaled);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num().get_mpz_t());
    }
    if (g != 0) {
        for (auto& c : out) c /= g;
    }
    return QPoly(kQ, std::move(out));
}

ZPoly numerators(const QPoly& p) {
    const QPoly prim = primitive_integer_form(p);
    ZPoly out;
    for (const auto& c : prim.coefficients()) out.push_back(c.get_num());
    return out;
}

/// Sign of p(num/den), den > 0, from the homogenised integer form.
int sign_at(const ZPoly& p, const mpq_class& x) {
    if (p.empty()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = p.back(), dpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        dpow *= den;
        acc = acc * num + p[i] * dpow;
    }
    return sgn(acc);
}

/// Sturm chain of the square-free part of a polynomial.
class SturmChain {
   public:
    explicit SturmChain(const QPoly& p) {
        QPoly d = poly_derivative(kQ, p);
        QPoly g = poly_gcd(kQ, p, d);
        QPoly s = primitive_integer_form(g.degree() > 0 ? poly_exact_div(kQ, p, g) : p);
        squarefree_ = s;
        std::vector<QPoly> chain{s, primitive_integer_form(poly_derivative(kQ, s))};
        while (!chain.back().is_zero()) {
            QPoly r = poly_rem(kQ, chain[chain.size() - 2], chain.back());
            chain.push_back(primitive_integer_form(poly_neg(kQ, r)));
        }
        chain.pop_back();
        for (const auto& q : chain) chain_.push_back(numerators(q));
    }

    /// Primitive with integer coefficients.
    const QPoly& squarefree() const { return squarefree_; }
    int squarefree_sign(const mpq_class& x) const { return sign_at(chain_.front(), x); }

    int variations(const mpq_class& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = sign_at(q, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Distinct roots in (lo, hi].
    int count(const mpq_class& lo, const mpq_class& hi) const { return variations(lo) - variations(hi); }

    /// A power of two exceeding every root in absolute value, from
    /// |x| < 2 max_i |a_{n-i} / a_n|^{1/i}.
    mpq_class root_bound() const {
        const auto& c = chain_.front();
        const long n = static_cast<long>(c.size()) - 1;
        const long lead_bits = static_cast<long>(mpz_sizeinbase(c.back().get_mpz_t(), 2));
        long e = 0;
        for (long i = 1; i <= n; ++i) {
            const auto& a = c[static_cast<std::size_t>(n - i)];
            if (a == 0) continue;
            // |a / lead| < 2^(bits(a) - bits(lead) + 1)
            const long r = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - lead_bits + 1;
            const long ceil_div = r > 0 ? (r + i - 1) / i : 0;
            e = std::max(e, ceil_div);
        }
        mpz_class b = 1;
        b <<= static_cast<mp_bitcnt_t>(e + 1);
        return mpq_class(b);
    }

   private:
    QPoly squarefree_;
    std::vector<ZPoly> chain_;
};

std::vector<RootInterval> isolate(const SturmChain& chain) {
    std::vector<RootInterval> out;
    if (chain.squarefree().degree() < 1) return out;
    mpq_class bound = chain.root_bound();
    std::vector<RootInterval> stack{{-bound, bound}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int n = chain.count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        mpq_class mid = (iv.lo + iv.hi) / 2;
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
    return out;
}

/// Halves an isolating interval until done(iv) holds or the root is hit
/// exactly. The root is simple, so the square-free part changes sign there.
template <class Done>
RootInterval refine(const SturmChain& chain, RootInterval iv, Done done) {
    const int shi = chain.squarefree_sign(iv.hi);
    if (shi == 0) return {iv.hi, iv.hi};
    while (!done(iv)) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        const int sm = chain.squarefree_sign(mid);
        if (sm == 0) return {mid, mid};
        if (sm == shi) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return iv;
}

}  // namespace

std::size_t count_real_roots(const QPoly& p, const mpq_class& lo, const mpq_class& hi) {
    require_nonzero(p.is_zero());
    if (p.degree() == 0) return 0;
    return static_cast<std::size_t>(SturmChain(p).count(lo, hi));
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const mpq_class& width) {
    require_nonzero(p.is_zero());
    SturmChain chain(p);
    std::vector<RootInterval> out;
    for (const auto& iv : isolate(chain)) {
        out.push_back(refine(chain, iv, [&](const RootInterval& r) { return r.hi - r.lo <= width; }));
    }
    return out;
}

std::vector<mpq_class> univariate_roots(const RationalField&, const QPoly& p) {
    require_nonzero(p.is_zero());
    std::vector<mpq_class> roots;
    if (p.degree() == 0) return roots;
    SturmChain chain(p);
    const QPoly& prim = chain.squarefree();
    mpq_class lead = abs(prim.leading());
    // a rational root m/q in lowest terms has q | lead, so lead * root is an integer
    mpq_class width = 1 / (2 * lead);
    for (const auto& iv0 : isolate(chain)) {
        RootInterval iv = refine(chain, iv0, [&](const RootInterval& r) { return r.hi - r.lo < width; });
        if (iv.lo == iv.hi) {
            roots.push_back(iv.lo);
            continue;
        }
        mpq_class scaled = iv.hi * lead;
        mpz_class m;
        mpz_fdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
        mpq_class candidate(m, lead.get_num());
        candidate.canonicalize();
        if (candidate > iv.lo && candidate <= iv.hi && sgn(prim(kQ, candidate)) == 0) roots.push_back(candidate);
    }
    return roots;
}

std::vector<double> real_roots(const QPoly& p) {
    require_nonzero(p.is_zero());
    std::vector<double> roots;
    if (p.degree() == 0) return roots;
    SturmChain chain(p);
    const mpq_class rel(1, mpz_class(1) << 62);
    for (const auto& iv0 : isolate(chain)) {
        RootInterval iv = refine(chain, iv0, [&](const RootInterval& r) {
            mpq_class scale = std::max({mpq_class(1), mpq_class(abs(r.lo)), mpq_class(abs(r.hi))});
            return r.hi - r.lo <= rel * scale;
        });
        double x = RealField::from_rational((iv.lo + iv.hi) / 2);
        if (roots.empty() || roots.back() != x) roots.push_back(x);
    }
    return roots;
}

std::vector<double> univariate_roots(const RealField& k, const ScalarPoly<RealField>& p) {
    require_nonzero(p.is_zero());
    std::vector<mpq_class> exact;
    for (double c : p.coefficients()) exact.push_back(RealField::to_rational(c));
    std::vector<double> roots;
    for (double x : real_roots(QPoly(kQ, std::move(exact)))) {
        if (roots.empty() || !k.equal(roots.back(), x)) roots.push_back(x);
    }
    return roots;
}

namespace {

using PPoly = ScalarPoly<PrimeField>;

constexpr std::uint32_t kEnumerationLimit = 4096;

/// g is squarefree and splits into distinct linear factors over GF(p), p odd.
void split_linear(const PrimeField& k, const PPoly& g, std::mt19937_64& rng, std::vector<Residue>& out) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(k.neg(k.div(g.coeff(k, 0), g.leading())));
        return;
    }
    const std::uint64_t half = (static_cast<std::uint64_t>(k.modulus()) - 1) / 2;
    for (;;) {
        PPoly shift(k, {k.random(rng), k.one()});
        PPoly h = poly_sub(k, poly_powmod(k, shift, half, g), PPoly::constant(k, k.one()));
        PPoly d = poly_gcd(k, h, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(k, d, rng, out);
            split_linear(k, poly_exact_div(k, g, d), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Residue> univariate_roots(const PrimeField& k, const PPoly& p) {
    require_nonzero(p.is_zero());
    std::vector<Residue> roots;
    if (p.degree() == 0) return roots;
    if (k.modulus() <= kEnumerationLimit) {
        for (std::uint64_t i = 0; i < k.order(); ++i) {
            if (k.is_zero(p(k, k.element(i)))) roots.push_back(k.element(i));
        }
        return roots;
    }
    PPoly x = PPoly::monomial(k, 1, k.one());
    PPoly xp = poly_sub(k, poly_powmod(k, x, k.modulus(), poly_monic(k, p)), x);
    PPoly g = poly_gcd(k, xp, p);
    std::mt19937_64 rng(0x6f637473u);
    split_linear(k, g, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace octsolve
