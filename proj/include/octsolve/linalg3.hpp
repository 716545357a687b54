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

#ifndef OCTSOLVE_LINALG3_HPP
#define OCTSOLVE_LINALG3_HPP

#include <array>
#include <stdexcept>

#include "field.hpp"

namespace octsolve {

/// Row vector in F^3.
template <Field F>
struct Vec3 {
    std::array<element_t<F>, 3> x;

    const element_t<F>& operator[](std::size_t i) const { return x[i]; }
    element_t<F>& operator[](std::size_t i) { return x[i]; }

    static Vec3 zero(const F& k) { return {{k.zero(), k.zero(), k.zero()}}; }
    /// Standard basis vector c_{i+1}.
    static Vec3 basis(const F& k, std::size_t i) {
        Vec3 v = zero(k);
        v[i] = k.one();
        return v;
    }
};

/// 3x3 matrix, row-major; vectors multiply from the left (v * g).
template <Field F>
struct Matrix3 {
    std::array<std::array<element_t<F>, 3>, 3> m;

    const element_t<F>& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    element_t<F>& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

    static Matrix3 identity(const F& k) {
        Matrix3 g;
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) g.m[r][c] = r == c ? k.one() : k.zero();
        }
        return g;
    }
    static Matrix3 diagonal(const F& k, const element_t<F>& a, const element_t<F>& b, const element_t<F>& c) {
        Matrix3 g = identity(k);
        g.m[0][0] = a;
        g.m[1][1] = b;
        g.m[2][2] = c;
        return g;
    }
};

template <Field F>
element_t<F> dot(const F& k, const Vec3<F>& u, const Vec3<F>& v) {
    return k.add(k.add(k.mul(u[0], v[0]), k.mul(u[1], v[1])), k.mul(u[2], v[2]));
}

template <Field F>
Vec3<F> cross(const F& k, const Vec3<F>& u, const Vec3<F>& v) {
    return {{k.sub(k.mul(u[1], v[2]), k.mul(u[2], v[1])), k.sub(k.mul(u[2], v[0]), k.mul(u[0], v[2])),
             k.sub(k.mul(u[0], v[1]), k.mul(u[1], v[0]))}};
}

template <Field F>
Vec3<F> vadd(const F& k, const Vec3<F>& u, const Vec3<F>& v) {
    return {{k.add(u[0], v[0]), k.add(u[1], v[1]), k.add(u[2], v[2])}};
}

template <Field F>
Vec3<F> vsub(const F& k, const Vec3<F>& u, const Vec3<F>& v) {
    return {{k.sub(u[0], v[0]), k.sub(u[1], v[1]), k.sub(u[2], v[2])}};
}

template <Field F>
Vec3<F> vscale(const F& k, const element_t<F>& s, const Vec3<F>& u) {
    return {{k.mul(s, u[0]), k.mul(s, u[1]), k.mul(s, u[2])}};
}

template <Field F>
Vec3<F> vneg(const F& k, const Vec3<F>& u) {
    return {{k.neg(u[0]), k.neg(u[1]), k.neg(u[2])}};
}

template <Field F>
bool vis_zero(const F& k, const Vec3<F>& u) {
    return k.is_zero(u[0]) && k.is_zero(u[1]) && k.is_zero(u[2]);
}

template <Field F>
bool vequal(const F& k, const Vec3<F>& u, const Vec3<F>& v) {
    return k.equal(u[0], v[0]) && k.equal(u[1], v[1]) && k.equal(u[2], v[2]);
}

/// Row vector times matrix.
template <Field F>
Vec3<F> vmul(const F& k, const Vec3<F>& u, const Matrix3<F>& g) {
    Vec3<F> out = Vec3<F>::zero(k);
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t r = 0; r < 3; ++r) out[c] = k.add(out[c], k.mul(u[r], g(r, c)));
    }
    return out;
}

template <Field F>
Matrix3<F> mmul(const F& k, const Matrix3<F>& a, const Matrix3<F>& b) {
    Matrix3<F> out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            element_t<F> s = k.zero();
            for (std::size_t i = 0; i < 3; ++i) s = k.add(s, k.mul(a(r, i), b(i, c)));
            out(r, c) = s;
        }
    }
    return out;
}

template <Field F>
Matrix3<F> transpose(const Matrix3<F>& a) {
    Matrix3<F> out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) out(r, c) = a(c, r);
    }
    return out;
}

template <Field F>
element_t<F> det(const F& k, const Matrix3<F>& a) {
    auto minor = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        return k.sub(k.mul(a(r0, c0), a(r1, c1)), k.mul(a(r0, c1), a(r1, c0)));
    };
    element_t<F> t0 = k.mul(a(0, 0), minor(1, 2, 1, 2));
    element_t<F> t1 = k.mul(a(0, 1), minor(1, 2, 0, 2));
    element_t<F> t2 = k.mul(a(0, 2), minor(1, 2, 0, 1));
    return k.add(k.sub(t0, t1), t2);
}

/// Adjugate over the determinant; throws std::domain_error when singular.
template <Field F>
Matrix3<F> inverse(const F& k, const Matrix3<F>& a) {
    element_t<F> d = det(k, a);
    if (k.is_zero(d)) throw std::domain_error("singular 3x3 matrix");
    element_t<F> dinv = k.inv(d);
    Matrix3<F> out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            // cofactor of (c, r)
            std::size_t r0 = c == 0 ? 1 : 0, r1 = c == 2 ? 1 : 2;
            std::size_t c0 = r == 0 ? 1 : 0, c1 = r == 2 ? 1 : 2;
            element_t<F> m = k.sub(k.mul(a(r0, c0), a(r1, c1)), k.mul(a(r0, c1), a(r1, c0)));
            if ((r + c) % 2 == 1) m = k.neg(m);
            out(r, c) = k.mul(m, dinv);
        }
    }
    return out;
}

/// g^{-T}
template <Field F>
Matrix3<F> inverse_transpose(const F& k, const Matrix3<F>& g) {
    return transpose(inverse(k, g));
}

template <Field F>
bool mequal(const F& k, const Matrix3<F>& a, const Matrix3<F>& b) {
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (!k.equal(a(r, c), b(r, c))) return false;
        }
    }
    return true;
}

/// A determinant-one g with v * g^{-T} = c1.
///
/// With M the matrix whose first row is v, completed by the standard basis
/// vectors other than the first nonzero coordinate of v and scaled to
/// det M = 1, we have c1 * M = v and therefore g = M^T.
template <Field F>
Matrix3<F> sl3_send_to_c1(const F& k, const Vec3<F>& v) {
    std::size_t pivot = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!k.is_zero(v[i])) {
            pivot = i;
            break;
        }
    }
    if (pivot == 3) throw std::invalid_argument("zero vector has no normalizer");
    Matrix3<F> m;
    m.m[0] = v.x;
    std::size_t row = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        m.m[row++] = Vec3<F>::basis(k, i).x;
    }
    element_t<F> d = det(k, m);
    for (auto& e : m.m[1]) e = k.div(e, d);
    return transpose(m);
}

/// Diagonal determinant-one g with (a, 0, 0) * g^{-T} = c1: g = diag(a, 1/a, 1).
template <Field F>
Matrix3<F> sl3_rescale_c1(const F& k, const element_t<F>& a) {
    if (k.is_zero(a)) throw std::invalid_argument("cannot rescale a zero coordinate");
    return Matrix3<F>::diagonal(k, a, k.inv(a), k.one());
}

/// A determinant-one g fixing c1 under v -> v * g^{-T} and moving u to
/// (u1, 0, 0) when u1 != 0, to (0, 1, 0) when u1 = 0 and u != 0, and
/// leaving u = 0 alone.
///
/// Such g have first column c1^T: g = [[1, a, b], [0, B]] with det B = 1,
/// which sends u to (u1, u1 (a, b) + (u2, u3) B).
template <Field F>
Matrix3<F> sl3_reduce_fixing_c1(const F& k, const Vec3<F>& u) {
    Matrix3<F> g = Matrix3<F>::identity(k);
    if (!k.is_zero(u[0])) {
        g(0, 1) = k.neg(k.div(u[1], u[0]));
        g(0, 2) = k.neg(k.div(u[2], u[0]));
        return g;
    }
    if (!k.is_zero(u[1])) {
        // B = [[1/w1, -w2], [0, w1]] sends (w1, w2) to (1, 0)
        g(1, 1) = k.inv(u[1]);
        g(1, 2) = k.neg(u[2]);
        g(2, 1) = k.zero();
        g(2, 2) = u[1];
        return g;
    }
    if (!k.is_zero(u[2])) {
        // B = [[0, -w2], [1/w2, 0]] sends (0, w2) to (1, 0)
        g(1, 1) = k.zero();
        g(1, 2) = k.neg(u[2]);
        g(2, 1) = k.inv(u[2]);
        g(2, 2) = k.zero();
    }
    return g;
}

}  // namespace octsolve

#endif
