#pragma once

#include <array>
#include <string>
#include <utility>

#include "torusmob/error.hpp"
#include "torusmob/projline.hpp"
#include "torusmob/torus.hpp"

namespace torusmob {

using Vec4 = std::array<Rational, 4>;

struct Mat4 {
    std::array<std::array<Rational, 4>, 4> m{};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
        return r;
    }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rational s = 0;
                for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    friend Vec4 operator*(const Mat4& a, const Vec4& x) {
        Vec4 r{};
        for (int i = 0; i < 4; ++i) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += a.m[i][k] * x[k];
            r[i] = s;
        }
        return r;
    }

    friend bool operator==(const Mat4& a, const Mat4& b) { return a.m == b.m; }
    friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }
};

/// 2x2 rational matrix; unimodular representatives feed the SO(2,2)
/// identification.
struct Mat2 {
    Rational a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Rational det() const { return a * d - b * c; }

    Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }

    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

/// <x,y> = x1 y4 - x2 y3 - x3 y2 + x4 y1, the signature-(2,2) form.
inline Rational herm_form(const Vec4& x, const Vec4& y) {
    return x[0] * y[3] - x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
}

inline Mat4 j_matrix() {
    Mat4 j;
    j.m[0][3] = 1;
    j.m[1][2] = -1;
    j.m[2][1] = -1;
    j.m[3][0] = 1;
    return j;
}

inline bool is_zero(const Vec4& x) {
    return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0;
}

/// Projective equality: u and v are proportional by a nonzero rational.
inline bool proportional(const Vec4& u, const Vec4& v) {
    if (is_zero(u) || is_zero(v)) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

enum class VectorClass { positive, null, negative };

inline const char* to_string(VectorClass c) {
    switch (c) {
        case VectorClass::positive: return "POSITIVE";
        case VectorClass::null: return "NULL";
        case VectorClass::negative: return "NEGATIVE";
    }
    return "?";
}

inline VectorClass vector_class(const Vec4& x) {
    if (is_zero(x)) throw error(errc::zero_vector, "zero vector has no class");
    int s = sign(herm_form(x, x));
    return s > 0 ? VectorClass::positive : s < 0 ? VectorClass::negative : VectorClass::null;
}

/// Point of the real projective line in homogeneous coordinates [a : b].
struct ProjPoint {
    Rational a, b;

    bool is_zero() const { return a == 0 && b == 0; }

    static ProjPoint from_ext(const ExtReal& x) {
        if (x.is_inf()) return {1, 0};
        return {x.value(), 1};
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        return p.a * q.b == p.b * q.a && !p.is_zero() && !q.is_zero();
    }
};

/// Segre embedding ([x1:x2],[y1:y2]) -> [x1y1 : x1y2 : x2y1 : x2y2]; the
/// image is always a null vector of the form.
inline Vec4 segre(const ProjPoint& x, const ProjPoint& y) {
    if (x.is_zero() || y.is_zero()) throw error(errc::zero_vector, "zero projective coordinates");
    return {x.a * y.a, x.a * y.b, x.b * y.a, x.b * y.b};
}

/// Invert the Segre embedding on its image: w viewed as the 2x2 matrix
/// [[w1,w2],[w3,w4]] must be a nonzero rank-one matrix; its column and row
/// spaces recover the two projective factors.
inline std::pair<ProjPoint, ProjPoint> segre_inverse(const Vec4& w) {
    if (is_zero(w)) throw error(errc::not_rank_one, "zero vector");
    if (w[0] * w[3] != w[1] * w[2]) throw error(errc::not_rank_one, "w1*w4 != w2*w3");
    ProjPoint x = (w[0] != 0 || w[2] != 0) ? ProjPoint{w[0], w[2]} : ProjPoint{w[1], w[3]};
    ProjPoint y = (w[0] != 0 || w[1] != 0) ? ProjPoint{w[0], w[1]} : ProjPoint{w[2], w[3]};
    return {x, y};
}

/// <p,p'> of the Segre lifts factors as (x1x2' - x2x1')(y1y2' - y2y1'), so
/// it vanishes exactly when the points share a coordinate.
inline bool orthogonal(const ProjPoint& x, const ProjPoint& y, const ProjPoint& x2,
                       const ProjPoint& y2) {
    return (x.a * x2.b - x.b * x2.a) * (y.a * y2.b - y.b * y2.a) == 0;
}

/// The same predicate through the form on the lifts; kept as a second,
/// independent route.
inline bool orthogonal_via_form(const ProjPoint& x, const ProjPoint& y, const ProjPoint& x2,
                                const ProjPoint& y2) {
    return herm_form(segre(x, y), segre(x2, y2)) == 0;
}

inline bool orthogonal(const TorusPoint& p, const TorusPoint& q) {
    return orthogonal(ProjPoint::from_ext(p.x), ProjPoint::from_ext(p.y),
                      ProjPoint::from_ext(q.x), ProjPoint::from_ext(q.y));
}

inline bool cross_completion_contains(const TorusPoint& p, const TorusPoint& q) {
    return q.x == p.x || q.y == p.y;
}

/// Identification of a pair of unimodular matrices with an isometry of the
/// form: blockwise A = [[a1 A2^-1, b1 A2^-1], [c1 A2^-1, d1 A2^-1]].
inline Mat4 iso_sl2sq_to_so22(const Mat2& a1, const Mat2& a2) {
    if (a1.det() != 1 || a2.det() != 1)
        throw error(errc::not_unimodular, "SL(2,R) representatives must have det 1");
    Mat2 inv2 = a2.unimodular_inverse();
    std::array<std::array<Rational, 2>, 2> blocks_scale = {{{a1.a, a1.b}, {a1.c, a1.d}}};
    Mat4 r;
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const Rational& s = blocks_scale[bi][bj];
            r.m[2 * bi][2 * bj] = s * inv2.a;
            r.m[2 * bi][2 * bj + 1] = s * inv2.b;
            r.m[2 * bi + 1][2 * bj] = s * inv2.c;
            r.m[2 * bi + 1][2 * bj + 1] = s * inv2.d;
        }
    return r;
}

inline bool preserves_j(const Mat4& a) {
    return a.transpose() * j_matrix() * a == j_matrix();
}

/// Affine chart of the torus: the complement of the cross-completion of
/// infinity, with the additive group structure below.
struct NPoint {
    Rational x, y;

    friend bool operator==(const NPoint& p, const NPoint& q) { return p.x == q.x && p.y == q.y; }
};

inline Vec4 n_lift(const NPoint& p) { return {p.x * p.y, p.x, p.y, 1}; }

/// Unipotent isotropy matrix T(x,y) realising the translation by (x,y).
inline Mat4 n_T(const Rational& x, const Rational& y) {
    Mat4 t = Mat4::identity();
    t.m[0][1] = y;
    t.m[0][2] = x;
    t.m[0][3] = x * y;
    t.m[1][3] = x;
    t.m[2][3] = y;
    return t;
}

inline NPoint n_star(const NPoint& p, const NPoint& q) { return {p.x + q.x, p.y + q.y}; }
inline NPoint n_inverse(const NPoint& p) { return {-p.x, -p.y}; }

inline Rational a_fn(const NPoint& p) { return p.x * p.y; }
inline Rational gauge_sq(const NPoint& p) { return abs_val(p.x * p.y); }

inline Rational rho_n_sq(const NPoint& p, const NPoint& q) {
    return abs_val(p.x - q.x) * abs_val(p.y - q.y);
}

inline Rational euclid_sq(const NPoint& p, const NPoint& q) {
    return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

/// X through the gauge: a(p4 * p2^-1) a(p3 * p1^-1) / (a(p4 * p1^-1) a(p3 * p2^-1)).
/// Defined when no point of the quadruple lies in another's cross-completion.
inline Rational cross_ratio_via_a(const std::array<NPoint, 4>& p) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a_fn(n_star(p[j], n_inverse(p[i]))) == 0)
                throw error(errc::division_by_zero,
                            "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " share a coordinate");
    Rational num = a_fn(n_star(p[3], n_inverse(p[1]))) * a_fn(n_star(p[2], n_inverse(p[0])));
    Rational den = a_fn(n_star(p[3], n_inverse(p[0]))) * a_fn(n_star(p[2], n_inverse(p[1])));
    return num / den;
}

/// Action of the diagonal pair (D_delta, D_delta') on the affine chart:
/// (x,y) -> (delta^2 x, y / delta'^2). Scales rho_N^2 by (delta/delta')^2
/// but is not a Euclidean similarity unless delta*delta' = 1.
inline NPoint dilation_action(const Rational& delta, const Rational& delta_prime, const NPoint& p) {
    if (delta <= 0 || delta_prime <= 0)
        throw error(errc::nonpositive_dilation, "dilation parameters must be positive");
    return {delta * delta * p.x, p.y / (delta_prime * delta_prime)};
}

}  // namespace torusmob
