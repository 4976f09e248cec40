#pragma once

#include <optional>
#include <string>
#include <utility>

#include "torusmob/error.hpp"
#include "torusmob/quadext.hpp"
#include "torusmob/torus.hpp"

namespace torusmob {

/// The pair (X(x-part), X(y-part)) of circle cross-ratios of an admissible
/// quadruple; a complete invariant of the swap-free orbit.
struct VectorCrossRatio {
    Rational xr_x, xr_y;

    friend bool operator==(const VectorCrossRatio& a, const VectorCrossRatio& b) {
        return a.xr_x == b.xr_x && a.xr_y == b.xr_y;
    }
};

template <class F>
CircleQuadT<F> x_part(const TorusQuadT<F>& q) {
    return {q[0].x, q[1].x, q[2].x, q[3].x};
}

template <class F>
CircleQuadT<F> y_part(const TorusQuadT<F>& q) {
    return {q[0].y, q[1].y, q[2].y, q[3].y};
}

template <class F>
bool is_admissible_quad(const TorusQuadT<F>& q) {
    return pairwise_distinct(x_part(q)) && pairwise_distinct(y_part(q));
}

template <class F>
void require_admissible(const TorusQuadT<F>& q) {
    if (!is_admissible_quad(q))
        throw error(errc::not_admissible, "quadruple is not admissible");
}

inline VectorCrossRatio vector_cross_ratio(const TorusQuad& q) {
    require_admissible(q);
    return {cross_ratio(x_part(q)).value(), cross_ratio(y_part(q)).value()};
}

/// Discriminant whose sign separates realizable moduli from the rest:
/// also equals (1+u-v)^2 - 4u, (1+v-u)^2 - 4v and (1-u-v)^2 - 4uv.
template <class F>
F delta(const F& u, const F& v) {
    return u * u + v * v - F(2) * u - F(2) * v + F(1) - F(2) * u * v;
}

// Concrete overload so GMP expression-template arguments convert.
inline Rational delta(const Rational& u, const Rational& v) { return delta<Rational>(u, v); }

enum class PComponent { p1_0, p2_0, p3_0, p1_1, p2_1, p3_1, outside };

struct PRegion {
    PComponent component;
    bool boundary = false;  // Delta == 0; only on the p*_1 components
};

inline const char* to_string(PComponent c) {
    switch (c) {
        case PComponent::p1_0: return "P1_0";
        case PComponent::p2_0: return "P2_0";
        case PComponent::p3_0: return "P3_0";
        case PComponent::p1_1: return "P1_1";
        case PComponent::p2_1: return "P2_1";
        case PComponent::p3_1: return "P3_1";
        case PComponent::outside: return "OUTSIDE";
    }
    return "?";
}

/// Locate (u,v) among the six components of the moduli region. The three
/// sign-mixed quadrants are open components; in the positive quadrant the
/// exact conditions 1-u-v >= 0, u-v-1 >= 0, v-u-1 >= 0 together with
/// Delta >= 0 are the rational equivalents of sqrt(u)+sqrt(v) <= 1,
/// sqrt(u)-sqrt(v) >= 1 and sqrt(v)-sqrt(u) >= 1.
inline PRegion p_region(const Rational& u, const Rational& v) {
    if (u == 0 || v == 0) throw error(errc::zero_coordinate, "moduli coordinates must be nonzero");
    if (u < 0 && v > 0) return {PComponent::p1_0};
    if (u < 0 && v < 0) return {PComponent::p2_0};
    if (u > 0 && v < 0) return {PComponent::p3_0};
    Rational d = delta(u, v);
    if (d < 0) return {PComponent::outside};
    bool bd = d == 0;
    if (1 - u - v >= 0) return {PComponent::p1_1, bd};
    if (u - v - 1 >= 0) return {PComponent::p2_1, bd};
    if (v - u - 1 >= 0) return {PComponent::p3_1, bd};
    throw error(errc::not_in_p, "unreachable: Delta >= 0 admits exactly one branch");
}

enum class QComponent { q1_0, q2_0, q3_0, q1_1, q2_1, q3_1 };

struct QRegion {
    QComponent component;
    bool boundary = false;  // on the folded diagonal a == b
};

inline const char* to_string(QComponent c) {
    switch (c) {
        case QComponent::q1_0: return "Q1_0";
        case QComponent::q2_0: return "Q2_0";
        case QComponent::q3_0: return "Q3_0";
        case QComponent::q1_1: return "Q1_1";
        case QComponent::q2_1: return "Q2_1";
        case QComponent::q3_1: return "Q3_1";
    }
    return "?";
}

/// Component of the unordered pair {a,b} in the fold of the nine open
/// squares of (R \ {0,1})^2 along the diagonal.
inline QRegion q_region(const Rational& a, const Rational& b) {
    if (a == 0 || a == 1 || b == 0 || b == 1)
        throw error(errc::excluded_value, "cross-ratio values 0 and 1 are excluded");
    auto interval = [](const Rational& t) { return t < 0 ? 0 : t < 1 ? 1 : 2; };
    int lo = interval(a <= b ? a : b);
    int hi = interval(a <= b ? b : a);
    if (lo == hi) {
        QComponent c = lo == 0 ? QComponent::q1_1 : lo == 1 ? QComponent::q2_1 : QComponent::q3_1;
        return {c, a == b};
    }
    if (lo == 0 && hi == 1) return {QComponent::q1_0};
    if (lo == 0 && hi == 2) return {QComponent::q2_0};
    return {QComponent::q3_0};
}

/// Coordinate change u = ab, v = (1-a)(1-b) carrying the folded square
/// picture onto the moduli region; lands on Delta = (a-b)^2 >= 0.
inline std::pair<Rational, Rational> q_to_p(const Rational& a, const Rational& b) {
    if (a == 0 || a == 1 || b == 0 || b == 1)
        throw error(errc::excluded_value, "cross-ratio values 0 and 1 are excluded");
    return {a * b, (1 - a) * (1 - b)};
}

/// Moduli coordinates of an admissible quadruple: the two products of
/// circle cross-ratios through which every permuted cross-ratio factors.
struct ModuliPoint {
    Rational u, v, delta;
    PRegion region;

    friend bool operator==(const ModuliPoint& a, const ModuliPoint& b) {
        return a.u == b.u && a.v == b.v;
    }
};

template <class F>
struct ModuliPair {
    F u, v;
};

/// u = X(x1,x2,x3,x4)X(y1,y2,y3,y4), v = X(x1,x3,x2,x4)X(y1,y3,y2,y4),
/// over any scalar field carrying the quadruple.
template <class F>
ModuliPair<F> moduli_pair(const TorusQuadT<F>& q) {
    require_admissible(q);
    F u = cross_ratio(x_part(q)).value() * cross_ratio(y_part(q)).value();
    CircleQuadT<F> xs = x_part(q), ys = y_part(q);
    F v = cross_ratio<F>({xs[0], xs[2], xs[1], xs[3]}).value() *
          cross_ratio<F>({ys[0], ys[2], ys[1], ys[3]}).value();
    return {u, v};
}

inline ModuliPoint moduli(const TorusQuad& q) {
    auto [u, v] = moduli_pair(q);
    return {u, v, delta(u, v), p_region(u, v)};
}

inline bool on_circle(const TorusQuad& q) {
    auto [u, v] = moduli_pair(q);
    return delta(u, v) == 0;
}

/// Admissible quadruple with prescribed moduli: ((0,0),(inf,inf),(x,y),(1,1))
/// with x <= y the two roots of t^2 - (1+u-v)t + u. Coordinates live in
/// Q(sqrt(Delta)) and collapse to rationals when Delta is a perfect square.
struct ReconstructResult {
    TorusQuadT<QuadExt> points;
    Rational delta;
    bool rational_sqrt;
};

inline ReconstructResult reconstruct(const Rational& u, const Rational& v) {
    if (u == 0 || v == 0)
        throw error(errc::not_in_p, "moduli coordinates must be nonzero");
    Rational d = delta(u, v);
    if (d < 0) throw error(errc::not_in_p, "Delta < 0: no quadruple has these moduli");
    Rational half_sum = (1 + u - v) / 2;
    QuadExt x(half_sum, make_rational(-1, 2), d);
    QuadExt y(half_sum, make_rational(1, 2), d);
    using E = Extended<QuadExt>;
    TorusQuadT<QuadExt> pts = {{{E(QuadExt(Rational(0))), E(QuadExt(Rational(0)))},
                                {E::infinity(), E::infinity()},
                                {E(x), E(y)},
                                {E(QuadExt(Rational(1))), E(QuadExt(Rational(1)))}}};
    return {pts, d, exact_sqrt(d).has_value()};
}

/// Decide Moebius equivalence of two admissible quadruples and produce the
/// witnessing map. Both are normalised by p1 -> (0,0), p2 -> (inf,inf),
/// p4 -> (1,1), after which the free points carry the vector cross-ratios;
/// the quadruples are equivalent iff those agree, or agree after the
/// coordinate swap when allow_swap is set.
inline std::optional<TorusMap> equivalent(const TorusQuad& p, const TorusQuad& q, bool allow_swap) {
    require_admissible(p);
    require_admissible(q);
    TorusMap hp{mobius_from_triple(p[0].x, p[1].x, p[3].x),
                mobius_from_triple(p[0].y, p[1].y, p[3].y), false};
    TorusMap hq{mobius_from_triple(q[0].x, q[1].x, q[3].x),
                mobius_from_triple(q[0].y, q[1].y, q[3].y), false};
    TorusPoint fp = hp.apply(p[2]);
    TorusPoint fq = hq.apply(q[2]);
    if (fp == fq) return hq.inverse() * hp;
    TorusPoint fp_swapped{fp.y, fp.x};
    if (allow_swap && fp_swapped == fq) return hq.inverse() * TorusMap::coordinate_swap() * hp;
    return std::nullopt;
}

}  // namespace torusmob
