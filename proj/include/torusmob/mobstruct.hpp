#pragma once

#include <cmath>
#include <utility>

#include "torusmob/error.hpp"
#include "torusmob/moduli.hpp"

namespace torusmob {

/// The squared positive cross-ratio pair of an admissible quadruple with
/// both moduli positive. The squares are the exact carriers; the roots are
/// only materialised as doubles on demand.
struct PositivePair {
    Rational b1_sq, b2_sq;

    std::pair<double, double> roots() const {
        return {std::sqrt(to_double(b1_sq)), std::sqrt(to_double(b2_sq))};
    }
};

inline PositivePair mobius_structure(const TorusQuad& q) {
    auto [u, v] = moduli_pair(q);
    if (u <= 0 || v <= 0)
        throw error(errc::negative_modulus, "both moduli must be positive");
    return {u, v};
}

enum class PtolemyRegime {
    expansive,    // B1 + B2 >= 1 and |B1 - B2| >= 1, strictly off circles
    contractive,  // B1 + B2 <= 1 and |B1 - B2| <= 1, strictly off circles
    eq_diff_1,    // B1 - B2 = 1
    eq_diff_2,    // B2 - B1 = 1
    eq_sum,       // B1 + B2 = 1
};

inline const char* to_string(PtolemyRegime r) {
    switch (r) {
        case PtolemyRegime::expansive: return "EXPANSIVE";
        case PtolemyRegime::contractive: return "CONTRACTIVE";
        case PtolemyRegime::eq_diff_1: return "EQ_DIFF_1";
        case PtolemyRegime::eq_diff_2: return "EQ_DIFF_2";
        case PtolemyRegime::eq_sum: return "EQ_SUM";
    }
    return "?";
}

/// Exact trichotomy for B1 = sqrt(a), B2 = sqrt(b) against the two unit
/// conditions, decided entirely on the squares: with D = Delta(a,b) and
/// s = a + b - 1,
///   B1 + B2 <= 1   iff  s <= 0 and D >= 0,
///   |B1 - B2| >= 1 iff  s >= 0 and D >= 0,
/// because D = ((B1+B2)^2 - 1)((B1-B2)^2 - 1). Realizable pairs always have
/// D >= 0; D < 0 would mean one condition holds strictly and the other
/// fails, which no quadruple attains.
inline PtolemyRegime ptolemy_regime(const PositivePair& pp) {
    const Rational &a = pp.b1_sq, &b = pp.b2_sq;
    if (a <= 0 || b <= 0)
        throw error(errc::negative_modulus, "positive pair expected");
    Rational d = delta(a, b);
    if (d < 0)
        throw error(errc::mixed_regime, "pair is not realizable: Delta < 0");
    Rational s = a + b - 1;
    if (d == 0) {
        if (s < 0) return PtolemyRegime::eq_sum;
        return a >= b ? PtolemyRegime::eq_diff_1 : PtolemyRegime::eq_diff_2;
    }
    return s > 0 ? PtolemyRegime::expansive : PtolemyRegime::contractive;
}

/// Square of the pseudo-semi-metric rho((x1,y1),(x2,y2)) =
/// |x1-x2|^(1/2) |y1-y2|^(1/2): per factor, a difference with exactly one
/// infinite point is infinite and a difference of two infinite points is 0.
/// The 0 * inf combination has no consistent value and is surfaced as
/// INDETERMINATE.
inline ExtReal rho_sq(const TorusPoint& p, const TorusPoint& q) {
    auto factor = [](const ExtReal& s, const ExtReal& t) -> ExtReal {
        if (s.is_inf() && t.is_inf()) return ExtReal(Rational(0));
        if (s.is_inf() || t.is_inf()) return ext_inf();
        return ExtReal(abs_val(s.value() - t.value()));
    };
    ExtReal fx = factor(p.x, q.x);
    ExtReal fy = factor(p.y, q.y);
    bool zx = !fx.is_inf() && fx.value() == 0;
    bool zy = !fy.is_inf() && fy.value() == 0;
    if ((fx.is_inf() && zy) || (fy.is_inf() && zx))
        throw error(errc::indeterminate, "rho factors 0 and inf conflict");
    if (fx.is_inf() || fy.is_inf()) return ext_inf();
    return ExtReal(fx.value() * fy.value());
}

/// |X(p)|, the square of the positive cross-ratio; for quadruples of finite
/// points it equals the rho^2 quotient of the metric form.
inline Rational positive_cross_ratio_sq(const TorusQuad& q) {
    auto [u, v] = moduli_pair(q);
    (void)v;
    return abs_val(u);
}

}  // namespace torusmob
