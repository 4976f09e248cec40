#pragma once

#include <array>
#include <string>

#include "torusmob/error.hpp"
#include "torusmob/quadext.hpp"
#include "torusmob/rational.hpp"

namespace torusmob {

/// A point of the extended line: a scalar of F, or the point at infinity.
/// The circle S^1 is identified with the extended rational line; equality
/// is exact and infinity equals only infinity.
template <class F>
class Extended {
public:
    Extended() : inf_(false), v_(0) {}
    Extended(const F& v) : inf_(false), v_(v) {}  // NOLINT(google-explicit-constructor)
    Extended(long v) : inf_(false), v_(v) {}      // NOLINT(google-explicit-constructor)

    static Extended infinity() {
        Extended e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    const F& value() const {
        if (inf_) throw error(errc::parse_error, "value() on infinity");
        return v_;
    }

    friend bool operator==(const Extended& x, const Extended& y) {
        if (x.inf_ || y.inf_) return x.inf_ && y.inf_;
        return x.v_ == y.v_;
    }
    friend bool operator!=(const Extended& x, const Extended& y) { return !(x == y); }

private:
    bool inf_;
    F v_;
};

using ExtReal = Extended<Rational>;

inline ExtReal ext_inf() { return ExtReal::infinity(); }

inline std::string to_string(const ExtReal& x) {
    return x.is_inf() ? "inf" : to_string(x.value());
}

inline ExtReal parse_ext_real(const std::string& s) {
    if (s == "inf") return ext_inf();
    return ExtReal(parse_rational(s));
}

/// Ordered quadruple of points on the circle.
template <class F>
using CircleQuadT = std::array<Extended<F>, 4>;

using CircleQuad = CircleQuadT<Rational>;

template <class F>
bool pairwise_distinct(const CircleQuadT<F>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q[i] == q[j]) return false;
    return true;
}

namespace detail {

// One difference (p - q) of the cross-ratio, with the conventions of the
// extended line: a difference of two infinite points counts as a coincidence
// (zero), a difference with exactly one infinite point is infinite.
template <class F>
struct Factor {
    enum Kind { finite, infinite } kind;
    F v;
};

template <class F>
Factor<F> diff(const Extended<F>& p, const Extended<F>& q) {
    if (p.is_inf() && q.is_inf()) return {Factor<F>::finite, F(0)};
    if (p.is_inf() || q.is_inf()) return {Factor<F>::infinite, F(0)};
    return {Factor<F>::finite, p.value() - q.value()};
}

}  // namespace detail

/// Real cross-ratio [x1,x2,x3,x4] = ((x4-x2)(x3-x1)) / ((x4-x1)(x3-x2)).
///
/// Each of the four difference factors is cleared independently: an
/// infinite factor in the numerator cancels one in the denominator
/// (the inf:inf = 1 convention), so all arithmetic stays in F. Coincident
/// points are allowed; two coincident points give the boundary value 0, 1
/// or infinity, three or more give 0/0 and raise UNDEFINED_CROSS_RATIO.
template <class F>
Extended<F> cross_ratio(const CircleQuadT<F>& q) {
    using detail::diff;
    std::array num{diff(q[3], q[1]), diff(q[2], q[0])};
    std::array den{diff(q[3], q[0]), diff(q[2], q[1])};

    int ninf = 0, dinf = 0;
    bool nzero = false, dzero = false;
    F nval(1), dval(1);
    for (const auto& f : num) {
        if (f.kind == detail::Factor<F>::infinite) ++ninf;
        else if (f.v == F(0)) nzero = true;
        else nval *= f.v;
    }
    for (const auto& f : den) {
        if (f.kind == detail::Factor<F>::infinite) ++dinf;
        else if (f.v == F(0)) dzero = true;
        else dval *= f.v;
    }
    int cancel = ninf < dinf ? ninf : dinf;
    ninf -= cancel;
    dinf -= cancel;

    if (nzero && dzero)
        throw error(errc::undefined_cross_ratio, "cross-ratio 0/0: three or more coincident points");
    if (nzero) return Extended<F>(F(0));
    if (dzero) return Extended<F>::infinity();
    if (ninf > 0) return Extended<F>::infinity();
    if (dinf > 0) return Extended<F>(F(0));
    return Extended<F>(nval / dval);
}

template <class F>
Extended<F> cross_ratio(const Extended<F>& x1, const Extended<F>& x2, const Extended<F>& x3,
                        const Extended<F>& x4) {
    return cross_ratio<F>({x1, x2, x3, x4});
}

/// Moebius transformation of the extended rational line, represented by a
/// 2x2 rational matrix up to scaling. The canonical representative has
/// coprime integer entries and a positive first nonzero entry, so equality
/// of classes is field-wise equality. Any nonzero determinant is accepted;
/// sign(det) records whether the map preserves or reverses the cyclic
/// order of the circle.
class MobiusMap {
public:
    MobiusMap() : a_(1), b_(0), c_(0), d_(1) {}

    MobiusMap(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
        : a_(a), b_(b), c_(c), d_(d) {
        if (a_ * d_ - b_ * c_ == 0)
            throw error(errc::singular_map, "Moebius matrix with zero determinant");
        canonicalize();
    }

    static MobiusMap identity() { return MobiusMap(); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational det() const { return a_ * d_ - b_ * c_; }
    int orientation() const { return sign(det()); }

    ExtReal apply(const ExtReal& x) const {
        if (x.is_inf()) {
            if (c_ == 0) return ext_inf();
            return ExtReal(a_ / c_);
        }
        Rational den = c_ * x.value() + d_;
        if (den == 0) return ext_inf();
        return ExtReal((a_ * x.value() + b_) / den);
    }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    friend MobiusMap operator*(const MobiusMap& m, const MobiusMap& n) {
        return MobiusMap(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                         m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }

    friend bool operator==(const MobiusMap& m, const MobiusMap& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }
    friend bool operator!=(const MobiusMap& m, const MobiusMap& n) { return !(m == n); }

    bool is_identity() const { return *this == MobiusMap(); }

private:
    void canonicalize() {
        // Clear denominators, then divide out the content.
        mpz_class l = lcm(lcm(a_.get_den(), b_.get_den()), lcm(c_.get_den(), d_.get_den()));
        mpz_class na = a_.get_num() * (l / a_.get_den());
        mpz_class nb = b_.get_num() * (l / b_.get_den());
        mpz_class nc = c_.get_num() * (l / c_.get_den());
        mpz_class nd = d_.get_num() * (l / d_.get_den());
        mpz_class g = gcd(gcd(na, nb), gcd(nc, nd));
        na /= g; nb /= g; nc /= g; nd /= g;
        int lead = sgn(na) != 0 ? sgn(na) : sgn(nb) != 0 ? sgn(nb) : sgn(nc) != 0 ? sgn(nc) : sgn(nd);
        if (lead < 0) { na = -na; nb = -nb; nc = -nc; nd = -nd; }
        a_ = Rational(na); b_ = Rational(nb); c_ = Rational(nc); d_ = Rational(nd);
    }

    Rational a_, b_, c_, d_;
};

inline std::string to_string(const MobiusMap& m) {
    return "[" + to_string(m.a()) + "," + to_string(m.b()) + ";" + to_string(m.c()) + "," +
           to_string(m.d()) + "]";
}

/// The unique Moebius transformation with x1 -> 0, x2 -> inf, x3 -> 1,
/// defined through [0,inf,f(x),1] = [x1,x2,x,x3].
inline MobiusMap mobius_from_triple(const ExtReal& x1, const ExtReal& x2, const ExtReal& x3) {
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw error(errc::degenerate_triple, "coincident points in triple");
    if (x1.is_inf()) return MobiusMap(0, x3.value() - x2.value(), 1, -x2.value());
    if (x2.is_inf()) return MobiusMap(1, -x1.value(), 0, x3.value() - x1.value());
    if (x3.is_inf()) return MobiusMap(1, -x1.value(), 1, -x2.value());
    Rational s = x3.value() - x2.value();
    Rational t = x3.value() - x1.value();
    return MobiusMap(s, -x1.value() * s, t, -x2.value() * t);
}

/// Canonical map with p -> 0; a deterministic choice among the many.
inline MobiusMap mobius_point_to_zero(const ExtReal& p) {
    if (p.is_inf()) return MobiusMap(0, -1, 1, 0);
    return MobiusMap(1, -p.value(), 0, 1);
}

/// Canonical map with p -> 0 and q -> inf (p != q).
inline MobiusMap mobius_pair_to_zero_inf(const ExtReal& p, const ExtReal& q) {
    if (p == q) throw error(errc::degenerate_triple, "coincident pair");
    if (p.is_inf()) return MobiusMap(0, 1, 1, -q.value());
    if (q.is_inf()) return MobiusMap(1, -p.value(), 0, 1);
    return MobiusMap(1, -p.value(), 1, -q.value());
}

enum class SeparationType { sep_12_34, sep_13_24, sep_14_23 };

inline const char* to_string(SeparationType s) {
    switch (s) {
        case SeparationType::sep_12_34: return "12|34";
        case SeparationType::sep_13_24: return "13|24";
        case SeparationType::sep_14_23: return "14|23";
    }
    return "?";
}

/// Which pair of a pairwise-distinct quadruple separates the other on the
/// circle, read off the sign trichotomy of the cross-ratio:
/// X < 0, X > 1, 0 < X < 1.
inline SeparationType separation_type(const CircleQuad& q) {
    if (!pairwise_distinct(q))
        throw error(errc::degenerate_quad, "coincident points in quadruple");
    ExtReal x = cross_ratio(q);
    const Rational& v = x.value();
    if (v < 0) return SeparationType::sep_12_34;
    if (v > 1) return SeparationType::sep_13_24;
    return SeparationType::sep_14_23;
}

}  // namespace torusmob
