#pragma once

#include <cmath>
#include <string>

#include "torusmob/error.hpp"
#include "torusmob/rational.hpp"

namespace torusmob {

/// Element a + b*sqrt(r) of the real quadratic extension Q(sqrt(r)), r >= 0
/// rational. Values are normalized so that a perfect-square radicand is
/// folded into the rational part and b == 0 forces r == 0; mixing two
/// different irrational radicands in one expression is rejected. All
/// comparisons are exact: the sign of a + b*sqrt(r) is decided by comparing
/// a^2 against b^2*r, never by floating point.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), r_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), r_(0) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a), b_(0), r_(0) {}             // NOLINT(google-explicit-constructor)

    QuadExt(const Rational& a, const Rational& b, const Rational& r) : a_(a), b_(b), r_(r) {
        if (r_ < 0) throw error(errc::parse_error, "negative radicand");
        if (b_ == 0) {
            r_ = 0;
        } else if (auto s = exact_sqrt(r_)) {
            a_ += b_ * *s;
            b_ = 0;
            r_ = 0;
        }
    }

    const Rational& rat() const { return a_; }
    const Rational& coeff() const { return b_; }
    const Rational& radicand() const { return r_; }
    bool is_rational() const { return b_ == 0; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    int sign() const {
        if (b_ == 0) return sgn(a_);
        if (a_ == 0) return sgn(b_);
        int sa = sgn(a_), sb = sgn(b_);
        if (sa == sb) return sa;
        // a and b*sqrt(r) pull in opposite directions: compare magnitudes.
        Rational lhs = a_ * a_;
        Rational rhs = b_ * b_ * r_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.r_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Rational r = merged_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, r);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rational r = merged_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw error(errc::division_by_zero, "division by zero in Q(sqrt(r))");
        Rational r = merged_radicand(x, y);
        // Multiply by the conjugate; the norm a^2 - b^2 r of a nonzero
        // element is nonzero because r is not a perfect square here.
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * r;
        QuadExt num = x * QuadExt(y.a_, -y.b_, r);
        return QuadExt(num.a_ / norm, num.b_ / norm, r);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.r_ != y.r_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        return torusmob::to_double(a_) + torusmob::to_double(b_) * std::sqrt(torusmob::to_double(r_));
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        return to_string(a_) + (b_ > 0 ? "+" : "") + to_string(b_) + "*sqrt(" + to_string(r_) + ")";
    }

private:
    static Rational merged_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.r_;
        if (y.b_ == 0) return x.r_;
        if (x.r_ != y.r_)
            throw error(errc::parse_error, "mixed radicands in Q(sqrt(r)) arithmetic");
        return x.r_;
    }

    Rational a_, b_, r_;
};

inline int sign(const QuadExt& x) { return x.sign(); }

}  // namespace torusmob
