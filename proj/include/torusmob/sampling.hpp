#pragma once

#include <cstdint>
#include <vector>

#include "torusmob/moduli.hpp"
#include "torusmob/projline.hpp"
#include "torusmob/torus.hpp"

namespace torusmob {

/// Deterministic generator with a fixed, platform-independent sequence
/// (splitmix64). Standard-library distributions are avoided on purpose:
/// their sequences are implementation-defined and the sample command
/// promises byte-identical output for a fixed seed.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {
        next();
        next();
    }

    /// Independent stream for record `index` of run `seed`; records can be
    /// generated in any order.
    static DetRng for_record(std::uint64_t seed, std::uint64_t index) {
        DetRng r(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return r;
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned percent) { return below(100) < percent; }

    Rational rational(long max_num = 20, long max_den = 12) {
        return make_rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    ExtReal ext_real(unsigned inf_percent = 10) {
        if (chance(inf_percent)) return ext_inf();
        return ExtReal(rational());
    }

    std::vector<ExtReal> distinct_ext(int k, unsigned inf_percent = 10) {
        std::vector<ExtReal> out;
        while (static_cast<int>(out.size()) < k) {
            ExtReal v = ext_real(inf_percent);
            bool dup = false;
            for (const auto& w : out) dup = dup || w == v;
            if (!dup) out.push_back(v);
        }
        return out;
    }

    /// Moebius map of either orientation.
    MobiusMap mobius() {
        for (;;) {
            Rational a = rational(9, 5), b = rational(9, 5), c = rational(9, 5), d = rational(9, 5);
            if (a * d - b * c != 0) return MobiusMap(a, b, c, d);
        }
    }

    /// Orientation-preserving map (unimodular, product of random shears).
    MobiusMap mobius_positive() {
        Mat2x2 m = unimodular();
        return MobiusMap(m.a, m.b, m.c, m.d);
    }

    struct Mat2x2 {
        Rational a, b, c, d;
    };

    Mat2x2 unimodular() {
        Mat2x2 m{1, 0, 0, 1};
        int k = static_cast<int>(below(3)) + 2;
        for (int i = 0; i < k; ++i) {
            Rational r = rational(6, 4);
            if (chance(50)) {
                // right-multiply by [[1, r], [0, 1]]
                m = {m.a, m.a * r + m.b, m.c, m.c * r + m.d};
            } else {
                // right-multiply by [[1, 0], [r, 1]]
                m = {m.a + m.b * r, m.b, m.c + m.d * r, m.d};
            }
        }
        return m;
    }

    TorusMap torus_map(bool allow_swap) {
        return {mobius(), mobius(), allow_swap && chance(50)};
    }

    TorusQuad admissible_quad(unsigned inf_percent = 10) {
        auto xs = distinct_ext(4, inf_percent);
        auto ys = distinct_ext(4, inf_percent);
        return {{{xs[0], ys[0]}, {xs[1], ys[1]}, {xs[2], ys[2]}, {xs[3], ys[3]}}};
    }

    /// Quadruple on a random Circle.
    TorusQuad circle_quad() {
        MobiusMap g1 = mobius(), g2 = mobius();
        auto ts = distinct_ext(4);
        TorusQuad q;
        for (int i = 0; i < 4; ++i) q[i] = {g1.apply(ts[i]), g2.apply(ts[i])};
        return q;
    }

    /// Admissible quadruple with both moduli positive (the circle
    /// cross-ratios fall in the same component of R \ {0,1}).
    TorusQuad positive_moduli_quad() {
        for (;;) {
            TorusQuad q = admissible_quad();
            auto vcr = vector_cross_ratio(q);
            auto interval = [](const Rational& t) { return t < 0 ? 0 : t < 1 ? 1 : 2; };
            if (interval(vcr.xr_x) == interval(vcr.xr_y)) return q;
        }
    }

    /// Pairwise distinct torus points without any admissibility constraint.
    TorusQuad quad(unsigned inf_percent = 10) {
        for (;;) {
            TorusQuad q;
            for (int i = 0; i < 4; ++i) q[i] = {ext_real(inf_percent), ext_real(inf_percent)};
            bool ok = true;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) ok = ok && q[i] != q[j];
            if (ok) return q;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace torusmob
