#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torusmob/moduli.hpp"
#include "torusmob/sampling.hpp"

using namespace torusmob;

namespace {

ExtReal r(long n, long d = 1) { return ExtReal(make_rational(n, d)); }
TorusPoint pt(ExtReal x, ExtReal y) { return {x, y}; }
TorusPoint pt(long x, long y) { return {r(x), r(y)}; }

TorusQuad normalized(ExtReal x, ExtReal y) {
    return {pt(r(0), r(0)), pt(ext_inf(), ext_inf()), pt(x, y), pt(r(1), r(1))};
}

TorusQuad r0_quad(long a, long b, long c, long d) {
    auto mk = [](long t) { return pt(r(t), r(t)); };
    return {mk(a), mk(b), mk(c), mk(d)};
}

}  // namespace

TEST_CASE("vector cross-ratio") {
    CHECK(vector_cross_ratio(normalized(r(3), r(2))) == VectorCrossRatio{Rational(3), Rational(2)});
    TorusQuad q = {pt(0, 0), pt(1, 1), pt(2, 3), pt(4, 5)};
    CHECK(vector_cross_ratio(q) == VectorCrossRatio{make_rational(3, 2), make_rational(6, 5)});

    DetRng rng(31);
    for (int i = 0; i < 200; ++i) {
        TorusQuad p = rng.admissible_quad();
        TorusMap g{rng.mobius(), rng.mobius(), false};
        CHECK(vector_cross_ratio(g.apply(p)) == vector_cross_ratio(p));
    }

    TorusQuad bad = {pt(0, 0), pt(0, 1), pt(1, 2), pt(2, 3)};
    CHECK_THROWS_AS(vector_cross_ratio(bad), error);
}

TEST_CASE("moduli pinned values") {
    ModuliPoint m = moduli(normalized(r(3), r(2)));
    CHECK(m.u == 6);
    CHECK(m.v == 2);
    CHECK(m.delta == 1);
    CHECK(m.region.component == PComponent::p2_1);
    CHECK(!m.region.boundary);

    ModuliPoint circ = moduli(normalized(r(2), r(2)));
    CHECK(circ.u == 4);
    CHECK(circ.v == 1);
    CHECK(circ.delta == 0);
    CHECK(circ.region.boundary);
}

TEST_CASE("moduli is invariant under the swap") {
    DetRng rng(32);
    for (int i = 0; i < 300; ++i) {
        TorusQuad p = rng.admissible_quad();
        TorusQuad sp = TorusMap::coordinate_swap().apply(p);
        CHECK(moduli(p) == moduli(sp));
    }
}

TEST_CASE("delta identities") {
    CHECK(delta(Rational(6), Rational(2)) == 1);
    Rational t = make_rational(1, 3);
    CHECK(delta(t * t, (1 - t) * (1 - t)) == 0);
    CHECK(delta(Rational(5), Rational(-3)) == delta(Rational(-3), Rational(5)));

    DetRng rng(33);
    for (int i = 0; i < 300; ++i) {
        Rational u = rng.rational(), v = rng.rational();
        Rational d = delta(u, v);
        CHECK(d == (1 + u - v) * (1 + u - v) - 4 * u);
        CHECK(d == (1 + v - u) * (1 + v - u) - 4 * v);
        CHECK(d == (1 - u - v) * (1 - u - v) - 4 * u * v);
    }
}

TEST_CASE("p_region components") {
    CHECK(p_region(Rational(-1), Rational(5)).component == PComponent::p1_0);
    CHECK(p_region(Rational(-1), Rational(-2)).component == PComponent::p2_0);
    CHECK(p_region(Rational(3), Rational(-1)).component == PComponent::p3_0);
    CHECK(p_region(Rational(6), Rational(2)).component == PComponent::p2_1);
    CHECK(p_region(make_rational(1, 9), make_rational(1, 9)).component == PComponent::p1_1);
    CHECK(p_region(Rational(2), Rational(6)).component == PComponent::p3_1);
    CHECK(p_region(make_rational(1, 2), make_rational(1, 2)).component == PComponent::outside);
    CHECK(p_region(Rational(4), Rational(1)).boundary);
    CHECK_THROWS_AS(p_region(Rational(0), Rational(1)), error);

    // positive quadrant with Delta >= 0 admits exactly one branch, and the
    // exact conditions match the square-root inequalities they encode
    DetRng rng(34);
    for (int i = 0; i < 500; ++i) {
        Rational u = abs_val(rng.rational()) + make_rational(1, 100);
        Rational v = abs_val(rng.rational()) + make_rational(1, 100);
        PRegion reg = p_region(u, v);
        double su = std::sqrt(to_double(u)), sv = std::sqrt(to_double(v));
        const double tol = 1e-9;
        if (reg.component == PComponent::outside) {
            CHECK(delta(u, v) < 0);
            CHECK(su + sv > 1 - tol);
            CHECK(std::fabs(su - sv) < 1 + tol);
            continue;
        }
        int hits = (1 - u - v >= 0) + (u - v - 1 >= 0) + (v - u - 1 >= 0);
        CHECK(hits == 1);
        switch (reg.component) {
            case PComponent::p1_1: CHECK(su + sv <= 1 + tol); break;
            case PComponent::p2_1: CHECK(su - sv >= 1 - tol); break;
            case PComponent::p3_1: CHECK(sv - su >= 1 - tol); break;
            default: CHECK(false);
        }
    }
}

TEST_CASE("q_region fold") {
    CHECK(q_region(Rational(-2), make_rational(1, 2)).component == QComponent::q1_0);
    CHECK(q_region(make_rational(1, 2), Rational(-2)).component == QComponent::q1_0);
    CHECK(q_region(Rational(-3), Rational(7)).component == QComponent::q2_0);
    CHECK(q_region(make_rational(1, 3), Rational(2)).component == QComponent::q3_0);

    QRegion d1 = q_region(Rational(-3), Rational(-1));
    CHECK(d1.component == QComponent::q1_1);
    CHECK(!d1.boundary);
    CHECK(q_region(Rational(-3), Rational(-3)).boundary);
    CHECK(q_region(make_rational(1, 4), make_rational(1, 2)).component == QComponent::q2_1);
    CHECK(q_region(Rational(2), Rational(7)).component == QComponent::q3_1);
    CHECK_THROWS_AS(q_region(Rational(0), Rational(2)), error);
    CHECK_THROWS_AS(q_region(Rational(2), Rational(1)), error);
}

TEST_CASE("q_to_p lands in the moduli region") {
    CHECK(q_to_p(Rational(3), Rational(2)) == std::pair<Rational, Rational>{6, 2});
    Rational t = make_rational(2, 5);
    auto [cu, cv] = q_to_p(t, t);
    CHECK(cu == t * t);
    CHECK(cv == (1 - t) * (1 - t));
    CHECK(delta(cu, cv) == 0);
    auto [mu, mv] = q_to_p(Rational(-1), Rational(-1));
    CHECK(mu == 1);
    CHECK(mv == 4);
    CHECK(delta(mu, mv) == 0);

    // q_to_p maps each folded component into the matching moduli component
    DetRng rng(35);
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        if (a == 0 || a == 1 || b == 0 || b == 1) continue;
        auto [u, v] = q_to_p(a, b);
        PRegion pr = p_region(u, v);
        CHECK(pr.component != PComponent::outside);
        CHECK(delta(u, v) == (a - b) * (a - b));
        QRegion qr = q_region(a, b);
        // the three diagonal-square components land in the boundary family,
        // the three mixed-square components in the open family
        bool q_diag = qr.component == QComponent::q1_1 || qr.component == QComponent::q2_1 ||
                      qr.component == QComponent::q3_1;
        bool p_closed = pr.component == PComponent::p1_1 || pr.component == PComponent::p2_1 ||
                        pr.component == PComponent::p3_1;
        CHECK(q_diag == p_closed);
    }
}

TEST_CASE("q_to_p component correspondence is bijective on samples") {
    // fixed representatives of the six folded components
    auto classify_image = [](long an, long ad, long bn, long bd) {
        auto [u, v] = q_to_p(make_rational(an, ad), make_rational(bn, bd));
        return p_region(u, v).component;
    };
    CHECK(classify_image(-2, 1, 1, 2) == PComponent::p1_0);   // Q1_0
    CHECK(classify_image(-2, 1, 3, 1) == PComponent::p2_0);   // Q2_0
    CHECK(classify_image(1, 2, 3, 1) == PComponent::p3_0);    // Q3_0
    CHECK(classify_image(-2, 1, -3, 1) == PComponent::p3_1);  // Q1_1: u = ab > 0, v = (1-a)(1-b) large
    CHECK(classify_image(1, 4, 1, 2) == PComponent::p1_1);    // Q2_1
    CHECK(classify_image(2, 1, 3, 1) == PComponent::p2_1);    // Q3_1
}

TEST_CASE("reconstruct pinned cases") {
    ReconstructResult res = reconstruct(Rational(6), Rational(2));
    CHECK(res.rational_sqrt);
    CHECK(res.delta == 1);
    CHECK(res.points[2].x.value() == QuadExt(Rational(2)));
    CHECK(res.points[2].y.value() == QuadExt(Rational(3)));

    ReconstructResult dbl = reconstruct(Rational(4), Rational(1));
    CHECK(dbl.points[2].x.value() == QuadExt(Rational(2)));
    CHECK(dbl.points[2].y.value() == QuadExt(Rational(2)));

    ReconstructResult irr = reconstruct(Rational(-1), Rational(5));
    CHECK(!irr.rational_sqrt);
    CHECK(irr.delta == 29);

    CHECK_THROWS_AS(reconstruct(make_rational(1, 2), make_rational(1, 2)), error);
    CHECK_THROWS_AS(reconstruct(Rational(0), Rational(2)), error);
}

TEST_CASE("reconstruct on the boundary: double roots land on the standard Circle") {
    DetRng rng(42);
    for (int i = 0; i < 100; ++i) {
        Rational t = rng.rational();
        if (t == 0 || t == 1) continue;
        Rational u = t * t, v = (1 - t) * (1 - t);
        REQUIRE(delta(u, v) == 0);
        ReconstructResult res = reconstruct(u, v);
        CHECK(res.rational_sqrt);
        CHECK(res.points[2].x.value() == res.points[2].y.value());
        auto [ru, rv] = moduli_pair(res.points);
        CHECK(ru == QuadExt(u));
        CHECK(rv == QuadExt(v));
    }
}

TEST_CASE("reconstruct round-trips exactly, rational or not") {
    DetRng rng(36);
    int irrational_seen = 0;
    for (int i = 0; i < 300; ++i) {
        Rational u, v;
        if (i % 2 == 0) {
            // moduli with rational sqrt(Delta), built from a normalized pair
            Rational x = rng.rational(), y = rng.rational();
            if (x == 0 || x == 1 || y == 0 || y == 1 || x == y) continue;
            u = x * y;
            v = (1 - x) * (1 - y);
            if (u == 0 || v == 0) continue;
        } else {
            u = rng.rational();
            v = rng.rational();
            if (u == 0 || v == 0 || (u > 0 && v > 0 && delta(u, v) < 0)) continue;
        }
        ReconstructResult res = reconstruct(u, v);
        if (!res.rational_sqrt) ++irrational_seen;
        CHECK(is_admissible_quad(res.points));
        auto [ru, rv] = moduli_pair(res.points);
        CHECK(ru == QuadExt(u));
        CHECK(rv == QuadExt(v));
        // canonical branch: x <= y
        CHECK(res.points[2].x.value() <= res.points[2].y.value());
    }
    CHECK(irrational_seen > 0);
}

TEST_CASE("equivalent: constructed pairs produce pointwise witnesses") {
    DetRng rng(37);
    for (int i = 0; i < 200; ++i) {
        TorusQuad p = rng.admissible_quad();
        TorusMap g = rng.torus_map(true);
        TorusQuad q = g.apply(p);
        auto w = equivalent(p, q, true);
        REQUIRE(w.has_value());
        CHECK(w->apply(p) == q);
        if (!g.swap) {
            auto w0 = equivalent(p, q, false);
            REQUIRE(w0.has_value());
            CHECK(w0->apply(p) == q);
        }
    }
}

TEST_CASE("equivalent: swap dichotomy on normalized quadruples") {
    TorusQuad p = normalized(r(2), r(3));
    TorusQuad q = normalized(r(3), r(2));
    CHECK(!equivalent(p, q, false).has_value());
    auto w = equivalent(p, q, true);
    REQUIRE(w.has_value());
    CHECK(w->swap);
    CHECK(w->apply(p) == q);

    CHECK(!equivalent(normalized(r(2), r(3)), normalized(r(2), r(2)), true).has_value());
    CHECK_THROWS_AS(equivalent(p, {pt(0, 0), pt(0, 1), pt(1, 0), pt(2, 2)}, true), error);
}

TEST_CASE("equivalence with swap is decided exactly by the moduli") {
    DetRng rng(38);
    for (int i = 0; i < 200; ++i) {
        TorusQuad p = rng.admissible_quad();
        TorusQuad q = rng.admissible_quad();
        bool eq = equivalent(p, q, true).has_value();
        CHECK(eq == (moduli(p) == moduli(q)));
    }
}

TEST_CASE("on_circle") {
    CHECK(on_circle(r0_quad(0, 5, 2, 1)));
    TorusQuad diag = {pt(r(0), r(0)), pt(ext_inf(), ext_inf()), pt(r(2), r(2)), pt(r(1), r(1))};
    CHECK(on_circle(diag));
    CHECK(!on_circle(normalized(r(2), r(3))));

    DetRng rng(39);
    for (int i = 0; i < 200; ++i) {
        CHECK(on_circle(rng.circle_quad()));
        TorusQuad q = rng.admissible_quad();
        auto vcr = vector_cross_ratio(q);
        if (vcr.xr_x != vcr.xr_y) CHECK(!on_circle(q));
        CHECK(on_circle(q) == moduli(q).region.boundary);
    }
}

TEST_CASE("fundamental inequality") {
    DetRng rng(40);
    for (int i = 0; i < 500; ++i) {
        TorusQuad q = rng.admissible_quad();
        CHECK(moduli(q).delta >= 0);
        CHECK(moduli(q).region.component != PComponent::outside);
    }
}

TEST_CASE("permutation closure of the torus cross-ratio") {
    DetRng rng(41);
    auto xr = [](const TorusQuad& q, int i, int j, int k, int l) {
        TorusQuad p = {q[i], q[j], q[k], q[l]};
        auto [u, v] = moduli_pair(p);
        (void)v;
        return u;
    };
    for (int i = 0; i < 200; ++i) {
        TorusQuad q = rng.admissible_quad();
        Rational u = xr(q, 0, 1, 2, 3);
        // S1 analogues
        CHECK(xr(q, 1, 0, 3, 2) == u);
        CHECK(xr(q, 2, 3, 0, 1) == u);
        CHECK(xr(q, 3, 2, 1, 0) == u);
        // S2 analogue
        CHECK(u * xr(q, 0, 1, 3, 2) == 1);
        // S3 product of two circle S3 identities
        CHECK(u * xr(q, 0, 3, 1, 2) * xr(q, 0, 2, 3, 1) == 1);
    }
}
