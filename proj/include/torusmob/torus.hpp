#pragma once

#include <array>
#include <string>
#include <vector>

#include "torusmob/error.hpp"
#include "torusmob/projline.hpp"

namespace torusmob {

template <class F>
struct PointT {
    Extended<F> x, y;

    friend bool operator==(const PointT& p, const PointT& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator!=(const PointT& p, const PointT& q) { return !(p == q); }
};

using TorusPoint = PointT<Rational>;

template <class F>
using TorusQuadT = std::array<PointT<F>, 4>;
using TorusQuad = TorusQuadT<Rational>;
using TorusTriple = std::array<TorusPoint, 3>;

inline std::string to_string(const TorusPoint& p) {
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

/// Element of the Moebius group of the torus, acting coordinatewise, or of
/// its extension by the coordinate swap: the map is (x,y) -> (g1(x), g2(y)),
/// followed by (x,y) -> (y,x) when swap is set.
struct TorusMap {
    MobiusMap g1, g2;
    bool swap = false;

    static TorusMap identity() { return {}; }
    static TorusMap coordinate_swap() { return {MobiusMap::identity(), MobiusMap::identity(), true}; }

    TorusPoint apply(const TorusPoint& p) const {
        ExtReal u = g1.apply(p.x);
        ExtReal v = g2.apply(p.y);
        if (swap) return {v, u};
        return {u, v};
    }

    TorusQuad apply(const TorusQuad& q) const {
        return {apply(q[0]), apply(q[1]), apply(q[2]), apply(q[3])};
    }
    TorusTriple apply(const TorusTriple& t) const { return {apply(t[0]), apply(t[1]), apply(t[2])}; }

    friend TorusMap operator*(const TorusMap& f, const TorusMap& h) {
        if (h.swap) return {f.g2 * h.g1, f.g1 * h.g2, f.swap != h.swap};
        return {f.g1 * h.g1, f.g2 * h.g2, f.swap != h.swap};
    }

    TorusMap inverse() const {
        if (swap) return {g2.inverse(), g1.inverse(), true};
        return {g1.inverse(), g2.inverse(), false};
    }

    friend bool operator==(const TorusMap& f, const TorusMap& h) {
        return f.swap == h.swap && f.g1 == h.g1 && f.g2 == h.g2;
    }
    friend bool operator!=(const TorusMap& f, const TorusMap& h) { return !(f == h); }

    bool is_identity() const { return !swap && g1.is_identity() && g2.is_identity(); }
};

/// Moebius embedding of the circle in the torus, parametrised by
/// t -> (g1(t), g2(t)). Two parametrisations describe the same Circle
/// exactly when g2 o g1^-1 agree, so that composite is the identity of the
/// class.
struct Circle {
    MobiusMap g1, g2;

    static Circle standard() { return {}; }  // the diagonal t -> (t,t)

    MobiusMap chord() const { return g2 * g1.inverse(); }

    friend bool operator==(const Circle& r, const Circle& s) { return r.chord() == s.chord(); }
    friend bool operator!=(const Circle& r, const Circle& s) { return !(r == s); }
};

inline bool circle_contains(const Circle& r, const TorusPoint& p) {
    return r.chord().apply(p.x) == p.y;
}

/// The involution of the torus fixing the Circle pointwise; conjugate of the
/// coordinate swap by any parametrisation, hence (h, h^-1, swap) with
/// h = g2 o g1^-1.
inline TorusMap circle_involution(const Circle& r) {
    MobiusMap h = r.chord();
    return {h, h.inverse(), true};
}

enum class TripleCase { a, b, c, d, e, f };

/// Which of the six Moebius-inequivalent coincidence categories a triple of
/// pairwise-distinct torus points belongs to, with the indices of the
/// coinciding coordinates where the category leaves a choice.
struct TripleClass {
    TripleCase tag;
    std::array<int, 2> xpair{0, 0};  // 1-based, d) and f)
    std::array<int, 2> ypair{0, 0};  // 1-based, e) and f)

    std::string label() const {
        switch (tag) {
            case TripleCase::a: return "a";
            case TripleCase::b: return "b{1,2,3}";
            case TripleCase::c: return "c{1,2,3}";
            case TripleCase::d:
                return "d{" + std::to_string(xpair[0]) + "," + std::to_string(xpair[1]) + "}";
            case TripleCase::e:
                return "e{" + std::to_string(ypair[0]) + "," + std::to_string(ypair[1]) + "}";
            case TripleCase::f:
                return "f{" + std::to_string(xpair[0]) + "," + std::to_string(xpair[1]) + "|" +
                       std::to_string(ypair[0]) + "," + std::to_string(ypair[1]) + "}";
        }
        return "?";
    }
};

namespace detail {

enum class CoincPattern { distinct, pair, all };

inline CoincPattern coincidence_pattern3(const ExtReal& a, const ExtReal& b, const ExtReal& c,
                                         std::array<int, 2>& pair) {
    bool ab = a == b, ac = a == c, bc = b == c;
    if (ab && ac) return CoincPattern::all;
    if (ab) { pair = {1, 2}; return CoincPattern::pair; }
    if (ac) { pair = {1, 3}; return CoincPattern::pair; }
    if (bc) { pair = {2, 3}; return CoincPattern::pair; }
    return CoincPattern::distinct;
}

}  // namespace detail

inline TripleClass classify_triple(const TorusTriple& t) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (t[i] == t[j]) throw error(errc::degenerate_triple, "coincident torus points");

    using detail::CoincPattern;
    std::array<int, 2> xp{0, 0}, yp{0, 0};
    CoincPattern px = detail::coincidence_pattern3(t[0].x, t[1].x, t[2].x, xp);
    CoincPattern py = detail::coincidence_pattern3(t[0].y, t[1].y, t[2].y, yp);

    if (px == CoincPattern::distinct && py == CoincPattern::distinct)
        return {TripleCase::a, {0, 0}, {0, 0}};
    if (px == CoincPattern::distinct && py == CoincPattern::all)
        return {TripleCase::b, {0, 0}, {0, 0}};
    if (px == CoincPattern::all && py == CoincPattern::distinct)
        return {TripleCase::c, {0, 0}, {0, 0}};
    if (px == CoincPattern::pair && py == CoincPattern::distinct)
        return {TripleCase::d, xp, {0, 0}};
    if (px == CoincPattern::distinct && py == CoincPattern::pair)
        return {TripleCase::e, {0, 0}, yp};
    // pair/pair is the only remaining combination: anything involving an
    // all-equal coordinate plus another coincidence repeats a point.
    return {TripleCase::f, xp, yp};
}

struct NormalizedTriple {
    TorusMap g;  // swap-free map with g(t) equal to normal_form
    TorusTriple normal_form;
    TripleClass cls;
};

/// Canonical normal forms per category:
///   a) ((0,0),(inf,inf),(1,1))      b) ((0,0),(inf,0),(1,0))
///   c) ((0,0),(0,inf),(0,1))
///   d) coinciding x's to 0, the remaining x to inf, y's to (0,inf,1)
///   e) mirror image of d)
///   f) coinciding x's to 0, free x to inf; free y to 0, coinciding y's to inf
inline NormalizedTriple normalize_triple(const TorusTriple& t) {
    TripleClass cls = classify_triple(t);
    MobiusMap h1, h2;
    switch (cls.tag) {
        case TripleCase::a:
            h1 = mobius_from_triple(t[0].x, t[1].x, t[2].x);
            h2 = mobius_from_triple(t[0].y, t[1].y, t[2].y);
            break;
        case TripleCase::b:
            h1 = mobius_from_triple(t[0].x, t[1].x, t[2].x);
            h2 = mobius_point_to_zero(t[0].y);
            break;
        case TripleCase::c:
            h1 = mobius_point_to_zero(t[0].x);
            h2 = mobius_from_triple(t[0].y, t[1].y, t[2].y);
            break;
        case TripleCase::d: {
            int free_i = 6 - cls.xpair[0] - cls.xpair[1];  // indices are 1-based
            h1 = mobius_pair_to_zero_inf(t[cls.xpair[0] - 1].x, t[free_i - 1].x);
            h2 = mobius_from_triple(t[0].y, t[1].y, t[2].y);
            break;
        }
        case TripleCase::e: {
            int free_i = 6 - cls.ypair[0] - cls.ypair[1];
            h1 = mobius_from_triple(t[0].x, t[1].x, t[2].x);
            h2 = mobius_pair_to_zero_inf(t[cls.ypair[0] - 1].y, t[free_i - 1].y);
            break;
        }
        case TripleCase::f: {
            int free_x = 6 - cls.xpair[0] - cls.xpair[1];
            int free_y = 6 - cls.ypair[0] - cls.ypair[1];
            h1 = mobius_pair_to_zero_inf(t[cls.xpair[0] - 1].x, t[free_x - 1].x);
            h2 = mobius_pair_to_zero_inf(t[free_y - 1].y, t[cls.ypair[0] - 1].y);
            break;
        }
    }
    TorusMap g{h1, h2, false};
    return {g, g.apply(t), cls};
}

/// The Circle through a category-a triple; categories b)-f) lie on no Circle.
inline Circle circle_through(const TorusTriple& t) {
    NormalizedTriple n = normalize_triple(t);
    if (n.cls.tag != TripleCase::a)
        throw error(errc::wrong_triple_class, "only category-a triples lie on Circles");
    return {n.g.g1.inverse(), n.g.g2.inverse()};
}

/// Coincidence structure of one coordinate of a quadruple: the partition of
/// positions {1,2,3,4} by value, keeping only the nontrivial groups.
using CoincGroups = std::vector<std::vector<int>>;

namespace detail {

inline CoincGroups coincidence_groups4(const std::array<ExtReal, 4>& v) {
    CoincGroups groups;
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        std::vector<int> g{i + 1};
        for (int j = i + 1; j < 4; ++j)
            if (!used[j] && v[i] == v[j]) {
                used[j] = true;
                g.push_back(j + 1);
            }
        if (g.size() > 1) groups.push_back(g);
    }
    return groups;
}

inline std::string groups_label(const char* axis, const CoincGroups& groups) {
    if (groups.empty()) return std::string(axis) + "1";
    if (groups.size() == 1 && groups[0].size() == 4) return std::string(axis) + "4";
    std::string s = std::string(axis) + (groups[0].size() == 3 ? "3" : "2");
    for (const auto& g : groups) {
        s += "{";
        for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
        s += "}";
    }
    return s;
}

}  // namespace detail

/// Orbit class of a quadruple: the coincidence structure of each coordinate.
/// A quadruple is admissible exactly when both structures are trivial. A
/// coordinate with two disjoint coinciding pairs is reported with both
/// groups (e.g. "x2{1,2}{3,4}"); the published census tabulates only the
/// single-group cases.
struct QuadClass {
    CoincGroups xgroups, ygroups;
    bool admissible = false;

    // 1: all distinct, 2: one pair, 22: two pairs, 3: three equal, 4: all equal
    static int case_code(const CoincGroups& g) {
        if (g.empty()) return 1;
        if (g.size() == 2) return 22;
        return static_cast<int>(g[0].size());
    }
    int xcase() const { return case_code(xgroups); }
    int ycase() const { return case_code(ygroups); }

    std::string label() const {
        if (admissible) return "admissible";
        return detail::groups_label("x", xgroups) + "|" + detail::groups_label("y", ygroups);
    }
};

inline QuadClass classify_quad(const TorusQuad& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q[i] == q[j]) throw error(errc::degenerate_quad, "coincident torus points");
    QuadClass cls;
    cls.xgroups = detail::coincidence_groups4({q[0].x, q[1].x, q[2].x, q[3].x});
    cls.ygroups = detail::coincidence_groups4({q[0].y, q[1].y, q[2].y, q[3].y});
    cls.admissible = cls.xgroups.empty() && cls.ygroups.empty();
    return cls;
}

inline bool is_admissible(const TorusQuad& q) { return classify_quad(q).admissible; }

/// One row of the published component table of the configuration space.
struct CatalogRow {
    const char* xcase;
    const char* ycase;
    int components;
    int dimension;
};

/// The nine published rows of non-admissible orbit classes.
inline const std::vector<CatalogRow>& component_catalog_rows() {
    static const std::vector<CatalogRow> rows = {
        {"x1", "y2", 6, 1},  {"x1", "y3", 3, 1},  {"x1", "y4", 1, 1},
        {"x2", "y1", 6, 1},  {"x2", "y2", 24, 0}, {"x2", "y3", 12, 0},
        {"x3", "y1", 3, 1},  {"x3", "y2", 12, 0}, {"x4", "y1", 1, 1},
    };
    return rows;
}

struct ComponentEntry {
    std::string label;
    int dimension;
};

/// The 69 distinguished components of the configuration space: the
/// two-dimensional admissible family plus the 68 published non-admissible
/// classes, flattened row by row.
inline std::vector<ComponentEntry> component_catalog() {
    std::vector<ComponentEntry> entries;
    entries.push_back({"admissible", 2});
    for (const auto& row : component_catalog_rows())
        for (int k = 0; k < row.components; ++k)
            entries.push_back({std::string(row.xcase) + "|" + row.ycase, row.dimension});
    return entries;
}

}  // namespace torusmob
