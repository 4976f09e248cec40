#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "torusmob/ads3.hpp"
#include "torusmob/mobstruct.hpp"
#include "torusmob/moduli.hpp"
#include "torusmob/torus.hpp"

namespace torusmob {

using Json = nlohmann::ordered_json;

inline Json point_to_json(const TorusPoint& p) {
    return Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}};
}

inline Json points_to_json(const TorusQuad& q) {
    Json a = Json::array();
    for (const auto& p : q) a.push_back(point_to_json(p));
    return a;
}

inline TorusPoint point_from_json(const Json& j, int index) {
    std::string where = "point " + std::to_string(index + 1);
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw error(errc::parse_error, where + ": expected {\"x\": ..., \"y\": ...}");
    if (!j["x"].is_string() || !j["y"].is_string())
        throw error(errc::parse_error, where + ": coordinates must be quoted rationals or \"inf\"");
    try {
        return {parse_ext_real(j["x"].get<std::string>()),
                parse_ext_real(j["y"].get<std::string>())};
    } catch (const error& e) {
        throw error(errc::parse_error, where + ": " + e.what());
    }
}

inline std::vector<TorusPoint> points_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw error(errc::parse_error, "input document must carry a \"points\" array");
    std::vector<TorusPoint> pts;
    int i = 0;
    for (const auto& j : doc["points"]) pts.push_back(point_from_json(j, i++));
    return pts;
}

inline TorusQuad quad_from_json(const Json& doc) {
    auto pts = points_from_json(doc);
    if (pts.size() != 4)
        throw error(errc::parse_error, "expected exactly 4 points, got " +
                                           std::to_string(pts.size()));
    return {pts[0], pts[1], pts[2], pts[3]};
}

inline Json mobius_to_json(const MobiusMap& m) {
    return Json::array({Json::array({to_string(m.a()), to_string(m.b())}),
                        Json::array({to_string(m.c()), to_string(m.d())})});
}

inline Json torus_map_to_json(const TorusMap& g) {
    return Json{{"g1", mobius_to_json(g.g1)}, {"g2", mobius_to_json(g.g2)}, {"swap", g.swap}};
}

inline Json moduli_to_json(const ModuliPoint& m, bool circle) {
    Json j{{"u", to_string(m.u)},
           {"v", to_string(m.v)},
           {"delta", to_string(m.delta)},
           {"region", to_string(m.region.component)},
           {"boundary", m.region.boundary},
           {"onCircle", circle}};
    if (m.u > 0 && m.v > 0)
        j["regime"] = to_string(ptolemy_regime(PositivePair{m.u, m.v}));
    return j;
}

inline Json vec4_to_json(const Vec4& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

inline Json mat4_to_json(const Mat4& m) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_string(m.m[i][j]));
        rows.push_back(row);
    }
    return rows;
}

inline Rational rational_from_json(const Json& j, const std::string& name) {
    if (!j.is_string())
        throw error(errc::parse_error, "field \"" + name + "\" must be a quoted rational");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const error& e) {
        throw error(errc::parse_error, "field \"" + name + "\": " + e.what());
    }
}

inline Vec4 vec4_from_json(const Json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 4)
        throw error(errc::parse_error, "field \"" + name + "\" must be an array of 4 rationals");
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = rational_from_json(j[i], name);
    return v;
}

inline Mat2 mat2_from_json(const Json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw error(errc::parse_error, "field \"" + name + "\" must be a 2x2 array of rationals");
    return {rational_from_json(j[0][0], name), rational_from_json(j[0][1], name),
            rational_from_json(j[1][0], name), rational_from_json(j[1][1], name)};
}

/// Coordinate of a reconstructed point in exact mode: plain rational text,
/// or the pair {p, q} standing for p + q*sqrt(Delta).
inline Json quadext_coord_to_json(const Extended<QuadExt>& c) {
    if (c.is_inf()) return "inf";
    const QuadExt& v = c.value();
    if (v.is_rational()) return to_string(v.rat());
    return Json{{"p", to_string(v.rat())}, {"q", to_string(v.coeff())}};
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline Json quadext_coord_to_numeric_json(const Extended<QuadExt>& c) {
    if (c.is_inf()) return "inf";
    return format_double(c.value().to_double());
}

}  // namespace torusmob
