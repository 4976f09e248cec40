#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "torusmob/moduli.hpp"

namespace torusmob {

enum class PlotSet { P, Q };

struct GridSpec {
    Rational min_x = -3, max_x = 3, min_y = -3, max_y = 3;
    Rational step = Rational(1) / 50;
};

struct CellLabel {
    std::string label;  // component tag, OUTSIDE, or EXCLUDED
    bool boundary = false;
};

/// Label of one grid cell; EXCLUDED marks coordinates where the region map
/// is undefined (zero moduli for P, cross-ratio values 0 and 1 for Q).
inline CellLabel plot_cell_label(PlotSet set, const Rational& a, const Rational& b) {
    if (set == PlotSet::P) {
        if (a == 0 || b == 0) return {"EXCLUDED", false};
        PRegion r = p_region(a, b);
        return {to_string(r.component), r.boundary};
    }
    if (a == 0 || a == 1 || b == 0 || b == 1) return {"EXCLUDED", false};
    QRegion r = q_region(a, b);
    return {to_string(r.component), r.boundary};
}

/// CSV rows "u,v,label,boundary" over the grid lattice, row-major from the
/// minimum corner; all coordinates exact.
inline void write_plot_csv(std::ostream& os, PlotSet set, const GridSpec& grid) {
    os << (set == PlotSet::P ? "u,v,label,boundary\n" : "a,b,label,boundary\n");
    for (Rational b = grid.min_y; b <= grid.max_y; b += grid.step)
        for (Rational a = grid.min_x; a <= grid.max_x; a += grid.step) {
            CellLabel c = plot_cell_label(set, a, b);
            os << to_string(a) << ',' << to_string(b) << ',' << c.label << ','
               << (c.boundary ? 1 : 0) << '\n';
        }
}

namespace detail {

struct SvgFrame {
    double min_x, max_x, min_y, max_y;
    static constexpr double size = 640.0;
    static constexpr double margin = 50.0;

    double px(double x) const {
        return margin + (x - min_x) / (max_x - min_x) * (size - 2 * margin);
    }
    double py(double y) const {
        return size - margin - (y - min_y) / (max_y - min_y) * (size - 2 * margin);
    }
};

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline void polygon(std::ostream& os, const SvgFrame& f,
                    const std::vector<std::pair<double, double>>& pts, const char* fill) {
    os << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.45\" stroke=\"none\" points=\"";
    for (const auto& [x, y] : pts) os << fmt(f.px(x)) << ',' << fmt(f.py(y)) << ' ';
    os << "\"/>\n";
}

inline void text(std::ostream& os, const SvgFrame& f, double x, double y, const std::string& s) {
    os << "<text x=\"" << fmt(f.px(x)) << "\" y=\"" << fmt(f.py(y))
       << "\" font-family=\"monospace\" font-size=\"15\">" << s << "</text>\n";
}

}  // namespace detail

/// Region picture: axes, the shaded components with labels, and for the
/// moduli set the boundary parabola, sampled on the rational parametrisation
/// (t^2, (1-t)^2) at 241 parameter values.
inline void write_plot_svg(std::ostream& os, PlotSet set, const GridSpec& grid) {
    using detail::SvgFrame;
    SvgFrame f{to_double(grid.min_x), to_double(grid.max_x), to_double(grid.min_y),
               to_double(grid.max_y)};
    const double X0 = f.min_x, X1 = f.max_x, Y0 = f.min_y, Y1 = f.max_y;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"0 0 640 640\">\n";
    os << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

    if (set == PlotSet::P) {
        // open quadrant components
        detail::polygon(os, f, {{X0, 0}, {0, 0}, {0, Y1}, {X0, Y1}}, "#7fa7d8");  // P1_0
        detail::polygon(os, f, {{X0, Y0}, {0, Y0}, {0, 0}, {X0, 0}}, "#8fd88f");  // P2_0
        detail::polygon(os, f, {{0, Y0}, {X1, Y0}, {X1, 0}, {0, 0}}, "#d8b36f");  // P3_0
        // components with parabola boundary, drawn against the arc
        std::vector<std::pair<double, double>> inner{{0, 0}};
        for (int k = 0; k <= 120; ++k) {
            double t = k / 120.0;
            inner.push_back({t * t, (1 - t) * (1 - t)});
        }
        detail::polygon(os, f, inner, "#d87f7f");  // P1_1
        std::vector<std::pair<double, double>> right{{X1, 0}, {1, 0}};
        for (int k = 1; k <= 120; ++k) {
            double t = 1 + k / 120.0 * 1.2;
            right.push_back({t * t, (1 - t) * (1 - t)});
        }
        right.push_back({X1, (1 - 2.2) * (1 - 2.2)});
        detail::polygon(os, f, right, "#b37fd8");  // P2_1
        std::vector<std::pair<double, double>> top{{0, Y1}, {0, 1}};
        for (int k = 1; k <= 120; ++k) {
            double t = -k / 120.0 * 1.2;
            top.push_back({t * t, (1 - t) * (1 - t)});
        }
        top.push_back({(2.2 - 1) * (2.2 - 1), Y1});
        detail::polygon(os, f, top, "#7fd8c8");  // P3_1

        // Delta = 0 parabola, 241 samples of the rational parametrisation
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (int k = 0; k <= 240; ++k) {
            Rational t = Rational(-12) / 5 + Rational(k) * Rational(1) / 50;
            Rational u = t * t, v = (1 - t) * (1 - t);
            os << detail::fmt(f.px(to_double(u))) << ',' << detail::fmt(f.py(to_double(v))) << ' ';
        }
        os << "\"/>\n";

        detail::text(os, f, X0 * 0.7, Y1 * 0.6, "P1_0");
        detail::text(os, f, X0 * 0.7, Y0 * 0.6, "P2_0");
        detail::text(os, f, X1 * 0.55, Y0 * 0.6, "P3_0");
        detail::text(os, f, 0.04, 0.07, "P1_1");
        detail::text(os, f, X1 * 0.75, 0.1, "P2_1");
        detail::text(os, f, 0.05, Y1 * 0.8, "P3_1");
    } else {
        auto clip = [](double v, double lo, double hi) { return v < lo ? lo : v > hi ? hi : v; };
        double one = clip(1, Y0, Y1), zero = clip(0, Y0, Y1);
        // open mixed-interval components
        detail::polygon(os, f, {{X0, zero}, {0, zero}, {0, one}, {X0, one}}, "#7fa7d8");  // Q1_0
        detail::polygon(os, f, {{X0, one}, {0, one}, {0, Y1}, {X0, Y1}}, "#8fd88f");      // Q2_0
        detail::polygon(os, f, {{zero, one}, {one, one}, {one, Y1}, {zero, Y1}}, "#d8b36f");  // Q3_0
        // folded diagonal components: a <= b above the diagonal
        detail::polygon(os, f, {{X0, Y0}, {0, Y0}, {0, 0}, {X0, X0}}, "#d87f7f");  // Q1_1
        detail::polygon(os, f, {{0, 0}, {1, 1}, {0, 1}}, "#b37fd8");               // Q2_1
        detail::polygon(os, f, {{1, 1}, {X1, X1}, {X1, Y1}, {1, Y1}}, "#7fd8c8");  // Q3_1
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\" points=\""
           << detail::fmt(f.px(std::max(X0, Y0))) << ',' << detail::fmt(f.py(std::max(X0, Y0)))
           << ' ' << detail::fmt(f.px(std::min(X1, Y1))) << ','
           << detail::fmt(f.py(std::min(X1, Y1))) << "\"/>\n";

        detail::text(os, f, X0 * 0.7, 0.5, "Q1_0");
        detail::text(os, f, X0 * 0.7, Y1 * 0.7, "Q2_0");
        detail::text(os, f, 0.3, Y1 * 0.7, "Q3_0");
        detail::text(os, f, X0 * 0.5, Y0 * 0.3, "Q1_1");
        detail::text(os, f, 0.15, 0.75, "Q2_1");
        detail::text(os, f, X1 * 0.55, X1 * 0.8, "Q3_1");
    }

    // axes
    os << "<line x1=\"" << detail::fmt(f.px(X0)) << "\" y1=\"" << detail::fmt(f.py(0))
       << "\" x2=\"" << detail::fmt(f.px(X1)) << "\" y2=\"" << detail::fmt(f.py(0))
       << "\" stroke=\"#444\"/>\n";
    os << "<line x1=\"" << detail::fmt(f.px(0)) << "\" y1=\"" << detail::fmt(f.py(Y0))
       << "\" x2=\"" << detail::fmt(f.px(0)) << "\" y2=\"" << detail::fmt(f.py(Y1))
       << "\" stroke=\"#444\"/>\n";
    os << "</svg>\n";
}

}  // namespace torusmob
