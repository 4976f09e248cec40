// torus-moduli: exact classification, moduli, equivalence and boundary-model
// computations for quadruples of points on the torus, JSON in / JSON out.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "torusmob/jsonio.hpp"
#include "torusmob/plot.hpp"
#include "torusmob/sampling.hpp"

namespace tmb = torusmob;
using tmb::Json;

namespace {

// Exit-code families: 2 parse, 3 degenerate, 4 admissibility, 5 region,
// 6 I/O, 7 boundary-model operations.
int exit_code_for(tmb::errc c) {
    switch (c) {
        case tmb::errc::parse_error: return 2;
        case tmb::errc::singular_map:
        case tmb::errc::undefined_cross_ratio:
        case tmb::errc::degenerate_triple:
        case tmb::errc::degenerate_quad:
        case tmb::errc::wrong_triple_class: return 3;
        case tmb::errc::not_admissible:
        case tmb::errc::negative_modulus:
        case tmb::errc::mixed_regime: return 4;
        case tmb::errc::zero_coordinate:
        case tmb::errc::excluded_value:
        case tmb::errc::not_in_p: return 5;
        case tmb::errc::indeterminate: return 5;
        case tmb::errc::io_error: return 6;
        case tmb::errc::zero_vector:
        case tmb::errc::not_rank_one:
        case tmb::errc::not_unimodular:
        case tmb::errc::division_by_zero:
        case tmb::errc::nonpositive_dilation: return 7;
    }
    return 1;
}

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw tmb::error(tmb::errc::io_error, "cannot open input file " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw tmb::error(tmb::errc::parse_error, "input is not valid JSON");
    return doc;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json echo_points(const std::vector<tmb::TorusPoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(tmb::point_to_json(p));
    return a;
}

int cmd_classify(const std::string& input) {
    Json doc = read_input(input);
    auto pts = tmb::points_from_json(doc);
    Json report{{"command", "classify"}};
    report["input"] = Json{{"points", echo_points(pts)}};
    if (pts.size() == 3) {
        tmb::TripleClass cls = tmb::classify_triple({pts[0], pts[1], pts[2]});
        report["kind"] = "triple";
        report["label"] = "triple:" + cls.label();
    } else if (pts.size() == 4) {
        tmb::TorusQuad q{pts[0], pts[1], pts[2], pts[3]};
        tmb::QuadClass cls = tmb::classify_quad(q);
        report["kind"] = "quad";
        report["label"] = cls.label();
        report["admissible"] = cls.admissible;
        // non-admissible orbits with one non-degenerate coordinate still
        // carry that coordinate's circle cross-ratio as their parameter
        if (cls.xgroups.empty())
            report["crossRatioX"] = tmb::to_string(tmb::cross_ratio(tmb::x_part(q)).value());
        if (cls.ygroups.empty())
            report["crossRatioY"] = tmb::to_string(tmb::cross_ratio(tmb::y_part(q)).value());
    } else {
        throw tmb::error(tmb::errc::parse_error,
                        "expected 3 or 4 points, got " + std::to_string(pts.size()));
    }
    emit(report);
    return 0;
}

int cmd_moduli(const std::string& input) {
    Json doc = read_input(input);
    tmb::TorusQuad q = tmb::quad_from_json(doc);
    tmb::ModuliPoint m = tmb::moduli(q);  // throws NOT_ADMISSIBLE otherwise
    Json report{{"command", "moduli"}};
    report["input"] = Json{{"points", tmb::points_to_json(q)}};
    report["label"] = "admissible";
    report.update(tmb::moduli_to_json(m, tmb::on_circle(q)));
    emit(report);
    return 0;
}

int cmd_equiv(const std::string& input, bool allow_swap) {
    Json doc = read_input(input);
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
        throw tmb::error(tmb::errc::parse_error,
                        "equiv expects a document {\"a\": {\"points\": ...}, \"b\": ...}");
    tmb::TorusQuad qa = tmb::quad_from_json(doc["a"]);
    tmb::TorusQuad qb = tmb::quad_from_json(doc["b"]);
    auto witness = tmb::equivalent(qa, qb, allow_swap);
    Json report{{"command", "equiv"}, {"allowSwap", allow_swap}};
    report["equivalent"] = witness.has_value();
    if (witness) report["witness"] = tmb::torus_map_to_json(*witness);
    emit(report);
    return 0;
}

int cmd_reconstruct(const std::string& input, std::string mode) {
    Json doc = read_input(input);
    if (!doc.is_object() || !doc.contains("u") || !doc.contains("v"))
        throw tmb::error(tmb::errc::parse_error, "reconstruct expects {\"u\": ..., \"v\": ...}");
    tmb::Rational u = tmb::rational_from_json(doc["u"], "u");
    tmb::Rational v = tmb::rational_from_json(doc["v"], "v");
    if (mode.empty()) mode = doc.value("mode", "exact");
    if (mode != "exact" && mode != "numeric")
        throw tmb::error(tmb::errc::parse_error, "mode must be exact or numeric");

    tmb::ReconstructResult res = tmb::reconstruct(u, v);
    Json report{{"command", "reconstruct"},
                {"u", tmb::to_string(u)},
                {"v", tmb::to_string(v)},
                {"delta", tmb::to_string(res.delta)},
                {"sqrtDeltaRational", res.rational_sqrt},
                {"mode", mode}};
    Json pts = Json::array();
    for (const auto& p : res.points) {
        if (mode == "exact")
            pts.push_back(Json{{"x", tmb::quadext_coord_to_json(p.x)},
                               {"y", tmb::quadext_coord_to_json(p.y)}});
        else
            pts.push_back(Json{{"x", tmb::quadext_coord_to_numeric_json(p.x)},
                               {"y", tmb::quadext_coord_to_numeric_json(p.y)}});
    }
    report["points"] = pts;
    if (mode == "numeric") {
        // residual of the moduli recomputed from the rounded third point
        double x = res.points[2].x.value().to_double();
        double y = res.points[2].y.value().to_double();
        double ru = x * y, rv = (1 - x) * (1 - y);
        double residual =
            std::fabs(ru - tmb::to_double(u)) + std::fabs(rv - tmb::to_double(v));
        report["residual"] = tmb::format_double(residual);
    }
    emit(report);
    return 0;
}

Json sample_record(std::uint64_t seed, std::uint64_t index, const std::string& filter) {
    tmb::DetRng rng = tmb::DetRng::for_record(seed, index);
    tmb::TorusQuad q;
    if (filter == "admissible") q = rng.admissible_quad();
    else if (filter == "circle") q = rng.circle_quad();
    else if (filter == "positive-moduli") q = rng.positive_moduli_quad();
    else if (filter.empty() || filter == "none") q = rng.quad();
    else throw tmb::error(tmb::errc::parse_error, "unknown filter " + filter);

    tmb::QuadClass cls = tmb::classify_quad(q);
    Json rec{{"index", index}, {"points", tmb::points_to_json(q)}, {"label", cls.label()}};
    if (cls.admissible) rec.update(tmb::moduli_to_json(tmb::moduli(q), tmb::on_circle(q)));
    return rec;
}

int cmd_sample(std::uint64_t n, std::uint64_t seed, const std::string& filter) {
    if (n < 1) throw tmb::error(tmb::errc::parse_error, "sample needs --n >= 1");
    for (std::uint64_t i = 0; i < n; ++i) std::cout << sample_record(seed, i, filter).dump() << "\n";
    return 0;
}

int cmd_plot(const std::string& set_name, const std::string& format, const std::string& out,
             const tmb::GridSpec& grid) {
    tmb::PlotSet set = set_name == "Q" ? tmb::PlotSet::Q : tmb::PlotSet::P;
    std::ostringstream body;
    if (format == "csv") tmb::write_plot_csv(body, set, grid);
    else tmb::write_plot_svg(body, set, grid);
    if (out.empty() || out == "-") {
        std::cout << body.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw tmb::error(tmb::errc::io_error, "cannot open output file " + out);
        f << body.str();
        if (!f) throw tmb::error(tmb::errc::io_error, "write failed for " + out);
    }
    return 0;
}

tmb::ProjPoint proj_from_field(const Json& doc, const std::string& name) {
    if (!doc.contains(name))
        throw tmb::error(tmb::errc::parse_error, "missing field \"" + name + "\"");
    const Json& j = doc[name];
    if (j.is_string()) return tmb::ProjPoint::from_ext(tmb::parse_ext_real(j.get<std::string>()));
    if (j.is_array() && j.size() == 2)
        return {tmb::rational_from_json(j[0], name), tmb::rational_from_json(j[1], name)};
    throw tmb::error(tmb::errc::parse_error,
                    "field \"" + name + "\" must be a coordinate or a homogeneous pair");
}

int cmd_ads3(const std::string& op, const std::string& input) {
    Json doc = read_input(input);
    Json report{{"command", "ads3:" + op}};
    if (op == "segre") {
        tmb::ProjPoint x = proj_from_field(doc, "x");
        tmb::ProjPoint y = proj_from_field(doc, "y");
        tmb::Vec4 w = tmb::segre(x, y);
        report["w"] = tmb::vec4_to_json(w);
        report["class"] = tmb::to_string(tmb::vector_class(w));
    } else if (op == "form") {
        tmb::Vec4 x = tmb::vec4_from_json(doc.contains("x") ? doc["x"] : Json(), "x");
        tmb::Vec4 y = tmb::vec4_from_json(doc.contains("y") ? doc["y"] : Json(), "y");
        report["value"] = tmb::to_string(tmb::herm_form(x, y));
    } else if (op == "iso") {
        tmb::Mat2 a1 = tmb::mat2_from_json(doc.contains("a1") ? doc["a1"] : Json(), "a1");
        tmb::Mat2 a2 = tmb::mat2_from_json(doc.contains("a2") ? doc["a2"] : Json(), "a2");
        tmb::Mat4 a = tmb::iso_sl2sq_to_so22(a1, a2);
        report["matrix"] = tmb::mat4_to_json(a);
        report["jPreserved"] = tmb::preserves_j(a);
    } else if (op == "tmat") {
        tmb::Rational x = tmb::rational_from_json(doc.contains("x") ? doc["x"] : Json(), "x");
        tmb::Rational y = tmb::rational_from_json(doc.contains("y") ? doc["y"] : Json(), "y");
        report["matrix"] = tmb::mat4_to_json(tmb::n_T(x, y));
    } else if (op == "xr") {
        auto pts = tmb::points_from_json(doc);
        if (pts.size() != 4) throw tmb::error(tmb::errc::parse_error, "xr expects 4 points");
        std::array<tmb::NPoint, 4> np;
        for (int i = 0; i < 4; ++i) {
            if (pts[i].x.is_inf() || pts[i].y.is_inf())
                throw tmb::error(tmb::errc::parse_error,
                                "point " + std::to_string(i + 1) + ": xr needs finite points");
            np[i] = {pts[i].x.value(), pts[i].y.value()};
        }
        report["value"] = tmb::to_string(tmb::cross_ratio_via_a(np));
    } else {
        throw tmb::error(tmb::errc::parse_error, "unknown ads3 operation " + op);
    }
    emit(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact configuration-space computations for four points on the torus"};
    app.require_subcommand(1);

    std::string input;
    bool allow_swap = false;
    std::string mode;
    std::uint64_t n = 1, seed = 0;
    std::string filter, set_name = "P", format = "svg", out;
    std::string umin = "-3", umax = "3", vmin = "-3", vmax = "3", step = "1/50";
    std::string ads3_op;

    auto* classify = app.add_subcommand("classify", "classify a triple or quadruple");
    classify->add_option("--input", input, "input JSON file (or - for stdin)");

    auto* moduli_cmd = app.add_subcommand("moduli", "moduli of an admissible quadruple");
    moduli_cmd->add_option("--input", input, "input JSON file (or - for stdin)");

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two quadruples");
    equiv->add_option("--input", input, "input JSON file with fields a and b");
    equiv->add_flag("--allow-swap", allow_swap, "also try the coordinate swap");

    auto* reconstruct = app.add_subcommand("reconstruct", "quadruple with prescribed moduli");
    reconstruct->add_option("--input", input, "input JSON file with fields u and v");
    reconstruct->add_option("--mode", mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));

    auto* sample = app.add_subcommand("sample", "deterministic random quadruple reports");
    sample->add_option("--n", n, "number of records");
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--filter", filter, "admissible | circle | positive-moduli | none")
        ->check(CLI::IsMember({"admissible", "circle", "positive-moduli", "none", ""}));

    auto* plot = app.add_subcommand("plot", "region pictures and grids");
    plot->add_option("--set", set_name, "P or Q")->check(CLI::IsMember({"P", "Q"}));
    plot->add_option("--format", format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));
    plot->add_option("--out", out, "output path (or - for stdout)");
    plot->add_option("--xmin", umin, "grid minimum of the first coordinate");
    plot->add_option("--xmax", umax, "grid maximum of the first coordinate");
    plot->add_option("--ymin", vmin, "grid minimum of the second coordinate");
    plot->add_option("--ymax", vmax, "grid maximum of the second coordinate");
    plot->add_option("--step", step, "grid step");

    auto* ads3 = app.add_subcommand("ads3", "boundary-model operations");
    ads3->add_option("op", ads3_op, "segre | form | iso | tmat | xr")
        ->required()
        ->check(CLI::IsMember({"segre", "form", "iso", "tmat", "xr"}));
    ads3->add_option("--input", input, "input JSON file (or - for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(input);
        if (app.got_subcommand(moduli_cmd)) return cmd_moduli(input);
        if (app.got_subcommand(equiv)) return cmd_equiv(input, allow_swap);
        if (app.got_subcommand(reconstruct)) return cmd_reconstruct(input, mode);
        if (app.got_subcommand(sample)) return cmd_sample(n, seed, filter);
        if (app.got_subcommand(plot)) {
            tmb::GridSpec grid;
            grid.min_x = tmb::parse_rational(umin);
            grid.max_x = tmb::parse_rational(umax);
            grid.min_y = tmb::parse_rational(vmin);
            grid.max_y = tmb::parse_rational(vmax);
            grid.step = tmb::parse_rational(step);
            if (grid.step <= 0 || grid.min_x > grid.max_x || grid.min_y > grid.max_y)
                throw tmb::error(tmb::errc::parse_error, "bad grid bounds");
            return cmd_plot(set_name, format, out, grid);
        }
        if (app.got_subcommand(ads3)) return cmd_ads3(ads3_op, input);
    } catch (const tmb::error& e) {
        Json err{{"error", tmb::errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "INTERNAL"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 1;
}
