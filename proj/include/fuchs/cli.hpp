#pragma once

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curves.hpp"
#include "embed.hpp"
#include "error.hpp"
#include "fode.hpp"
#include "hyperbolic.hpp"
#include "report.hpp"
#include "uniformize.hpp"

namespace fuchs::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

/// "RE" or "RE,IM".
inline Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_fortran_double(text), 0.0};
    return {parse_fortran_double(text.substr(0, comma)), parse_fortran_double(text.substr(comma + 1))};
}

inline std::pair<int, int> parse_int_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected M,N but got '" + text + "'");
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const int x = std::stoi(a, &u1), y = std::stoi(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing");
        return {x, y};
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected M,N but got '" + text + "'");
    }
}

inline int parse_sign(const std::string& s) {
    if (s == "minus") return -1;
    if (s == "plus") return 1;
    throw Error(ErrorCode::ParseError, "sign must be plus or minus");
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

/// Checks behind `verify`. Degenerate generators (projective identities and
/// duplicates) are reported separately and excluded from the class check.
inline std::vector<Check> verification_checks(const UniformizationResult& res) {
    std::vector<Check> out;
    const VerificationReport& v = res.verification;

    double worst_inv = 0.0;
    for (double r : v.involution_residuals) worst_inv = std::max(worst_inv, r);
    out.push_back({"involutions", v.all_sides_involutive, "max residual " + fmt(worst_inv)});

    bool elliptic = true;
    double worst_tr = 0.0;
    for (std::size_t i = 0; i < res.side_transforms.size(); ++i) {
        worst_tr = std::max(worst_tr, std::abs(normalize(res.side_transforms[i]).trace()));
        if (v.side_classes[i] != TransformClass::Elliptic) elliptic = false;
    }
    out.push_back({"sides elliptic", elliptic && worst_tr < class_tolerance, "max |tr| " + fmt(worst_tr)});

    const std::vector<int> sides = res.sides();
    bool hyperbolic = true;
    double min_tr2 = INFINITY;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (std::find(v.identity_indices.begin(), v.identity_indices.end(), sides[i]) != v.identity_indices.end())
            continue;
        min_tr2 = std::min(min_tr2, v.trace_squared[i]);
        if (v.classes[i] != TransformClass::Hyperbolic || !(v.trace_squared[i] > 4.0 + 1e-6)) hyperbolic = false;
    }
    out.push_back({"generators hyperbolic", hyperbolic, "min tr^2 " + fmt(min_tr2)});

    const double rho = fixed_point_radius(res.params);
    double spread = 0.0, spacing = 0.0;
    const double step = 2.0 * pi * res.params.alpha();
    for (std::size_t r = 0; r < res.fixed_points.size(); ++r) {
        spread = std::max(spread, std::abs(std::abs(res.fixed_points[r]) - rho));
        if (r + 1 < res.fixed_points.size()) {
            const double d = std::arg(res.fixed_points[r + 1] / res.fixed_points[r]);
            spacing = std::max(spacing, std::abs(std::remainder(d - step, 2.0 * pi)));
        }
    }
    out.push_back({"fixed-point radius", spread < 1e-9, "spread " + fmt(spread)});
    out.push_back({"fixed-point spacing", spacing < 1e-9, "max deviation " + fmt(spacing)});

    bool topo_ok = false;
    std::string topo_detail;
    try {
        const SurfaceTopology t = tessellation_topology(res.tessellation);
        topo_ok = t.genus == res.curve.genus && t.chi == 2 - 2 * res.curve.genus;
        topo_detail = "chi=" + std::to_string(t.chi) + " g=" + std::to_string(t.genus);
    } catch (const Error& e) {
        topo_detail = e.what();
    }
    out.push_back({"tessellation topology", topo_ok, topo_detail});

    const double expected_area = 2.0 * pi * (2.0 * res.curve.genus - 2.0);
    const double area_err = std::abs(res.area - expected_area);
    out.push_back({"area identity", area_err < 1e-9, "|area - 2pi(2g-2)| " + fmt(area_err)});

    bool finite = true;
    for (const auto& [name, r] : v.relation_residuals)
        if (!std::isfinite(r)) finite = false;
    out.push_back({"relation residuals finite", finite, std::to_string(v.relation_residuals.size()) + " words"});
    return out;
}

} // namespace detail

/// Runs one invocation. argv excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuchsian uniformization of y^2 = z^n -/+ 1", "fuchs"};
    app.require_subcommand(1);

    int degree = 0;
    std::string sign = "minus";
    int base = 1;
    bool normalized = false;
    std::string format = "json";
    int precision = default_precision;
    double tolerance = duplicate_tolerance;
    std::string range_text;
    auto* uni = app.add_subcommand("uniformize", "side transformations and generators for one curve");
    uni->add_option("--degree", degree, "polynomial degree n")->required();
    uni->add_option("--sign", sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    uni->add_option("--base", base, "base side index K of the products S_K S_r");
    uni->add_flag("--normalize", normalized, "divide generators by a^2 - 1");
    uni->add_option("--format", format, "json, table or svg")->check(CLI::IsMember({"json", "table", "svg"}));
    uni->add_option("--precision", precision, "decimal places")->check(CLI::Range(0, 15));
    uni->add_option("--tolerance", tolerance, "degeneracy tolerance")->check(CLI::PositiveNumber);
    uni->add_option("--genus-range", range_text, "also report the K_{M,N} genus range");

    int gm = 0, gn = 0;
    auto* gr = app.add_subcommand("genus-range", "genus range of 2-cell embeddings of K_{M,N}");
    gr->add_option("M", gm)->required();
    gr->add_option("N", gn)->required();

    int tess_degree = 0;
    std::string pq_text;
    auto* tess = app.add_subcommand("tessellation", "tessellation data for a curve or a {p,q} pair");
    auto* tess_deg_opt = tess->add_option("--degree", tess_degree);
    auto* tess_pq_opt = tess->add_option("--pq", pq_text, "P,Q");
    tess_deg_opt->excludes(tess_pq_opt);
    tess->require_option(1);

    auto* ode = app.add_subcommand("ode", "Fuchsian differential equations");
    ode->require_subcommand(1);
    int ode_degree = 0;
    std::string k1_text = "0", k2_text = "0";
    auto* build = ode->add_subcommand("build", "equation attached to the curve of degree N");
    build->add_option("--degree", ode_degree)->required();
    build->add_option("--k1", k1_text, "RE,IM");
    build->add_option("--k2", k2_text, "RE,IM");
    std::string named;
    std::vector<std::string> params_text;
    auto* classify_cmd = ode->add_subcommand("classify", "singular points of a classical equation");
    classify_cmd->add_option("--named", named)->required();
    classify_cmd->add_option("--params", params_text, "RE or RE,IM per parameter");
    std::vector<std::string> poly_text;
    auto* whit = ode->add_subcommand("whittaker", "Whittaker equation of y^2 = f(z)");
    whit->add_option("--coeffs", poly_text, "coefficients of f, lowest degree first")->required();
    for (auto* sub : {build, classify_cmd, whit}) sub->add_option("--precision", precision);

    int verify_degree = 0;
    auto* ver = app.add_subcommand("verify", "run the verification checks for one degree");
    ver->add_option("--degree", verify_degree)->required();
    ver->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*uni) {
            const CurveSpec c = curve_from_degree(degree, detail::parse_sign(sign));
            UniformizationResult res = uniformize(c, base);
            res.verification = verify_generators(res, tolerance);
            std::optional<GenusRange> range;
            if (!range_text.empty()) {
                const auto [m, n] = detail::parse_int_pair(range_text);
                range = genus_range(m, n);
            }
            const ReportDocument doc = make_report(res, normalized, precision, range);
            if (format == "json")
                out << dump_canonical(to_json(doc));
            else if (format == "table")
                out << format_table(doc);
            else
                out << format_svg(doc);
            return exit_ok;
        }
        if (*gr) {
            const GenusRange r = genus_range(gm, gn);
            out << "g_min=" << r.g_min << " g_max=" << r.g_max << "\n";
            return exit_ok;
        }
        if (*tess) {
            Tessellation t;
            if (*tess_deg_opt) {
                t = tessellation_for_curve(curve_from_degree(tess_degree));
            } else {
                const auto [p, q] = detail::parse_int_pair(pq_text);
                t = {p, q};
            }
            json j{{"p", t.p}, {"q", t.q}, {"valid", tessellation_valid(t)}};
            if (t.p >= 3 && t.q >= 3 && euler_product(t) >= 4) {
                const AreaResult a = regular_polygon_area(t);
                j["area"] = round_to(a.value, precision);
                j["euclidean_limit"] = a.euclidean_limit;
            }
            try {
                const SurfaceTopology s = tessellation_topology(t);
                j["topology"] = {{"V", s.vertices}, {"E", s.edges}, {"F", s.faces}, {"chi", s.chi},
                                 {"genus", s.genus}};
            } catch (const Error& e) {
                j["topology"] = nullptr;
                j["topology_error"] = std::string(to_string(e.code()));
            }
            out << dump_canonical(j);
            return exit_ok;
        }
        if (*build) {
            const CurveSpec c = curve_from_degree(ode_degree);
            out << dump_canonical(ode_json(
                hyperelliptic_equation(c, detail::parse_complex(k1_text), detail::parse_complex(k2_text)), precision));
            return exit_ok;
        }
        if (*classify_cmd) {
            std::vector<Complex> ps;
            for (const std::string& t : params_text) ps.push_back(detail::parse_complex(t));
            out << dump_canonical(ode_json(named_equation(parse_named_equation(named), ps), precision));
            return exit_ok;
        }
        if (*whit) {
            std::vector<Complex> cs;
            for (const std::string& t : poly_text) cs.push_back(detail::parse_complex(t));
            out << dump_canonical(ode_json(whittaker_equation(Poly(cs)), precision));
            return exit_ok;
        }
        if (*ver) {
            const CurveSpec c = curve_from_degree(verify_degree);
            UniformizationResult res = uniformize(c);
            res.verification = verify_generators(res, tolerance);
            bool all = true;
            for (const detail::Check& ch : detail::verification_checks(res)) {
                out << (ch.pass ? "PASS " : "FAIL ") << ch.name << " (" << ch.detail << ")\n";
                all = all && ch.pass;
            }
            const VerificationReport& v = res.verification;
            if (!v.identity_indices.empty() || !v.duplicate_pairs.empty()) {
                out << "WARNING degenerate generators\n";
                for (int r : v.identity_indices) out << "  identity: S1S" << r << "\n";
                for (const auto& [x, y] : v.duplicate_pairs)
                    out << "  duplicate: S1S" << x << " = S1S" << y << "\n";
            }
            for (const auto& [name, r] : v.relation_residuals) out << "residual " << name << " " << detail::fmt(r) << "\n";
            return all ? exit_ok : exit_verify_failed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace fuchs::cli
