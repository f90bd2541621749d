#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "embed.hpp"
#include "error.hpp"
#include "fode.hpp"
#include "hyperbolic.hpp"
#include "moebius.hpp"
#include "uniformize.hpp"

namespace fuchs {

using json = nlohmann::json;

inline constexpr const char* schema_version = "1";
inline constexpr int default_precision = 7;

/// Rounds to `decimals` digits after the point; never returns -0.
inline double round_to(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double r = std::round(x * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

/// Parses a printed real, accepting the Fortran exponent marker D/d for E.
inline double parse_fortran_double(std::string text) {
    for (char& ch : text)
        if (ch == 'D' || ch == 'd') ch = 'E';
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw Error(ErrorCode::ParseError, "trailing characters in '" + text + "'");
    return v;
}

struct NamedMatrix {
    std::string name;
    int side = 0;
    std::array<Complex, 4> entries{};
    std::string cls;
    double trace_squared = 0.0;

    friend bool operator==(const NamedMatrix&, const NamedMatrix&) = default;
};

struct VerificationSummary {
    bool all_sides_involutive = false;
    std::vector<std::string> classes;
    std::vector<int> identity_indices;
    std::vector<std::pair<int, int>> duplicate_pairs;
    std::map<std::string, double> relation_residuals;

    friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

/// Everything `uniformize` reports, in the shape written to JSON.
struct ReportDocument {
    std::string version = schema_version;
    int degree = 0;
    int sign = -1;
    int genus = 0;
    std::string parity;
    std::vector<Complex> singularities;
    int alpha_num = 0;
    int alpha_den = 1;
    double a = 0.0;
    double fixed_point_radius = 0.0;
    std::vector<double> thetas;
    int base = 1;
    std::string convention = "raw";
    int precision = default_precision;
    std::vector<NamedMatrix> side_transforms;
    std::vector<NamedMatrix> generators;
    std::vector<Complex> fixed_points;
    Tessellation tessellation;
    double area = 0.0;
    SurfaceTopology topology;
    VerificationSummary verification;
    std::optional<GenusRange> genus_range;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

namespace detail {

inline Complex round_complex(Complex z, int p) { return {round_to(z.real(), p), round_to(z.imag(), p)}; }

inline NamedMatrix named(std::string name, int side, const MoebiusMap& m, int p) {
    NamedMatrix out;
    out.name = std::move(name);
    out.side = side;
    const auto e = m.entries();
    for (std::size_t k = 0; k < 4; ++k) out.entries[k] = round_complex(e[k], p);
    out.cls = std::string(to_string(classify(m)));
    out.trace_squared = round_to(trace_squared(m).real(), p);
    return out;
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

} // namespace detail

inline ReportDocument make_report(const UniformizationResult& res, bool normalized, int precision,
                                  std::optional<GenusRange> range = std::nullopt) {
    const int p = precision;
    ReportDocument doc;
    doc.degree = res.curve.degree;
    doc.sign = res.curve.sign;
    doc.genus = res.curve.genus;
    doc.parity = std::string(to_string(res.curve.parity));
    for (const Complex& z : res.curve.singularities()) doc.singularities.push_back(detail::round_complex(z, p));
    doc.alpha_num = res.params.alpha_num;
    doc.alpha_den = res.params.alpha_den;
    doc.a = round_to(res.params.a, p);
    doc.fixed_point_radius = round_to(fixed_point_radius(res.params), p);
    for (double t : res.params.thetas) doc.thetas.push_back(round_to(t, p));
    doc.base = res.base_index;
    doc.convention = normalized ? "normalized" : "raw";
    doc.precision = p;
    for (std::size_t r = 0; r < res.side_transforms.size(); ++r)
        doc.side_transforms.push_back(detail::named("S" + std::to_string(r + 1), static_cast<int>(r + 1),
                                                    res.side_transforms[r], p));
    const std::vector<int> sides = res.sides();
    const auto& gens = normalized ? res.normalized_generators : res.generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        doc.generators.push_back(detail::named(
            "S" + std::to_string(res.base_index) + "S" + std::to_string(sides[i]), sides[i], gens[i], p));
    for (const Complex& z : res.fixed_points) doc.fixed_points.push_back(detail::round_complex(z, p));
    doc.tessellation = res.tessellation;
    doc.area = round_to(res.area, p);
    doc.topology = tessellation_topology(res.tessellation);
    const VerificationReport& v = res.verification;
    doc.verification.all_sides_involutive = v.all_sides_involutive;
    for (TransformClass c : v.classes) doc.verification.classes.emplace_back(to_string(c));
    doc.verification.identity_indices = v.identity_indices;
    doc.verification.duplicate_pairs = v.duplicate_pairs;
    for (const auto& [name, residual] : v.relation_residuals)
        doc.verification.relation_residuals[name] = round_to(residual, p);
    doc.genus_range = range;
    return doc;
}

inline json matrix_json(const NamedMatrix& m) {
    return json{{"name", m.name},
                {"side", m.side},
                {"matrix", json::array({json::array({detail::complex_json(m.entries[0]),
                                                     detail::complex_json(m.entries[1])}),
                                        json::array({detail::complex_json(m.entries[2]),
                                                     detail::complex_json(m.entries[3])})})},
                {"class", m.cls},
                {"trace_squared", m.trace_squared}};
}

inline NamedMatrix matrix_from_json(const json& j) {
    NamedMatrix m;
    m.name = j.at("name").get<std::string>();
    m.side = j.at("side").get<int>();
    const json& mat = j.at("matrix");
    m.entries = {detail::complex_from(mat.at(0).at(0)), detail::complex_from(mat.at(0).at(1)),
                 detail::complex_from(mat.at(1).at(0)), detail::complex_from(mat.at(1).at(1))};
    m.cls = j.at("class").get<std::string>();
    m.trace_squared = j.at("trace_squared").get<double>();
    return m;
}

inline json to_json(const ReportDocument& d) {
    json sing = json::array(), fps = json::array(), sides = json::array(), gens = json::array();
    for (const Complex& z : d.singularities) sing.push_back(detail::complex_json(z));
    for (const Complex& z : d.fixed_points) fps.push_back(detail::complex_json(z));
    for (const NamedMatrix& m : d.side_transforms) sides.push_back(matrix_json(m));
    for (const NamedMatrix& m : d.generators) gens.push_back(matrix_json(m));
    json dups = json::array();
    for (const auto& [x, y] : d.verification.duplicate_pairs) dups.push_back(json::array({x, y}));
    json j;
    j["schema_version"] = d.version;
    j["curve"] = {{"degree", d.degree}, {"sign", d.sign < 0 ? "minus" : "plus"}, {"genus", d.genus},
                  {"parity", d.parity}, {"singularities", sing}};
    j["parameters"] = {{"alpha", json::array({d.alpha_num, d.alpha_den})},
                       {"a", d.a},
                       {"fixed_point_radius", d.fixed_point_radius},
                       {"thetas", d.thetas}};
    j["base"] = d.base;
    j["convention"] = d.convention;
    j["precision"] = d.precision;
    j["side_transforms"] = sides;
    j["generators"] = gens;
    j["fixed_points"] = fps;
    j["tessellation"] = {{"p", d.tessellation.p}, {"q", d.tessellation.q}};
    j["area"] = d.area;
    j["topology"] = {{"V", d.topology.vertices}, {"E", d.topology.edges}, {"F", d.topology.faces},
                     {"chi", d.topology.chi}, {"genus", d.topology.genus}};
    j["verification"] = {{"all_sides_involutive", d.verification.all_sides_involutive},
                         {"classes", d.verification.classes},
                         {"identity_indices", d.verification.identity_indices},
                         {"duplicate_pairs", dups},
                         {"relation_residuals", d.verification.relation_residuals}};
    if (d.genus_range) j["genus_range"] = {{"g_min", d.genus_range->g_min}, {"g_max", d.genus_range->g_max}};
    return j;
}

inline ReportDocument from_json(const json& j) {
    ReportDocument d;
    d.version = j.at("schema_version").get<std::string>();
    const json& c = j.at("curve");
    d.degree = c.at("degree").get<int>();
    d.sign = c.at("sign").get<std::string>() == "minus" ? -1 : 1;
    d.genus = c.at("genus").get<int>();
    d.parity = c.at("parity").get<std::string>();
    for (const json& z : c.at("singularities")) d.singularities.push_back(detail::complex_from(z));
    const json& p = j.at("parameters");
    d.alpha_num = p.at("alpha").at(0).get<int>();
    d.alpha_den = p.at("alpha").at(1).get<int>();
    d.a = p.at("a").get<double>();
    d.fixed_point_radius = p.at("fixed_point_radius").get<double>();
    d.thetas = p.at("thetas").get<std::vector<double>>();
    d.base = j.at("base").get<int>();
    d.convention = j.at("convention").get<std::string>();
    d.precision = j.at("precision").get<int>();
    for (const json& m : j.at("side_transforms")) d.side_transforms.push_back(matrix_from_json(m));
    for (const json& m : j.at("generators")) d.generators.push_back(matrix_from_json(m));
    for (const json& z : j.at("fixed_points")) d.fixed_points.push_back(detail::complex_from(z));
    d.tessellation = {j.at("tessellation").at("p").get<int>(), j.at("tessellation").at("q").get<int>()};
    d.area = j.at("area").get<double>();
    const json& t = j.at("topology");
    d.topology = {t.at("V").get<int>(), t.at("E").get<int>(), t.at("F").get<int>(), t.at("chi").get<int>(),
                  t.at("genus").get<int>()};
    const json& v = j.at("verification");
    d.verification.all_sides_involutive = v.at("all_sides_involutive").get<bool>();
    d.verification.classes = v.at("classes").get<std::vector<std::string>>();
    d.verification.identity_indices = v.at("identity_indices").get<std::vector<int>>();
    for (const json& pr : v.at("duplicate_pairs"))
        d.verification.duplicate_pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
    d.verification.relation_residuals = v.at("relation_residuals").get<std::map<std::string, double>>();
    if (j.contains("genus_range"))
        d.genus_range = GenusRange{j.at("genus_range").at("g_min").get<int>(),
                                   j.at("genus_range").at("g_max").get<int>()};
    return d;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline std::string format_complex(Complex z, int precision) {
    char buf[96];
    const double re = round_to(z.real(), precision);
    const double im = round_to(z.imag(), precision);
    std::snprintf(buf, sizeof buf, "%.*f %c %.*fi", precision, re, im < 0.0 ? '-' : '+', precision,
                  std::abs(im));
    return buf;
}

/// Aligned plain-text rendering of a report.
inline std::string format_table(const ReportDocument& d) {
    std::ostringstream os;
    const int p = d.precision;
    os << "curve        y^2 = z^" << d.degree << (d.sign < 0 ? " - 1" : " + 1") << "\n";
    os << "genus        " << d.genus << " (" << d.parity << " degree)\n";
    os << "alpha        " << d.alpha_num << "/" << d.alpha_den << "\n";
    os << "a            " << std::fixed << std::setprecision(p) << d.a << "\n";
    os << "radius       " << d.fixed_point_radius << "\n";
    os << "tessellation {" << d.tessellation.p << "," << d.tessellation.q << "}\n";
    os << "area         " << d.area << "\n";
    os << "topology     V=" << d.topology.vertices << " E=" << d.topology.edges << " F=" << d.topology.faces
       << " chi=" << d.topology.chi << " g=" << d.topology.genus << "\n";
    os << "convention   " << d.convention << " (base " << d.base << ")\n\n";
    const int w = 2 * p + 10;
    os << std::left << std::setw(8) << "name" << std::setw(w) << "(1,1)" << std::setw(w) << "(1,2)"
       << std::setw(w) << "(2,1)" << std::setw(w) << "(2,2)" << "class\n";
    for (const NamedMatrix& m : d.generators) {
        os << std::setw(8) << m.name;
        for (const Complex& e : m.entries) os << std::setw(w) << format_complex(e, p);
        os << m.cls << "\n";
    }
    os << std::right;
    if (!d.verification.identity_indices.empty() || !d.verification.duplicate_pairs.empty()) {
        os << "\nwarning: degenerate generators";
        for (int r : d.verification.identity_indices) os << " identity:S" << d.base << "S" << r;
        for (const auto& [x, y] : d.verification.duplicate_pairs)
            os << " duplicate:(S" << d.base << "S" << x << ",S" << d.base << "S" << y << ")";
        os << "\n";
    }
    return os.str();
}

/// Static figure: unit circle, ideal vertices, side geodesics between
/// consecutive vertices, and the fixed points of the side transformations.
inline std::string format_svg(const ReportDocument& d) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"600\" "
          "height=\"600\">\n";
    os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.005\">\n";
    os << "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\"/>\n";
    const std::size_t n = d.singularities.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex u = d.singularities[k];
        const Complex v = d.singularities[(k + 1) % n];
        const double delta = std::abs(std::arg(v / u));
        // Geodesic = arc of the circle orthogonal to the boundary through u, v.
        const double radius = std::tan(delta / 2.0);
        const int sweep = std::arg(v / u) > 0.0 ? 0 : 1;
        os << "<path d=\"M " << u.real() << " " << u.imag() << " A " << radius << " " << radius << " 0 0 "
           << sweep << " " << v.real() << " " << v.imag() << "\" stroke=\"steelblue\"/>\n";
    }
    os << "</g>\n<g transform=\"scale(1,-1)\">\n";
    for (const Complex& z : d.singularities)
        os << "<circle cx=\"" << z.real() << "\" cy=\"" << z.imag() << "\" r=\"0.02\" fill=\"black\"/>\n";
    for (const Complex& z : d.fixed_points)
        os << "<circle cx=\"" << z.real() << "\" cy=\"" << z.imag() << "\" r=\"0.015\" fill=\"crimson\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

/// One printed matrix table: products S_base S_r for a single degree.
struct GoldenTable {
    int degree = 0;
    int base = 1;
    std::string convention;
    std::vector<std::pair<int, std::array<Complex, 4>>> matrices;
};

/// Printed magnitudes at or below this are floating-point noise, read as 0.
inline constexpr double printed_noise_floor = 1e-15;

inline double denoise(double v) { return std::abs(v) <= printed_noise_floor ? 0.0 : v; }

inline GoldenTable parse_golden(const json& j) {
    GoldenTable t;
    t.degree = j.at("degree").get<int>();
    t.base = j.value("base", 1);
    t.convention = j.at("convention").get<std::string>();
    for (const json& m : j.at("matrices")) {
        std::array<Complex, 4> e{};
        const json& entries = m.at("entries");
        if (entries.size() != 4) throw Error(ErrorCode::ParseError, "golden matrix needs 4 entries");
        for (std::size_t k = 0; k < 4; ++k) {
            auto part = [](const json& x) {
                return x.is_string() ? parse_fortran_double(x.get<std::string>()) : x.get<double>();
            };
            e[k] = {denoise(part(entries[k].at(0))), denoise(part(entries[k].at(1)))};
        }
        t.matrices.emplace_back(m.at("index").get<int>(), e);
    }
    return t;
}

inline GoldenTable load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parse_golden(json::parse(in));
}

struct GoldenComparison {
    double max_deviation = 0.0;
    int components = 0;
    int failures = 0;
};

/// Per-component absolute comparison of computed products against a table.
inline GoldenComparison compare_golden(const GoldenTable& t, const UniformizationResult& res, double tol) {
    GoldenComparison out;
    const std::vector<int> sides = res.sides();
    const bool normalized = t.convention == "normalized";
    for (const auto& [index, expected] : t.matrices) {
        std::size_t pos = 0;
        while (pos < sides.size() && sides[pos] != index) ++pos;
        if (pos == sides.size()) throw Error(ErrorCode::IndexOutOfRange, "golden index not a generator");
        const auto got = (normalized ? res.normalized_generators : res.generators)[pos].entries();
        for (std::size_t k = 0; k < 4; ++k) {
            for (double dev : {std::abs(got[k].real() - expected[k].real()),
                               std::abs(got[k].imag() - expected[k].imag())}) {
                ++out.components;
                out.max_deviation = std::max(out.max_deviation, dev);
                if (!(dev <= tol)) ++out.failures;
            }
        }
    }
    return out;
}

inline json poly_json(const Poly& p, int precision) {
    json out = json::array();
    for (const Complex& c : p.coeffs()) out.push_back(detail::complex_json(detail::round_complex(c, precision)));
    return out;
}

inline json rational_json(const RationalFn& f, int precision) {
    return json{{"numerator", poly_json(f.numerator(), precision)},
                {"denominator", poly_json(f.denominator(), precision)}};
}

/// Coefficients lowest degree first, singular points with their pole orders.
inline json ode_json(const SecondOrderODE& ode, int precision) {
    json params = json::object();
    for (const auto& [k, v] : ode.parameters) params[k] = detail::complex_json(detail::round_complex(v, precision));
    json points = json::array();
    for (const PointClass& pc : singular_points(ode)) {
        json loc = pc.location.is_infinite() ? json("inf")
                                             : detail::complex_json(detail::round_complex(pc.location.value(), precision));
        points.push_back({{"location", loc},
                          {"kind", std::string(to_string(pc.kind))},
                          {"p1_pole_order", pc.p1_pole_order},
                          {"p2_pole_order", pc.p2_pole_order}});
    }
    return json{{"schema_version", schema_version},
                {"leading", poly_json(ode.leading, precision)},
                {"p1", rational_json(ode.p1, precision)},
                {"p2", rational_json(ode.p2, precision)},
                {"parameters", params},
                {"singular_points", points},
                {"is_fuchsian", is_fuchsian(ode)}};
}

} // namespace fuchs
