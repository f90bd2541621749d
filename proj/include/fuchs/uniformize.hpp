#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "curves.hpp"
#include "error.hpp"
#include "hyperbolic.hpp"
#include "moebius.hpp"

namespace fuchs {

inline constexpr double duplicate_tolerance = 1e-6;

/// Constants of the closed-form side transformations
///   S_r(t) = (a t - e^{i theta_r}) / (e^{-i theta_r} t - a),
///   theta_r = (4(r-1) + 1) pi alpha / 2,  a = (2 cos(pi alpha) - 1)^{-1/2},
/// with alpha = (g - 1) / n kept as an exact fraction.
struct MursiParams {
    int degree = 0;
    int genus = 0;
    int alpha_num = 0;
    int alpha_den = 1;
    double a = 0.0;
    std::vector<double> thetas;

    double alpha() const { return static_cast<double>(alpha_num) / alpha_den; }
};

inline MursiParams mursi_parameters(const CurveSpec& c) {
    if (c.genus < 2) throw Error(ErrorCode::GenusTooSmall, "uniformization needs genus >= 2");
    MursiParams p;
    p.degree = c.degree;
    p.genus = c.genus;
    const int g = std::gcd(c.genus - 1, c.degree);
    p.alpha_num = (c.genus - 1) / g;
    p.alpha_den = c.degree / g;
    const double base = 2.0 * std::cos(pi * p.alpha()) - 1.0;
    if (base <= 1e-12)
        throw Error(ErrorCode::NonHyperbolicParameters,
                    "2 cos(pi alpha) - 1 <= 0 for degree " + std::to_string(c.degree));
    p.a = 1.0 / std::sqrt(base);
    for (int r = 1; r <= c.degree; ++r) p.thetas.push_back((4.0 * (r - 1) + 1.0) * pi * p.alpha() / 2.0);
    return p;
}

/// Raw side transformations M_r = [[a, -e^{i theta_r}], [e^{-i theta_r}, -a]],
/// det = 1 - a^2.
inline std::vector<MoebiusMap> side_transformations(const MursiParams& p) {
    std::vector<MoebiusMap> out;
    for (double theta : p.thetas)
        out.push_back({Complex{p.a}, -unit(theta), unit(-theta), Complex{-p.a}});
    return out;
}

/// Raw products S_base S_r for r != base, in increasing r. det = (1 - a^2)^2.
inline std::vector<MoebiusMap> group_generators(const MursiParams& p, int base = 1) {
    if (base < 1 || base > p.degree)
        throw Error(ErrorCode::IndexOutOfRange, "base index " + std::to_string(base) + " out of range");
    const std::vector<MoebiusMap> sides = side_transformations(p);
    std::vector<MoebiusMap> out;
    for (int r = 1; r <= p.degree; ++r)
        if (r != base) out.push_back(sides[base - 1] * sides[r - 1]);
    return out;
}

/// Divides a raw generator by a^2 - 1, giving det = 1.
inline MoebiusMap normalize_generator(const MursiParams& p, const MoebiusMap& raw) {
    return raw / Complex{p.a * p.a - 1.0};
}

/// Radius of the interior fixed point of every S_r.
inline double fixed_point_radius(const MursiParams& p) { return p.a - std::sqrt(p.a * p.a - 1.0); }

/// Side indices r (1-based) of the generators, in output order.
inline std::vector<int> generator_sides(int degree, int base) {
    std::vector<int> out;
    for (int r = 1; r <= degree; ++r)
        if (r != base) out.push_back(r);
    return out;
}

struct Relation {
    std::string name;
    GroupWord word;
};

/// Surface-group relations over T_1..T_{n-1}: the alternating word
/// T1 T2^-1 T3 ... and its sign-flipped companion. Odd degrees join the two
/// into a single relator; even degrees keep two.
inline std::vector<Relation> presentation_relations(const CurveSpec& c) {
    const std::size_t k = static_cast<std::size_t>(c.degree - 1);
    const std::string name = "Gamma" + std::to_string(tessellation_for_curve(c).p);
    auto alternating = [k](int first) {
        GroupWord w;
        for (std::size_t i = 1; i <= k; ++i) w.push_back({i, (i % 2 == 1) ? first : -first});
        return w;
    };
    if (c.parity == Parity::Odd) {
        GroupWord w = alternating(1);
        const GroupWord tail = alternating(-1);
        w.insert(w.end(), tail.begin(), tail.end());
        return {{name, w}};
    }
    return {{name + "_a", alternating(1)}, {name + "_b", alternating(-1)}};
}

struct VerificationReport {
    bool all_sides_involutive = false;
    std::vector<double> involution_residuals;
    std::vector<TransformClass> side_classes;
    std::vector<TransformClass> classes;
    std::vector<double> trace_squared;
    std::vector<int> identity_indices;
    std::vector<std::pair<int, int>> duplicate_pairs;
    std::map<std::string, double> relation_residuals;
};

struct UniformizationResult {
    CurveSpec curve;
    MursiParams params;
    int base_index = 1;
    std::vector<MoebiusMap> side_transforms;
    std::vector<MoebiusMap> generators;
    std::vector<MoebiusMap> normalized_generators;
    std::vector<Complex> fixed_points;
    Tessellation tessellation;
    double area = 0.0;
    VerificationReport verification;

    std::vector<int> sides() const { return generator_sides(curve.degree, base_index); }
};

/// Involutions, classes, projective identities, duplicates and relation
/// residuals. Indices refer to the side r of the generator S_base S_r.
inline VerificationReport verify_generators(const UniformizationResult& result,
                                            double tolerance = duplicate_tolerance) {
    VerificationReport rep;
    rep.all_sides_involutive = true;
    for (const MoebiusMap& s : result.side_transforms) {
        const double res = identity_residual(s * s);
        rep.involution_residuals.push_back(res);
        rep.side_classes.push_back(classify(s));
        if (!(res < class_tolerance)) rep.all_sides_involutive = false;
    }
    const std::vector<int> sides = result.sides();
    const auto& gens = result.normalized_generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        rep.classes.push_back(classify(gens[i]));
        rep.trace_squared.push_back(trace_squared(gens[i]).real());
        if (identity_residual(gens[i]) < tolerance) rep.identity_indices.push_back(sides[i]);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (projectively_equal(gens[i], gens[j], tolerance))
                rep.duplicate_pairs.emplace_back(sides[i], sides[j]);
    for (const Relation& rel : presentation_relations(result.curve))
        rep.relation_residuals[rel.name] = identity_residual(evaluate_word(gens, rel.word));
    return rep;
}

inline UniformizationResult uniformize(const CurveSpec& c, int base = 1) {
    UniformizationResult res;
    res.curve = c;
    res.params = mursi_parameters(c);
    res.base_index = base;
    res.side_transforms = side_transformations(res.params);
    res.generators = group_generators(res.params, base);
    for (const MoebiusMap& g : res.generators)
        res.normalized_generators.push_back(normalize_generator(res.params, g));
    const double rho = fixed_point_radius(res.params);
    for (double theta : res.params.thetas) res.fixed_points.push_back(std::polar(rho, theta));
    res.tessellation = tessellation_for_curve(c);
    res.area = regular_polygon_area(res.tessellation).value;
    res.verification = verify_generators(res);
    return res;
}

} // namespace fuchs
