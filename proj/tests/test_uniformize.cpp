#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "fuchs/uniformize.hpp"
#include "support.hpp"

using namespace fuchs;

namespace {

double expected_a(int n) {
    const int g = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
    return 1.0 / std::sqrt(2.0 * std::cos(pi * (g - 1) / n) - 1.0);
}

// Interior root of the fixed-point quadratic of M_r, found independently.
Complex interior_fixed_point(const MoebiusMap& m) {
    // c z^2 + (d - a) z - b = 0
    const Complex A = m.c, B = m.d - m.a, C = -m.b;
    const Complex disc = std::sqrt(B * B - 4.0 * A * C);
    const Complex z1 = (-B + disc) / (2.0 * A), z2 = (-B - disc) / (2.0 * A);
    return std::abs(z1) < 1.0 ? z1 : z2;
}

} // namespace

TEST(MursiParameters, Degree5) {
    const MursiParams p = mursi_parameters(curve_from_degree(5));
    EXPECT_EQ(p.alpha_num, 1);
    EXPECT_EQ(p.alpha_den, 5);
    EXPECT_NEAR(p.a, 1.2720196, 1e-7);
    ASSERT_EQ(p.thetas.size(), 5u);
    EXPECT_NEAR(p.thetas[0], pi / 10.0, 1e-15);
    EXPECT_NEAR(p.thetas[1], pi / 2.0, 1e-15);
}

TEST(MursiParameters, OtherDegrees) {
    const MursiParams p7 = mursi_parameters(curve_from_degree(7));
    EXPECT_EQ(p7.alpha_num, 2);
    EXPECT_EQ(p7.alpha_den, 7);
    EXPECT_NEAR(p7.a * p7.a, 4.0489173, 1e-7);
    const MursiParams p6 = mursi_parameters(curve_from_degree(6));
    EXPECT_EQ(p6.alpha_num, 1);
    EXPECT_EQ(p6.alpha_den, 6);
    const MursiParams p8 = mursi_parameters(curve_from_degree(8));
    EXPECT_EQ(p8.alpha_num, 1);
    EXPECT_EQ(p8.alpha_den, 4);
    for (int n : {5, 6, 7, 8, 10}) EXPECT_NEAR(mursi_parameters(curve_from_degree(n)).a, expected_a(n), 1e-15);
}

TEST(MursiParameters, Errors) {
    CurveSpec torus;
    torus.degree = 3;
    torus.genus = 1;
    EXPECT_ERROR_CODE(mursi_parameters(torus), ErrorCode::GenusTooSmall);
    // alpha = 1/3 gives 2 cos(pi/3) - 1 = 0
    EXPECT_ERROR_CODE(mursi_parameters(curve_from_degree(9)), ErrorCode::NonHyperbolicParameters);
}

TEST(SideTransformations, Degree5First) {
    const auto sides = side_transformations(mursi_parameters(curve_from_degree(5)));
    ASSERT_EQ(sides.size(), 5u);
    EXPECT_COMPLEX_NEAR(sides[0].a, Complex(1.2720196), 1e-7);
    EXPECT_COMPLEX_NEAR(sides[0].b, Complex(-0.9510565, -0.3090170), 1e-7);
    EXPECT_COMPLEX_NEAR(sides[0].c, Complex(0.9510565, -0.3090170), 1e-7);
    EXPECT_COMPLEX_NEAR(sides[0].d, Complex(-1.2720196), 1e-7);
}

TEST(SideTransformations, EllipticInvolutions) {
    for (int n : {5, 6, 7, 8}) {
        const MursiParams p = mursi_parameters(curve_from_degree(n));
        for (const MoebiusMap& m : side_transformations(p)) {
            EXPECT_EQ(classify(m), TransformClass::Elliptic);
            EXPECT_LT(std::abs(m.trace()), 1e-15);
            EXPECT_NEAR(m.det().real(), 1.0 - p.a * p.a, 1e-12);
            const MoebiusMap sq = m * m;
            EXPECT_LT(max_entry_distance(sq, MoebiusMap::identity() * Complex{p.a * p.a - 1.0}), 1e-12);
        }
    }
}

TEST(GroupGenerators, Degree5Raw) {
    const MursiParams p = mursi_parameters(curve_from_degree(5));
    const auto gens = group_generators(p);
    ASSERT_EQ(gens.size(), 4u);
    const double a2 = p.a * p.a;
    const Complex w = std::polar(1.0, -2.0 * pi / 5.0);
    EXPECT_COMPLEX_NEAR(gens[0].a, a2 - w, 1e-12);
    // (1,2) entry: a(-e^{i theta_2}) - e^{i theta_1}(-a) = a (e^{i theta_1} - e^{i theta_2})
    EXPECT_COMPLEX_NEAR(gens[0].b, p.a * (unit(p.thetas[0]) - unit(p.thetas[1])), 1e-12);
    EXPECT_COMPLEX_NEAR(gens[0].a, Complex(1.3090170, 0.9510565), 1e-7);
    EXPECT_COMPLEX_NEAR(gens[0].b, Complex(1.2097626, -0.8789440), 1e-7);
}

TEST(GroupGenerators, Degree7FourthProduct) {
    const MursiParams p = mursi_parameters(curve_from_degree(7));
    const auto gens = group_generators(p);
    const MoebiusMap s14 = gens[2];
    EXPECT_COMPLEX_NEAR(s14.a, p.a * p.a - unit(p.thetas[0] - p.thetas[3]), 1e-12);
    EXPECT_NEAR(s14.a.real(), 3.4254268, 1e-6);
    EXPECT_NEAR(s14.a.imag(), -0.7818315, 1e-6);
    EXPECT_NEAR(s14.b.real(), 0.0, 1e-12);
    EXPECT_NEAR(s14.b.imag(), 1.7461148, 1e-6);
}

TEST(GroupGenerators, Degree5Normalized) {
    const MursiParams p = mursi_parameters(curve_from_degree(5));
    const MoebiusMap t1 = normalize_generator(p, group_generators(p)[0]);
    EXPECT_NEAR(std::abs(t1.det() - 1.0), 0.0, 1e-12);
    EXPECT_COMPLEX_NEAR(t1.a, Complex(2.1180340, 1.5388418), 1e-7);
    EXPECT_COMPLEX_NEAR(t1.b, Complex(1.9574370, -1.4221612), 1e-7);
}

TEST(GroupGenerators, Degree8FifthIsScalar) {
    const MursiParams p = mursi_parameters(curve_from_degree(8));
    const MoebiusMap s15 = group_generators(p)[3];
    EXPECT_LT(max_entry_distance(s15, MoebiusMap::identity() * Complex{p.a * p.a - 1.0}), 1e-12);
    EXPECT_NEAR(p.a * p.a - 1.0, std::sqrt(2.0), 1e-12);
}

TEST(GroupGenerators, BaseIndex) {
    const MursiParams p = mursi_parameters(curve_from_degree(6));
    const auto sides = side_transformations(p);
    const auto gens = group_generators(p, 3);
    ASSERT_EQ(gens.size(), 5u);
    EXPECT_LT(max_entry_distance(gens[0], sides[2] * sides[0]), 1e-15);
    EXPECT_LT(max_entry_distance(gens[2], sides[2] * sides[3]), 1e-15);
    EXPECT_EQ(generator_sides(6, 3), (std::vector<int>{1, 2, 4, 5, 6}));
    EXPECT_ERROR_CODE(group_generators(p, 0), ErrorCode::IndexOutOfRange);
    EXPECT_ERROR_CODE(group_generators(p, 7), ErrorCode::IndexOutOfRange);
}

TEST(FixedPointRadius, Examples) {
    EXPECT_NEAR(fixed_point_radius(mursi_parameters(curve_from_degree(5))), 0.4858683, 1e-7);
    EXPECT_NEAR(fixed_point_radius(mursi_parameters(curve_from_degree(8))), 0.3645669, 1e-7);
    MursiParams near_one;
    near_one.a = 1.0 + 1e-12;
    EXPECT_NEAR(fixed_point_radius(near_one), 1.0, 1e-5);
}

TEST(FixedPointRadius, MatchesQuadraticOracle) {
    for (int n : {5, 6, 7, 8}) {
        const MursiParams p = mursi_parameters(curve_from_degree(n));
        const auto sides = side_transformations(p);
        for (std::size_t r = 0; r < sides.size(); ++r) {
            const Complex z = interior_fixed_point(sides[r]);
            EXPECT_NEAR(std::abs(z), fixed_point_radius(p), 1e-12);
            EXPECT_NEAR(std::abs(std::remainder(std::arg(z) - p.thetas[r], 2.0 * pi)), 0.0, 1e-12);
        }
    }
}

TEST(PresentationRelations, Words) {
    const auto odd = presentation_relations(curve_from_degree(5));
    ASSERT_EQ(odd.size(), 1u);
    EXPECT_EQ(odd[0].name, "Gamma8");
    ASSERT_EQ(odd[0].word.size(), 8u);
    const int expected_exp[8] = {1, -1, 1, -1, -1, 1, -1, 1};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(odd[0].word[i].generator, i % 4 + 1);
        EXPECT_EQ(odd[0].word[i].exponent, expected_exp[i]);
    }
    const auto even = presentation_relations(curve_from_degree(8));
    ASSERT_EQ(even.size(), 2u);
    EXPECT_EQ(even[0].name, "Gamma14_a");
    EXPECT_EQ(even[1].name, "Gamma14_b");
    EXPECT_EQ(even[0].word.size(), 7u);
    EXPECT_EQ(even[1].word.front().exponent, -1);
}

TEST(Verify, Degree5) {
    const UniformizationResult res = uniformize(curve_from_degree(5));
    EXPECT_TRUE(res.verification.all_sides_involutive);
    ASSERT_EQ(res.verification.classes.size(), 4u);
    for (TransformClass c : res.verification.classes) EXPECT_EQ(c, TransformClass::Hyperbolic);
    EXPECT_TRUE(res.verification.identity_indices.empty());
    EXPECT_TRUE(res.verification.duplicate_pairs.empty());
}

TEST(Verify, Degree6) {
    const UniformizationResult res = uniformize(curve_from_degree(6));
    ASSERT_EQ(res.verification.classes.size(), 5u);
    for (TransformClass c : res.verification.classes) EXPECT_EQ(c, TransformClass::Hyperbolic);
}

TEST(Verify, Degree8Degeneracies) {
    const UniformizationResult res = uniformize(curve_from_degree(8));
    EXPECT_EQ(res.verification.identity_indices, (std::vector<int>{5}));
    const std::vector<std::pair<int, int>> pairs{{2, 6}, {3, 7}, {4, 8}};
    EXPECT_EQ(res.verification.duplicate_pairs, pairs);
    EXPECT_EQ(res.verification.classes[3], TransformClass::Identity);
}

TEST(Uniformize, Assembly) {
    const UniformizationResult r5 = uniformize(curve_from_degree(5));
    EXPECT_EQ(r5.tessellation, (Tessellation{8, 8}));
    EXPECT_NEAR(r5.area, 4 * pi, 1e-12);
    EXPECT_EQ(r5.generators.size(), 4u);
    const UniformizationResult r7 = uniformize(curve_from_degree(7));
    EXPECT_EQ(r7.tessellation, (Tessellation{12, 12}));
    EXPECT_NEAR(r7.area, 8 * pi, 1e-12);
    EXPECT_EQ(r7.generators.size(), 6u);
    const UniformizationResult r6 = uniformize(curve_from_degree(6));
    EXPECT_EQ(r6.tessellation, (Tessellation{10, 5}));
    EXPECT_NEAR(r6.area, 4 * pi, 1e-12);
    EXPECT_EQ(r6.generators.size(), 5u);
}

TEST(Uniformize, PlusSignUsesSameTransformations) {
    const UniformizationResult minus = uniformize(curve_from_degree(5, -1));
    const UniformizationResult plus = uniformize(curve_from_degree(5, 1));
    for (std::size_t i = 0; i < minus.generators.size(); ++i)
        EXPECT_EQ(max_entry_distance(minus.generators[i], plus.generators[i]), 0.0);
}

TEST(UniformizeProperty, Invariants) {
    for (int n : {5, 6, 7, 8, 10}) {
        const UniformizationResult res = uniformize(curve_from_degree(n));
        const MursiParams& p = res.params;
        EXPECT_EQ(res.side_transforms.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(res.generators.size(), static_cast<std::size_t>(n - 1));
        for (double r : res.verification.involution_residuals) EXPECT_LT(r, 1e-9);
        const double rho = fixed_point_radius(p);
        for (std::size_t r = 0; r < res.fixed_points.size(); ++r) {
            EXPECT_NEAR(std::abs(res.fixed_points[r]), rho, 1e-9);
            if (r + 1 < res.fixed_points.size()) {
                const double step = std::arg(res.fixed_points[r + 1] / res.fixed_points[r]);
                EXPECT_NEAR(std::remainder(step - 2.0 * pi * p.alpha(), 2.0 * pi), 0.0, 1e-9);
            }
        }
        const double raw_det = (1.0 - p.a * p.a) * (1.0 - p.a * p.a);
        for (std::size_t i = 0; i < res.generators.size(); ++i) {
            const MoebiusMap& g = res.generators[i];
            EXPECT_LT(std::abs(g.d - std::conj(g.a)), 1e-9);
            EXPECT_LT(std::abs(g.c - std::conj(g.b)), 1e-9);
            EXPECT_LE(std::abs(g.det() - raw_det), 1e-9 * raw_det);
            EXPECT_LT(std::abs(res.normalized_generators[i].det() - 1.0), 1e-9);
        }
        for (const auto& [name, residual] : res.verification.relation_residuals) EXPECT_TRUE(std::isfinite(residual));
    }
}

TEST(UniformizeProperty, DistinctAnglesGiveHyperbolicGenerators) {
    for (int n : {5, 6, 7}) {
        const UniformizationResult res = uniformize(curve_from_degree(n));
        for (std::size_t i = 0; i < res.generators.size(); ++i) {
            EXPECT_EQ(res.verification.classes[i], TransformClass::Hyperbolic);
            EXPECT_GT(res.verification.trace_squared[i], 4.0 + 1e-6);
        }
    }
}

TEST(UniformizeProperty, HalfTurnsReproduceSides) {
    for (int n : {5, 6, 7, 8}) {
        const UniformizationResult res = uniformize(curve_from_degree(n));
        for (std::size_t r = 0; r < res.side_transforms.size(); ++r) {
            const MoebiusMap h = half_turn(ModelPoint::disk(res.fixed_points[r]));
            EXPECT_LT(projective_distance(h, normalize(res.side_transforms[r])), 1e-7);
        }
    }
}

TEST(UniformizeProperty, RelationResidualsAreDeterministic) {
    for (int n : {5, 6, 7, 8}) {
        const auto a = uniformize(curve_from_degree(n)).verification.relation_residuals;
        const auto b = uniformize(curve_from_degree(n)).verification.relation_residuals;
        EXPECT_EQ(a, b);
    }
}

TEST(UniformizeProperty, SupportedDegrees) {
    // 2 cos(pi alpha) - 1 > 0 needs alpha < 1/3.
    for (int n = 5; n <= 24; ++n) {
        const CurveSpec c = curve_from_degree(n);
        const bool ok = 3 * (c.genus - 1) < n;
        if (ok)
            EXPECT_GT(mursi_parameters(c).a, 1.0) << n;
        else
            EXPECT_ERROR_CODE(mursi_parameters(c), ErrorCode::NonHyperbolicParameters);
    }
}
