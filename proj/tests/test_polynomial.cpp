#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fuchs/polynomial.hpp"
#include "support.hpp"

using namespace fuchs;

TEST(Poly, EvaluateAndDerive) {
    const Poly p{1.0, -3.0, 0.0, 2.0}; // 2z^3 - 3z + 1
    EXPECT_COMPLEX_NEAR(p(2.0), Complex(11.0), 1e-15);
    EXPECT_TRUE(p.derivative() == (Poly{-3.0, 0.0, 6.0}));
    EXPECT_EQ(Poly{}.degree(), -1);
}

TEST(Poly, TaylorShift) {
    const Poly p = Poly::linear(2.0) * Poly::linear(2.0) * Poly::linear(-1.0); // (z-2)^2 (z+1)
    const Poly s = p.taylor_shift(2.0);
    EXPECT_LT(std::abs(s.coeff(0)), 1e-15);
    EXPECT_LT(std::abs(s.coeff(1)), 1e-15);
    EXPECT_COMPLEX_NEAR(s.coeff(2), Complex(3.0), 1e-15);
    EXPECT_EQ(p.vanishing_order(2.0), 2);
    EXPECT_EQ(p.vanishing_order(-1.0), 1);
    EXPECT_EQ(p.vanishing_order(0.5), 0);
}

TEST(Poly, TrimDropsNegligibleLeading) {
    const Poly p{1.0, 2.0, 1e-20};
    EXPECT_EQ(p.degree(), 1);
}

TEST(Roots, KnownCubic) {
    const Poly p = Poly::linear(1.0) * Poly::linear(Complex{0.0, 2.0}) * Poly::linear(-3.0);
    std::vector<Complex> rs = roots(p);
    ASSERT_EQ(rs.size(), 3u);
    for (Complex expected : {Complex{1.0}, Complex{0.0, 2.0}, Complex{-3.0}}) {
        const auto it = std::min_element(rs.begin(), rs.end(), [&](Complex x, Complex y) {
            return std::abs(x - expected) < std::abs(y - expected);
        });
        EXPECT_LT(std::abs(*it - expected), 1e-12);
    }
}

TEST(Roots, DoubleRootConverges) {
    const Poly p = pow(Poly::linear(1.5), 2) * Poly::linear(-0.5);
    const auto clusters = cluster_roots(roots(p), 1e-6);
    ASSERT_EQ(clusters.size(), 2u);
    const auto dbl = std::find_if(clusters.begin(), clusters.end(), [](const RootCluster& c) { return c.multiplicity == 2; });
    ASSERT_NE(dbl, clusters.end());
    EXPECT_LT(std::abs(dbl->center - 1.5), 1e-7);
}

TEST(Roots, UnityRootsOfHighDegree) {
    for (int n = 5; n <= 16; ++n) {
        const Poly p = Poly::monomial(n) - Poly::constant(1.0);
        for (const Complex& z : roots(p)) EXPECT_NEAR(std::abs(z), 1.0, 1e-12) << n;
    }
}

TEST(RationalFn, CancelsCommonFactors) {
    const RationalFn f(Poly::linear(2.0) * Poly::linear(3.0), Poly::linear(2.0) * Poly::linear(5.0));
    EXPECT_EQ(f.denominator().degree(), 1);
    EXPECT_EQ(f.numerator().degree(), 1);
    EXPECT_COMPLEX_NEAR(f(0.0), Complex(3.0 / 5.0), 1e-12);
    EXPECT_EQ(f.pole_order(5.0), 1);
    EXPECT_EQ(f.pole_order(2.0), 0);
}

TEST(RationalFn, PoleOrders) {
    const RationalFn f(Poly::constant(1.0), pow(Poly::linear(1.0), 3) * Poly::monomial(1));
    EXPECT_EQ(f.pole_order(1.0), 3);
    EXPECT_EQ(f.pole_order_at_zero(), 1);
    EXPECT_EQ(f.pole_order(7.0), 0);
    const RationalFn g(Poly::monomial(2), Poly::constant(1.0));
    EXPECT_EQ(g.pole_order_at_zero(), -2);
}

TEST(RationalFn, ZeroDenominatorRejected) {
    EXPECT_ERROR_CODE(RationalFn(Poly::constant(1.0), Poly{}), ErrorCode::DegenerateMap);
}

TEST(RationalFn, ReciprocalSubstitution) {
    // r(z) = z / (z^2 + 1)  ->  r(1/w) = w / (1 + w^2)
    const RationalFn r(Poly::monomial(1), Poly{1.0, 0.0, 1.0});
    const RationalFn s = r.substitute_reciprocal();
    for (Complex w : {Complex{0.3}, Complex{-0.7, 0.2}}) EXPECT_COMPLEX_NEAR(s(w), r(1.0 / w), 1e-12);
}

TEST(PolynomialProperty, RootsReproduceRandomPolynomials) {
    std::mt19937 rng(fuchs::testing::seed + 20);
    for (int i = 0; i < 50; ++i) {
        std::vector<Complex> rs;
        const int n = 3 + i % 8;
        for (int k = 0; k < n; ++k) rs.push_back(fuchs::testing::random_complex(rng));
        const Poly p = expand_poly(rs);
        for (const Complex& z : roots(p)) {
            const double nearest = std::abs(*std::min_element(rs.begin(), rs.end(), [&](Complex x, Complex y) {
                return std::abs(x - z) < std::abs(y - z);
            }) - z);
            EXPECT_LT(nearest, 1e-6);
        }
    }
}
