#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "curves.hpp"
#include "error.hpp"
#include "polynomial.hpp"

namespace fuchs {

inline constexpr double constraint_tolerance = 1e-9;
inline constexpr double singular_cluster_tolerance = 1e-6;

/// y'' + p1 y' + p2 y = 0. `leading` is the coefficient of y'' the equation
/// was written with before dividing through, kept for display.
struct SecondOrderODE {
    RationalFn p1;
    RationalFn p2;
    Poly leading = Poly::constant(1.0);
    std::map<std::string, Complex> parameters;
};

enum class PointKind { Ordinary, RegularSingular, IrregularSingular };

constexpr std::string_view to_string(PointKind k) {
    switch (k) {
    case PointKind::Ordinary: return "ordinary";
    case PointKind::RegularSingular: return "regular_singular";
    case PointKind::IrregularSingular: return "irregular_singular";
    }
    return "unknown";
}

struct PointClass {
    ExtendedComplex location;
    PointKind kind = PointKind::Ordinary;
    int p1_pole_order = 0;
    int p2_pole_order = 0;
};

namespace detail {

inline PointKind kind_from_orders(int o1, int o2) {
    if (o1 <= 0 && o2 <= 0) return PointKind::Ordinary;
    if (o1 <= 1 && o2 <= 2) return PointKind::RegularSingular;
    return PointKind::IrregularSingular;
}

inline RationalFn simple_pole(Complex xi, Complex residue, unsigned order = 1) {
    return {Poly::constant(residue), pow(Poly::linear(xi), order)};
}

} // namespace detail

/// Pole orders of p1 and p2 decide the class; at infinity the equation is
/// first rewritten in w = 1/z.
inline PointClass classify_point(const SecondOrderODE& ode, const ExtendedComplex& pt) {
    PointClass out;
    out.location = pt;
    if (pt.is_finite()) {
        out.p1_pole_order = ode.p1.pole_order(pt.value());
        out.p2_pole_order = ode.p2.pole_order(pt.value());
    } else {
        // P1(w) = 2/w - p1(1/w)/w^2, P2(w) = p2(1/w)/w^4
        const RationalFn inv_w{Poly::constant(1.0), Poly::monomial(1)};
        const RationalFn inv_w2{Poly::constant(1.0), Poly::monomial(2)};
        const RationalFn inv_w4{Poly::constant(1.0), Poly::monomial(4)};
        const RationalFn big_p1 = inv_w * Complex{2.0} - ode.p1.substitute_reciprocal() * inv_w2;
        const RationalFn big_p2 = ode.p2.substitute_reciprocal() * inv_w4;
        out.p1_pole_order = big_p1.pole_order_at_zero();
        out.p2_pole_order = big_p2.pole_order_at_zero();
    }
    out.kind = detail::kind_from_orders(out.p1_pole_order, out.p2_pole_order);
    return out;
}

/// Every pole of p1 or p2 plus the point at infinity, each classified.
/// Finite points come out sorted by real part, then imaginary part.
inline std::vector<PointClass> singular_points(const SecondOrderODE& ode) {
    std::vector<Complex> candidates;
    for (const RationalFn* f : {&ode.p1, &ode.p2}) {
        if (f->is_zero() || f->denominator().degree() < 1) continue;
        const std::vector<Complex> rs = roots(f->denominator());
        candidates.insert(candidates.end(), rs.begin(), rs.end());
    }
    std::vector<PointClass> out;
    for (const RootCluster& cl : cluster_roots(candidates, singular_cluster_tolerance)) {
        PointClass pc = classify_point(ode, cl.center);
        if (pc.kind != PointKind::Ordinary) out.push_back(pc);
    }
    std::sort(out.begin(), out.end(), [](const PointClass& x, const PointClass& y) {
        const Complex a = x.location.value(), b = y.location.value();
        if (std::abs(a.real() - b.real()) > singular_cluster_tolerance) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.push_back(classify_point(ode, ExtendedComplex::infinity()));
    return out;
}

inline bool is_fuchsian(const SecondOrderODE& ode) {
    for (const PointClass& pc : singular_points(ode))
        if (pc.kind == PointKind::IrregularSingular) return false;
    return true;
}

struct ConstraintViolation {
    std::string restriction;
    Complex residual;
};

/// The four restrictions on a second-order Fuchsian equation with n finite
/// singular points; empty result means all hold.
inline std::vector<ConstraintViolation> check_fuchsian_constraints(const std::vector<Complex>& xis,
                                                                   const std::vector<Complex>& A,
                                                                   const std::vector<Complex>& B,
                                                                   const std::vector<Complex>& C) {
    Complex sum_a{0.0}, sum_c{0.0}, third{0.0}, fourth{0.0};
    for (std::size_t i = 0; i < xis.size(); ++i) {
        sum_a += A[i];
        sum_c += C[i];
        third += B[i] + xis[i] * C[i];
        fourth += 2.0 * xis[i] * B[i] + xis[i] * xis[i] * C[i];
    }
    std::vector<ConstraintViolation> out;
    auto check = [&out](const char* name, Complex residual) {
        if (std::abs(residual) > constraint_tolerance) out.push_back({name, residual});
    };
    check("A_1+...+A_n = 2", sum_a - 2.0);
    check("C_1+...+C_n = 0", sum_c);
    check("(B_1+...+B_n)+(xi_1 C_1+...+xi_n C_n) = 0", third);
    check("(2 xi_1 B_1+...+2 xi_n B_n)+(xi_1^2 C_1+...+xi_n^2 C_n) = 0", fourth);
    return out;
}

/// p1 = sum A_i/(z - xi_i) + K1,
/// p2 = sum [B_i/(z - xi_i)^2 + C_i/(z - xi_i)] + K2.
inline SecondOrderODE build_fuchsian(const std::vector<Complex>& xis, const std::vector<Complex>& A,
                                     const std::vector<Complex>& B, const std::vector<Complex>& C,
                                     Complex K1 = 0.0, Complex K2 = 0.0) {
    if (A.size() != xis.size() || B.size() != xis.size() || C.size() != xis.size())
        throw Error(ErrorCode::BadParamCount, "xi, A, B, C must have equal length");
    for (std::size_t i = 0; i < xis.size(); ++i)
        for (std::size_t j = i + 1; j < xis.size(); ++j)
            if (std::abs(xis[i] - xis[j]) <= root_match_tolerance)
                throw Error(ErrorCode::DuplicateXi, "singular points must be distinct");
    // With no finite singular points the restrictions are vacuous (y'' = 0 when K1 = K2 = 0).
    const std::vector<ConstraintViolation> bad =
        xis.empty() ? std::vector<ConstraintViolation>{} : check_fuchsian_constraints(xis, A, B, C);
    if (!bad.empty()) throw Error(ErrorCode::ConstraintViolated, bad.front().restriction);

    // Sum over the common denominators prod (z - xi) and prod (z - xi)^2 so
    // no root finding is needed while assembling.
    Poly prod = Poly::constant(1.0);
    for (const Complex& xi : xis) prod = prod * Poly::linear(xi);
    const Poly prod2 = prod * prod;
    Poly n1 = prod * K1;
    Poly n2 = prod2 * K2;
    for (std::size_t i = 0; i < xis.size(); ++i) {
        Poly others = Poly::constant(1.0);
        for (std::size_t j = 0; j < xis.size(); ++j)
            if (j != i) others = others * Poly::linear(xis[j]);
        n1 = n1 + others * A[i];
        const Poly others2 = others * others;
        n2 = n2 + others2 * B[i] + others2 * Poly::linear(xis[i]) * C[i];
    }
    SecondOrderODE ode;
    ode.p1 = RationalFn(n1, prod);
    ode.p2 = RationalFn(n2, prod2);
    ode.parameters = {{"K1", K1}, {"K2", K2}};
    return ode;
}

enum class NamedEquation { Legendre, Tchebychev, Heun, Hypergeometric, WhittakerHypergeometric };

inline NamedEquation parse_named_equation(std::string_view name) {
    std::string lower(name);
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "legendre") return NamedEquation::Legendre;
    if (lower == "tchebychev" || lower == "chebyshev") return NamedEquation::Tchebychev;
    if (lower == "heun") return NamedEquation::Heun;
    if (lower == "hypergeometric") return NamedEquation::Hypergeometric;
    if (lower == "whittakerhypergeometric" || lower == "whittaker-hypergeometric")
        return NamedEquation::WhittakerHypergeometric;
    throw Error(ErrorCode::UnknownName, "unknown equation '" + std::string(name) + "'");
}

inline std::size_t parameter_count(NamedEquation e) {
    switch (e) {
    case NamedEquation::Legendre: return 1;
    case NamedEquation::Tchebychev: return 1;
    case NamedEquation::Heun: return 7;
    case NamedEquation::Hypergeometric: return 3;
    case NamedEquation::WhittakerHypergeometric: return 0;
    }
    return 0;
}

/// Classical equations in the coefficient form y'' + p1 y' + p2 y = 0.
/// Parameter order: Legendre (lambda), Tchebychev (lambda),
/// Heun (alpha, beta, gamma, delta, epsilon, a, q), Hypergeometric (a, b, c).
inline SecondOrderODE named_equation(NamedEquation e, const std::vector<Complex>& params) {
    if (params.size() != parameter_count(e))
        throw Error(ErrorCode::BadParamCount, "expected " + std::to_string(parameter_count(e)) +
                                                  " parameters, got " + std::to_string(params.size()));
    const Poly z = Poly::monomial(1);
    const Poly one = Poly::constant(1.0);
    SecondOrderODE ode;
    switch (e) {
    case NamedEquation::Legendre: {
        const Complex lam = params[0];
        const Poly one_minus_z2 = one - z * z;
        ode.p1 = RationalFn(z * Complex{2.0}, one_minus_z2);
        ode.p2 = RationalFn(Poly::constant(lam * (lam + 1.0)), one_minus_z2);
        ode.parameters = {{"lambda", lam}};
        break;
    }
    case NamedEquation::Tchebychev: {
        const Complex lam = params[0];
        const Poly one_minus_z2 = one - z * z;
        ode.p1 = RationalFn(z, one_minus_z2);
        ode.p2 = RationalFn(Poly::constant(lam * lam), one_minus_z2);
        ode.parameters = {{"lambda", lam}};
        break;
    }
    case NamedEquation::Heun: {
        const Complex al = params[0], be = params[1], ga = params[2], de = params[3], ep = params[4],
                      a = params[5], q = params[6];
        if (std::abs(a) <= root_match_tolerance || std::abs(a - 1.0) <= root_match_tolerance)
            throw Error(ErrorCode::DuplicateXi, "Heun needs a distinct from 0 and 1");
        ode.p1 = detail::simple_pole(0.0, ga) + detail::simple_pole(1.0, de) + detail::simple_pole(a, ep);
        ode.p2 = RationalFn(z * (al * be) - Poly::constant(q),
                            z * Poly::linear(1.0) * Poly::linear(a));
        ode.parameters = {{"alpha", al}, {"beta", be}, {"gamma", ga}, {"delta", de},
                          {"epsilon", ep}, {"a", a}, {"q", q}};
        break;
    }
    case NamedEquation::Hypergeometric: {
        const Complex a = params[0], b = params[1], c = params[2];
        const Poly z_one_minus_z = z * (one - z);
        ode.p1 = RationalFn(Poly::constant(c) - z * (1.0 + a + b), z_one_minus_z);
        ode.p2 = RationalFn(Poly::constant(-a * b), z_one_minus_z);
        ode.parameters = {{"a", a}, {"b", b}, {"c", c}};
        break;
    }
    case NamedEquation::WhittakerHypergeometric: {
        // 25 x (x - 1) y'' + 20 (2x - 1) y' + 2 y = 0
        const Poly lead = z * Poly::linear(1.0) * Complex{25.0};
        ode.p1 = RationalFn(Poly{-20.0, 40.0}, lead);
        ode.p2 = RationalFn(Poly::constant(2.0), lead);
        ode.leading = lead;
        break;
    }
    }
    return ode;
}

/// Genus implied by a polynomial degree: ceil(deg / 2) - 1.
inline int genus_for_degree(int degree) { return (degree + 1) / 2 - 1; }

/// y'' + (3/16)[(f'/f)^2 - ((2g+2)/(2g+1)) f''/f] y = 0.
inline SecondOrderODE whittaker_equation(const Poly& f) {
    if (f.degree() < 5) throw Error(ErrorCode::DegreeTooSmall, "need a polynomial of degree >= 5");
    const std::vector<Complex> rs = roots(f);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (std::abs(rs[i] - rs[j]) <= 1e-6 * std::max(1.0, std::abs(rs[i])))
                throw Error(ErrorCode::RepeatedRoots, "f must have distinct roots");
    const int g = genus_for_degree(f.degree());
    const double ratio = (2.0 * g + 2.0) / (2.0 * g + 1.0);
    const Poly d1 = f.derivative();
    const Poly d2 = d1.derivative();
    SecondOrderODE ode;
    ode.p1 = RationalFn();
    ode.p2 = RationalFn((d1 * d1 - f * d2 * Complex{ratio}) * Complex{3.0 / 16.0}, f * f);
    ode.parameters = {{"ratio", ratio}};
    return ode;
}

/// The equation P y'' + P (2/(z - s) + k1) y' + P k2 y = 0 attached to a curve,
/// with P the polynomial of its integer-shifted roots; s = -1 for degrees 5
/// and 7, s = +1 for degrees 6 and 8.
inline SecondOrderODE hyperelliptic_equation(const CurveSpec& c, Complex k1, Complex k2) {
    if (c.degree < 5 || c.degree > 8)
        throw Error(ErrorCode::UnsupportedDegree, "curve equations exist for degrees 5..8");
    const double s = c.parity == Parity::Odd ? -1.0 : 1.0;
    SecondOrderODE ode;
    ode.leading = expand_integer_roots(integer_roots(c.degree));
    ode.p1 = detail::simple_pole(s, 2.0) + RationalFn::constant(k1);
    ode.p2 = RationalFn::constant(k2);
    ode.parameters = {{"k1", k1}, {"k2", k2}, {"s", s}};
    return ode;
}

} // namespace fuchs
