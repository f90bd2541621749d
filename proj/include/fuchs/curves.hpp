#pragma once

#include <string_view>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "hyperbolic.hpp"
#include "polynomial.hpp"

namespace fuchs {

enum class Parity { Odd, Even };

constexpr std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

/// y^2 = z^n - 1 (sign = -1) or y^2 = z^n + 1 (sign = +1).
struct CurveSpec {
    int degree = 5;
    int sign = -1;
    int genus = 2;
    Parity parity = Parity::Odd;

    /// The n roots of z^n = -sign, counterclockwise from the first one.
    std::vector<Complex> singularities() const {
        std::vector<Complex> out;
        out.reserve(static_cast<std::size_t>(degree));
        const double offset = sign < 0 ? 0.0 : pi / degree;
        for (int k = 0; k < degree; ++k) out.push_back(unit(offset + 2.0 * pi * k / degree));
        return out;
    }

    /// z^n + sign
    Poly polynomial() const {
        return Poly::monomial(static_cast<std::size_t>(degree)) + Poly::constant(double(sign));
    }

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

inline CurveSpec curve_from_degree(int n, int sign = -1) {
    if (n < 5) throw Error(ErrorCode::DegreeTooSmall, "hyperelliptic curves need degree >= 5");
    if (sign != -1 && sign != 1) throw Error(ErrorCode::BadDimensions, "sign must be +1 or -1");
    CurveSpec c;
    c.degree = n;
    c.sign = sign;
    c.parity = n % 2 != 0 ? Parity::Odd : Parity::Even;
    c.genus = c.parity == Parity::Odd ? (n - 1) / 2 : (n - 2) / 2;
    return c;
}

/// {4g, 4g} for odd degree, {4g + 2, 2g + 1} for even degree.
inline Tessellation tessellation_for_curve(const CurveSpec& c) {
    if (c.parity == Parity::Odd) return {4 * c.genus, 4 * c.genus};
    return {4 * c.genus + 2, 2 * c.genus + 1};
}

/// n consecutive integers standing in for the n-th roots of unity.
inline std::vector<int> integer_roots(int n) {
    if (n < 5) throw Error(ErrorCode::DegreeTooSmall, "hyperelliptic curves need degree >= 5");
    const int lo = n % 2 != 0 ? -(n - 1) / 2 : -(n - 2) / 2;
    std::vector<int> out;
    for (int k = 0; k < n; ++k) out.push_back(lo + k);
    return out;
}

inline Poly expand_integer_roots(const std::vector<int>& rs) {
    std::vector<Complex> zs(rs.begin(), rs.end());
    return expand_poly(zs);
}

} // namespace fuchs
