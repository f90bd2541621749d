#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace fuchs {

inline constexpr double det_tolerance = 1e-12;
inline constexpr double class_tolerance = 1e-9;

enum class TransformClass { Identity, Elliptic, Parabolic, Hyperbolic, Loxodromic };

constexpr std::string_view to_string(TransformClass c) {
    switch (c) {
    case TransformClass::Identity: return "identity";
    case TransformClass::Elliptic: return "elliptic";
    case TransformClass::Parabolic: return "parabolic";
    case TransformClass::Hyperbolic: return "hyperbolic";
    case TransformClass::Loxodromic: return "loxodromic";
    }
    return "unknown";
}

/// z -> (az + b) / (cz + d), stored as the row-major matrix [[a, b], [c, d]].
///
/// Matrices are only meaningful up to a nonzero scalar; every comparison in
/// this header is projective.
struct MoebiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static MoebiusMap identity() { return {}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    /// True for the SU(1,1) shape d = conj(a), c = conj(b), up to a unit scalar
    /// (a map with negative determinant is a disk isometry times i).
    bool is_disk_isometry(double tol = class_tolerance) const;

    std::array<Complex, 4> entries() const { return {a, b, c, d}; }

    MoebiusMap operator*(const MoebiusMap& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    MoebiusMap operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
    MoebiusMap operator/(Complex s) const { return {a / s, b / s, c / s, d / s}; }
};

inline void require_valid(const MoebiusMap& m) {
    const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    if (scale == 0.0 || std::abs(m.det()) < det_tolerance * std::max(1.0, scale * scale))
        throw Error(ErrorCode::DegenerateMap, "determinant is zero");
}

inline ExtendedComplex apply(const MoebiusMap& m, const ExtendedComplex& z) {
    require_valid(m);
    if (z.is_infinite()) {
        if (m.c == Complex{0.0}) return ExtendedComplex::infinity();
        return m.a / m.c;
    }
    const Complex den = m.c * z.value() + m.d;
    if (den == Complex{0.0}) return ExtendedComplex::infinity();
    return (m.a * z.value() + m.b) / den;
}

inline MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) { return m1 * m2; }

inline MoebiusMap inverse(const MoebiusMap& m) {
    require_valid(m);
    const Complex det = m.det();
    return MoebiusMap{m.d, -m.b, -m.c, m.a} / det;
}

/// Divides by the principal square root of the determinant, giving det = 1.
inline MoebiusMap normalize(const MoebiusMap& m) {
    require_valid(m);
    return m / std::sqrt(m.det());
}

inline double max_entry_distance(const MoebiusMap& x, const MoebiusMap& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                     std::abs(x.d - y.d)});
}

/// min over s in {1, -1, i, -i} of max|normalize(x) - s * normalize(y)|.
inline double projective_distance(const MoebiusMap& x, const MoebiusMap& y) {
    const MoebiusMap nx = normalize(x);
    const MoebiusMap ny = normalize(y);
    double best = max_entry_distance(nx, ny);
    for (Complex s : {Complex{-1.0}, Complex{0.0, 1.0}, Complex{0.0, -1.0}})
        best = std::min(best, max_entry_distance(nx, ny * s));
    return best;
}

inline bool projectively_equal(const MoebiusMap& x, const MoebiusMap& y, double tol) {
    return projective_distance(x, y) < tol;
}

inline double identity_residual(const MoebiusMap& m) {
    return projective_distance(m, MoebiusMap::identity());
}

inline bool MoebiusMap::is_disk_isometry(double tol) const {
    // Rotate by the unit scalar that makes the determinant positive real first.
    const Complex det = this->det();
    if (std::abs(det) == 0.0) return false;
    const Complex phase = std::sqrt(std::conj(det) / std::abs(det));
    const MoebiusMap m = *this * phase;
    return std::abs(m.d - std::conj(m.a)) <= tol * std::max(1.0, std::abs(m.a)) &&
           std::abs(m.c - std::conj(m.b)) <= tol * std::max(1.0, std::abs(m.b));
}

/// Squared trace of the det-normalized map, tr(m)^2 / det(m).
inline Complex trace_squared(const MoebiusMap& m) {
    require_valid(m);
    const Complex t = m.trace();
    return t * t / m.det();
}

inline TransformClass classify(const MoebiusMap& m) {
    require_valid(m);
    if (identity_residual(m) < class_tolerance) return TransformClass::Identity;
    const Complex t2 = trace_squared(m);
    if (std::abs(t2.imag()) >= class_tolerance) return TransformClass::Loxodromic;
    if (std::abs(t2.real() - 4.0) < class_tolerance) return TransformClass::Parabolic;
    return t2.real() < 4.0 ? TransformClass::Elliptic : TransformClass::Hyperbolic;
}

/// Solutions of c z^2 + (d - a) z - b = 0 on the extended plane.
inline std::vector<ExtendedComplex> fixed_points(const MoebiusMap& m) {
    const TransformClass cls = classify(m);
    if (cls == TransformClass::Identity)
        throw Error(ErrorCode::AllPointsFixed, "map is projectively the identity");
    const MoebiusMap n = normalize(m);
    const double scale = std::max({std::abs(n.a), std::abs(n.b), std::abs(n.d), 1.0});
    if (std::abs(n.c) <= det_tolerance * scale) {
        // Linear case: infinity is fixed, plus b / (a - d) unless parabolic.
        if (cls == TransformClass::Parabolic) return {ExtendedComplex::infinity()};
        return {n.b / (n.a - n.d), ExtendedComplex::infinity()};
    }
    const Complex disc = std::sqrt((n.d - n.a) * (n.d - n.a) + 4.0 * n.b * n.c);
    if (cls == TransformClass::Parabolic) return {(n.a - n.d) / (2.0 * n.c)};
    return {(n.a - n.d + disc) / (2.0 * n.c), (n.a - n.d - disc) / (2.0 * n.c)};
}

struct WordLetter {
    std::size_t generator; // 1-based
    int exponent;          // nonzero
};

using GroupWord = std::vector<WordLetter>;

inline MoebiusMap power(const MoebiusMap& m, int exponent) {
    MoebiusMap base = exponent < 0 ? inverse(m) : m;
    MoebiusMap out = MoebiusMap::identity();
    for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
    return out;
}

/// Left-to-right product of generators raised to their exponents.
inline MoebiusMap evaluate_word(std::span<const MoebiusMap> generators, const GroupWord& word) {
    MoebiusMap out = MoebiusMap::identity();
    for (const WordLetter& letter : word) {
        if (letter.generator < 1 || letter.generator > generators.size())
            throw Error(ErrorCode::IndexOutOfRange,
                        "generator index " + std::to_string(letter.generator) + " out of 1.." +
                            std::to_string(generators.size()));
        if (letter.exponent == 0)
            throw Error(ErrorCode::IndexOutOfRange, "zero exponent in group word");
        out = out * power(generators[letter.generator - 1], letter.exponent);
    }
    return out;
}

/// Cayley transform z -> (z - i) / (z + i), upper half-plane onto the disk.
inline MoebiusMap cayley() { return {Complex{1.0}, Complex{0.0, -1.0}, Complex{1.0}, Complex{0.0, 1.0}}; }

/// Carries a half-plane map to the disk model: C m C^-1.
inline MoebiusMap half_plane_to_disk(const MoebiusMap& m) { return cayley() * m * inverse(cayley()); }

inline MoebiusMap disk_to_half_plane(const MoebiusMap& m) { return inverse(cayley()) * m * cayley(); }

} // namespace fuchs
