#pragma once

#include <cmath>
#include <cstdlib>

#include "complex.hpp"
#include "error.hpp"
#include "moebius.hpp"

namespace fuchs {

inline constexpr double angle_tolerance = 1e-9;

enum class Model { Disk, HalfPlane };

/// A point of the Poincaré disk (|z| < 1) or the upper half-plane (Im z > 0).
class ModelPoint {
public:
    ModelPoint(Model model, Complex z) : model_(model), z_(z) {
        if (!valid()) throw Error(ErrorCode::InvalidPoint, "point outside the model");
    }

    static ModelPoint disk(Complex z) { return {Model::Disk, z}; }
    static ModelPoint half_plane(Complex z) { return {Model::HalfPlane, z}; }

    Model model() const { return model_; }
    Complex z() const { return z_; }

private:
    bool valid() const {
        if (!std::isfinite(z_.real()) || !std::isfinite(z_.imag())) return false;
        return model_ == Model::Disk ? std::norm(z_) < 1.0 : z_.imag() > 0.0;
    }

    Model model_;
    Complex z_;
};

inline ModelPoint to_disk(const ModelPoint& p) {
    if (p.model() == Model::Disk) return p;
    return ModelPoint::disk(fuchs::apply(cayley(), p.z()).value());
}

inline ModelPoint to_half_plane(const ModelPoint& p) {
    if (p.model() == Model::HalfPlane) return p;
    return ModelPoint::half_plane(fuchs::apply(inverse(cayley()), p.z()).value());
}

inline void require_same_model(const ModelPoint& x, const ModelPoint& y) {
    if (x.model() != y.model()) throw Error(ErrorCode::ModelMismatch, "points live in different models");
}

inline double distance(const ModelPoint& x, const ModelPoint& y) {
    require_same_model(x, y);
    const double gap = std::norm(x.z() - y.z());
    if (x.model() == Model::Disk)
        return std::acosh(1.0 + 2.0 * gap / ((1.0 - std::norm(x.z())) * (1.0 - std::norm(y.z()))));
    return std::acosh(1.0 + gap / (2.0 * x.z().imag() * y.z().imag()));
}

/// Disk isometry z -> (z + p) / (1 + conj(p) z), sending 0 to p.
inline MoebiusMap disk_translation(Complex p) { return {Complex{1.0}, p, std::conj(p), Complex{1.0}}; }

inline ModelPoint geodesic_midpoint(const ModelPoint& x, const ModelPoint& y) {
    require_same_model(x, y);
    if (x.z() == y.z()) throw Error(ErrorCode::CoincidentPoints, "midpoint of a single point");
    if (x.model() == Model::HalfPlane)
        return to_half_plane(geodesic_midpoint(to_disk(x), to_disk(y)));

    // Move x to the origin; the midpoint then lies on the ray towards y at
    // Euclidean radius tanh(d/4).
    const Complex moved = fuchs::apply(disk_translation(-x.z()), y.z()).value();
    const double half = distance(x, y) / 2.0;
    const Complex mid = std::polar(std::tanh(half / 2.0), std::arg(moved));
    return ModelPoint::disk(fuchs::apply(disk_translation(x.z()), mid).value());
}

/// Point of the disk geodesic with ideal endpoints u, v nearest the origin.
/// Antipodal endpoints span a diameter, whose nearest point is 0.
inline ModelPoint boundary_geodesic_apex(Complex u, Complex v) {
    if (std::abs(std::abs(u) - 1.0) > angle_tolerance || std::abs(std::abs(v) - 1.0) > angle_tolerance)
        throw Error(ErrorCode::InvalidPoint, "geodesic endpoints must lie on the unit circle");
    const double delta = std::abs(std::arg(v / u));
    if (delta < angle_tolerance) throw Error(ErrorCode::CoincidentEndpoints, "endpoints coincide");
    if (std::abs(delta - pi) < angle_tolerance) return ModelPoint::disk(0.0);
    const double radius = 1.0 / std::cos(delta / 2.0) - std::tan(delta / 2.0);
    return ModelPoint::disk(std::polar(radius, std::arg(u + v)));
}

/// Order-two rotation about an interior disk point.
inline MoebiusMap half_turn(const ModelPoint& p) {
    if (p.model() != Model::Disk) throw Error(ErrorCode::InvalidPoint, "half_turn needs a disk point");
    const MoebiusMap flip{Complex{0.0, 1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0, -1.0}};
    return disk_translation(p.z()) * flip * inverse(disk_translation(p.z()));
}

struct AreaResult {
    double value = 0.0;
    bool euclidean_limit = false;
};

/// Gauss–Bonnet: pi minus the angle sum.
inline AreaResult triangle_area(double alpha, double beta, double theta) {
    if (alpha < 0.0 || beta < 0.0 || theta < 0.0)
        throw Error(ErrorCode::InvalidPoint, "negative interior angle");
    const double defect = pi - (alpha + beta + theta);
    if (std::abs(defect) <= angle_tolerance) return {0.0, true};
    if (defect < 0.0) throw Error(ErrorCode::AngleSumExceedsPi, "angle sum exceeds pi");
    return {defect, false};
}

/// Schläfli pair {p, q}: regular p-gons, q around each vertex.
struct Tessellation {
    int p = 3;
    int q = 3;

    friend bool operator==(const Tessellation&, const Tessellation&) = default;
};

inline long long euler_product(const Tessellation& t) {
    return static_cast<long long>(t.p - 2) * (t.q - 2);
}

inline bool tessellation_valid(const Tessellation& t) {
    return t.p >= 3 && t.q >= 3 && euler_product(t) > 4;
}

/// Area of the regular p-gon with interior angles 2pi/q.
inline AreaResult regular_polygon_area(const Tessellation& t) {
    if (t.p < 3 || t.q < 3) throw Error(ErrorCode::NotHyperbolic, "p and q must be at least 3");
    const long long prod = euler_product(t);
    if (prod < 4) throw Error(ErrorCode::NotHyperbolic, "(p-2)(q-2) < 4 is spherical");
    if (prod == 4) return {0.0, true};
    return {(t.p - 2) * pi - t.p * (2.0 * pi / t.q), false};
}

struct SurfaceTopology {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int chi = 0;
    int genus = 0;

    friend bool operator==(const SurfaceTopology&, const SurfaceTopology&) = default;
};

/// Topology of the surface glued from one fundamental p-gon whose vertex
/// cycles each collect q corners.
inline SurfaceTopology tessellation_topology(const Tessellation& t) {
    if (t.p % 2 != 0) throw Error(ErrorCode::OddSides, "sides pair up, so p must be even");
    if (t.q <= 0 || t.p % t.q != 0)
        throw Error(ErrorCode::NonIntegerVertexCycle, "q must divide p");
    SurfaceTopology s;
    s.vertices = t.p / t.q;
    s.edges = t.p / 2;
    s.faces = 1;
    s.chi = s.vertices - s.edges + s.faces;
    if (s.chi % 2 != 0)
        throw Error(ErrorCode::NonIntegerVertexCycle, "odd Euler characteristic, no orientable gluing");
    s.genus = (2 - s.chi) / 2;
    return s;
}

} // namespace fuchs
