#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

namespace fuchs {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// A point of the extended complex plane C ∪ {∞}.
class ExtendedComplex {
public:
    constexpr ExtendedComplex() = default;
    constexpr ExtendedComplex(Complex z) : z_(z) {}
    constexpr ExtendedComplex(double re, double im = 0.0) : z_(re, im) {}

    static constexpr ExtendedComplex infinity() {
        ExtendedComplex p;
        p.infinite_ = true;
        return p;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    // Only meaningful for finite points.
    constexpr Complex value() const { return z_; }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedComplex& p) {
        if (p.infinite_) return os << "inf";
        return os << p.z_;
    }

private:
    Complex z_{};
    bool infinite_ = false;
};

/// Chordal-style closeness: both infinite, or both finite and within tol.
inline bool near(const ExtendedComplex& x, const ExtendedComplex& y, double tol) {
    if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
    return std::abs(x.value() - y.value()) <= tol;
}

inline Complex unit(double angle) { return std::polar(1.0, angle); }

} // namespace fuchs
