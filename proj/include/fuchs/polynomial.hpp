#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace fuchs {

inline constexpr double coefficient_prune = 1e-12;
inline constexpr double root_match_tolerance = 1e-9;
inline constexpr double common_root_tolerance = 1e-4;

/// Complex polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Complex> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Complex v) { return Poly{v}; }
    static Poly monomial(std::size_t degree, Complex v = 1.0) {
        std::vector<Complex> c(degree + 1, Complex{0.0});
        c[degree] = v;
        return Poly(std::move(c));
    }
    /// z - root
    static Poly linear(Complex root) { return Poly{-root, Complex{1.0}}; }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Complex{0.0}; }
    Complex leading() const { return c_.empty() ? Complex{0.0} : c_.back(); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const Complex& x : c_) m = std::max(m, std::abs(x));
        return m;
    }

    Complex operator()(Complex z) const {
        Complex acc{0.0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Complex> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
        return Poly(std::move(d));
    }

    /// Coefficients in powers of (z - z0).
    Poly taylor_shift(Complex z0) const {
        std::vector<Complex> c = c_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) c[k - 1] += z0 * c[k];
        return Poly(std::move(c));
    }

    /// Synthetic division by (z - root); the remainder is dropped.
    Poly deflate(Complex root) const {
        if (c_.size() <= 1) return {};
        std::vector<Complex> q(c_.size() - 1);
        Complex carry{0.0};
        for (std::size_t k = c_.size() - 1; k > 0; --k) {
            carry = c_[k] + carry * root;
            q[k - 1] = carry;
        }
        return Poly(std::move(q));
    }

    /// z^n p(1/z) with n = degree().
    Poly reversed() const {
        std::vector<Complex> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

    /// Multiplicity of z0 as a root: index of the first Taylor coefficient at
    /// z0 that is not negligible relative to the largest one.
    int vanishing_order(Complex z0, double rel_tol = root_match_tolerance) const {
        if (is_zero()) return -1;
        const Poly shifted = taylor_shift(z0);
        const double scale = shifted.max_abs_coeff();
        for (std::size_t k = 0; k < shifted.c_.size(); ++k)
            if (std::abs(shifted.c_[k]) > rel_tol * scale) return static_cast<int>(k);
        return degree();
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        std::vector<Complex> c(std::max(x.c_.size(), y.c_.size()), Complex{0.0});
        for (std::size_t k = 0; k < x.c_.size(); ++k) c[k] += x.c_[k];
        for (std::size_t k = 0; k < y.c_.size(); ++k) c[k] += y.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& x) { return x * Complex{-1.0}; }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<Complex> c(x.c_.size() + y.c_.size() - 1, Complex{0.0});
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& x, Complex s) {
        std::vector<Complex> c = x.c_;
        for (Complex& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend Poly operator*(Complex s, const Poly& x) { return x * s; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    // Drops leading coefficients within coefficient_prune of zero, or at the
    // rounding level of the largest coefficient (cancellation residue).
    void trim() {
        const double noise = 16.0 * std::numeric_limits<double>::epsilon() * max_abs_coeff();
        while (!c_.empty() && std::abs(c_.back()) <= std::max(coefficient_prune, noise)) c_.pop_back();
    }

    std::vector<Complex> c_;
};

inline Poly pow(const Poly& p, unsigned k) {
    Poly out = Poly::constant(1.0);
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

/// Monic polynomial with the given roots.
inline Poly expand_poly(std::span<const Complex> roots) {
    Poly out = Poly::constant(1.0);
    for (const Complex& r : roots) out = out * Poly::linear(r);
    return out;
}

namespace detail {

// One root by Laguerre's method from the starting point x.
inline Complex laguerre(const Poly& p, Complex x, bool& converged) {
    constexpr int max_iter = 400;
    const double n = p.degree();
    const Poly d1 = p.derivative();
    const Poly d2 = d1.derivative();
    // Cauchy bound: every root lies within this radius, so no useful step is longer than twice it.
    double radius = 0.0;
    for (int k = 0; k < p.degree(); ++k) radius = std::max(radius, std::abs(p.coeff(k) / p.leading()));
    const double max_step = 2.0 * (1.0 + radius);
    converged = false;
    for (int iter = 1; iter <= max_iter; ++iter) {
        const Complex f = p(x);
        if (!std::isfinite(std::abs(f))) return x;
        // Stop once the residual is at the rounding level of Horner's rule.
        double bound = 0.0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            bound = bound * std::abs(x) + std::abs(*it);
        if (std::abs(f) <= 4.0 * std::numeric_limits<double>::epsilon() * bound) {
            converged = true;
            return x;
        }
        const Complex g = d1(x) / f;
        const Complex h = g * g - d2(x) / f;
        const Complex sq = std::sqrt((n - 1.0) * (n * h - g * g));
        const Complex gp = g + sq;
        const Complex gm = g - sq;
        const Complex den = std::abs(gp) >= std::abs(gm) ? gp : gm;
        // Fractional steps every tenth iteration break limit cycles.
        Complex step = std::abs(den) > 0.0 ? n / den : std::polar(1.0 + std::abs(x), double(iter));
        if (std::abs(step) > max_step) step *= max_step / std::abs(step);
        if (iter % 10 == 0) step *= 0.5 + 0.05 * (iter / 10 % 10);
        const Complex next = x - step;
        if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(next))) {
            converged = true;
            return next;
        }
        x = next;
    }
    return x;
}

} // namespace detail

/// All complex roots, with multiplicity, by Laguerre iteration plus deflation
/// and a polishing pass on the original polynomial.
inline std::vector<Complex> roots(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::RootFindingFailure, "zero polynomial has no isolated roots");
    std::vector<Complex> out;
    Poly work = p;
    while (work.degree() > 1) {
        bool ok = false;
        Complex r = detail::laguerre(work, Complex{0.1, 0.2}, ok);
        if (!ok) r = detail::laguerre(work, Complex{-0.7, 0.9}, ok);
        if (!ok) throw Error(ErrorCode::RootFindingFailure, "Laguerre iteration did not converge");
        bool polished = false;
        const Complex refined = detail::laguerre(p, r, polished);
        // Polishing can jump to another root near a cluster; keep it only if close.
        if (polished && std::abs(refined - r) < 1e-6 * std::max(1.0, std::abs(r))) r = refined;
        out.push_back(r);
        work = work.deflate(r);
    }
    if (work.degree() == 1) out.push_back(-work.coeff(0) / work.coeff(1));
    return out;
}

struct RootCluster {
    Complex center;
    int multiplicity = 0;
};

/// Groups numerically scattered roots of a polynomial into distinct points.
inline std::vector<RootCluster> cluster_roots(std::span<const Complex> rs, double tol) {
    std::vector<RootCluster> clusters;
    std::vector<bool> used(rs.size(), false);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (used[i]) continue;
        Complex sum = rs[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            if (!used[j] && std::abs(rs[j] - rs[i]) <= tol * std::max(1.0, std::abs(rs[i]))) {
                used[j] = true;
                sum += rs[j];
                ++count;
            }
        }
        clusters.push_back({sum / static_cast<double>(count), count});
    }
    return clusters;
}

/// Ratio of two polynomials, kept with common roots cancelled.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly::constant(1.0)) {}
    RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1.0)) {}
    RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorCode::DegenerateMap, "zero denominator");
        reduce();
    }
    static RationalFn constant(Complex v) { return RationalFn(Poly::constant(v)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Complex operator()(Complex z) const { return num_(z) / den_(z); }

    /// Order of the pole at z0; zero or negative means analytic there.
    int pole_order(Complex z0) const {
        if (num_.is_zero()) return 0;
        return den_.vanishing_order(z0) - num_.vanishing_order(z0);
    }

    /// Order of the pole at the origin, read straight off the coefficients.
    int pole_order_at_zero() const { return pole_order(Complex{0.0}); }

    /// r(1/w) as a rational function of w.
    RationalFn substitute_reciprocal() const {
        if (num_.is_zero()) return {};
        const int dn = num_.degree();
        const int dd = den_.degree();
        Poly num = num_.reversed();
        Poly den = den_.reversed();
        if (dd > dn) num = num * Poly::monomial(static_cast<std::size_t>(dd - dn));
        if (dn > dd) den = den * Poly::monomial(static_cast<std::size_t>(dn - dd));
        return {num, den};
    }

    friend RationalFn operator+(const RationalFn& x, const RationalFn& y) {
        if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
        return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
    }
    friend RationalFn operator-(const RationalFn& x) { return {-x.num_, x.den_}; }
    friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }
    friend RationalFn operator*(const RationalFn& x, const RationalFn& y) {
        return {x.num_ * y.num_, x.den_ * y.den_};
    }
    friend RationalFn operator*(const RationalFn& x, Complex s) { return {x.num_ * s, x.den_}; }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::constant(1.0);
            return;
        }
        if (den_.degree() == 0) return;
        // Cancel exact factors of z first so the common case stays exact.
        while (num_.degree() > 0 && den_.degree() > 0 && num_.coeff(0) == Complex{0.0} &&
               den_.coeff(0) == Complex{0.0}) {
            num_ = num_.deflate(0.0);
            den_ = den_.deflate(0.0);
        }
        if (num_.degree() < 1 || den_.degree() < 1) return normalize_leading();
        // Leftover powers of z sit on one side only. Set them aside so that
        // inexact deflations below cannot smear noise into the zero coefficients.
        std::size_t num_zeros = 0, den_zeros = 0;
        while (num_.degree() > 0 && num_.coeff(0) == Complex{0.0}) {
            num_ = num_.deflate(0.0);
            ++num_zeros;
        }
        while (den_.degree() > 0 && den_.coeff(0) == Complex{0.0}) {
            den_ = den_.deflate(0.0);
            ++den_zeros;
        }
        cancel_common_roots();
        if (num_zeros > 0) num_ = num_ * Poly::monomial(num_zeros);
        if (den_zeros > 0) den_ = den_ * Poly::monomial(den_zeros);
        normalize_leading();
    }

    void cancel_common_roots() {
        if (num_.degree() < 1 || den_.degree() < 1) return;
        // A root of multiplicity m comes back from Laguerre split by roughly
        // eps^(1/m), so pairs are matched loosely. Each side is then deflated at
        // its own computed roots, which keeps the deflation error at rounding level.
        const std::vector<Complex> num_roots = roots(num_);
        const std::vector<Complex> den_roots = roots(den_);
        std::vector<bool> used(num_roots.size(), false);
        std::vector<Complex> num_common, den_common;
        for (const Complex& d : den_roots) {
            std::size_t best = num_roots.size();
            double best_gap = common_root_tolerance * std::max(1.0, std::abs(d));
            for (std::size_t k = 0; k < num_roots.size(); ++k) {
                const double gap = std::abs(num_roots[k] - d);
                if (!used[k] && gap <= best_gap) {
                    best = k;
                    best_gap = gap;
                }
            }
            if (best == num_roots.size()) continue;
            used[best] = true;
            num_common.push_back(num_roots[best]);
            den_common.push_back(d);
        }
        for (std::size_t k = 0; k < den_common.size(); ++k) {
            if (num_.degree() < 1 || den_.degree() < 1) break;
            num_ = num_.deflate(num_common[k]);
            den_ = den_.deflate(den_common[k]);
        }
    }

    // Monic denominator, so equal functions compare equal.
    void normalize_leading() {
        const Complex lead = den_.leading();
        if (lead != Complex{1.0}) {
            num_ = num_ * (1.0 / lead);
            den_ = den_ * (1.0 / lead);
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace fuchs
