#pragma once

#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "fuchs/moebius.hpp"

namespace fuchs::testing {

inline constexpr unsigned seed = 20240917u;
inline constexpr int trials = 200;

inline Complex random_complex(std::mt19937& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

inline MoebiusMap random_map(std::mt19937& rng) {
    for (;;) {
        MoebiusMap m{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
        if (std::abs(m.det()) > 0.1) return m;
    }
}

/// Random SU(1,1) map: d = conj(a), c = conj(b), |a| > |b|.
inline MoebiusMap random_disk_isometry(std::mt19937& rng) {
    const Complex b = random_complex(rng, 1.0);
    std::uniform_real_distribution<double> extra(0.1, 1.5), phase(0.0, 2.0 * pi);
    const Complex a = std::polar(std::abs(b) + extra(rng), phase(rng));
    return {a, b, std::conj(b), std::conj(a)};
}

inline Complex random_disk_point(std::mt19937& rng, double max_radius = 0.95) {
    std::uniform_real_distribution<double> r(0.0, max_radius), t(0.0, 2.0 * pi);
    return std::polar(r(rng), t(rng));
}

} // namespace fuchs::testing

#define EXPECT_COMPLEX_NEAR(actual, expected, tol)                                                 \
    do {                                                                                           \
        const ::fuchs::Complex a_ = (actual);                                                      \
        const ::fuchs::Complex e_ = (expected);                                                    \
        EXPECT_NEAR(a_.real(), e_.real(), tol);                                                    \
        EXPECT_NEAR(a_.imag(), e_.imag(), tol);                                                    \
    } while (0)

#define EXPECT_ERROR_CODE(stmt, expected_code)                                                     \
    do {                                                                                           \
        try {                                                                                      \
            stmt;                                                                                  \
            ADD_FAILURE() << "expected " << ::fuchs::to_string(expected_code);                     \
        } catch (const ::fuchs::Error& e_) {                                                       \
            EXPECT_EQ(e_.code(), expected_code) << e_.what();                                      \
        }                                                                                          \
    } while (0)
