#pragma once

// Test-only helpers: an independent determinant oracle (Leibniz permutation
// sum), seeded generators, and tolerance predicates. Nothing here touches the
// library's elimination path.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "atiyah/geometry.hpp"

namespace oracle {

using atiyah::Complex;

inline double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline double rel_err(Complex a, Complex b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

/// Determinant by the explicit permutation sum; row-major n x n, n small.
inline Complex leibniz_det(const std::vector<Complex>& m, int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Complex sum(0.0, 0.0);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (sigma[i] > sigma[j]) sign = -sign;
            }
        }
        Complex term(static_cast<double>(sign), 0.0);
        for (int c = 0; c < n; ++c) term *= m[sigma[c] * n + c];
        sum += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

/// Four points in strictly convex CCW position, sorted around the centroid.
inline std::array<Complex, 4> random_convex_quad(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    for (;;) {
        std::array<Complex, 4> z;
        for (Complex& v : z) v = Complex(u(rng), u(rng));
        Complex c(0.0, 0.0);
        for (const Complex& v : z) c += v;
        c /= 4.0;
        std::sort(z.begin(), z.end(), [&](Complex a, Complex b) {
            return std::arg(a - c) < std::arg(b - c);
        });
        double diam = 0.0;
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) diam = std::max(diam, std::abs(z[k] - z[j]));
        }
        bool ok = true;
        for (int j = 0; j < 4; ++j) {
            const Complex v1 = z[(j + 1) % 4] - z[j];
            const Complex v2 = z[(j + 2) % 4] - z[(j + 1) % 4];
            if ((std::conj(v1) * v2).imag() <= 1e-6 * diam * diam) ok = false;
        }
        if (ok) return z;
    }
}

inline atiyah::Configuration random_spatial_config(std::mt19937_64& rng, int n,
                                                   double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    for (;;) {
        std::vector<atiyah::Point> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.push_back({u(rng), Complex(u(rng), u(rng))});
        try {
            return atiyah::Configuration(std::move(pts));
        } catch (const atiyah::DegenerateError&) {
        }
    }
}

inline atiyah::Configuration planar_config(const std::array<Complex, 4>& z) {
    std::vector<atiyah::Point> pts;
    pts.reserve(4);
    for (const Complex& v : z) pts.push_back({0.0, v});
    return atiyah::Configuration(std::move(pts));
}

}  // namespace oracle
