#pragma once

#include <utility>
#include <vector>

#include "atiyah/geometry.hpp"

namespace atiyah {

/// Point of C^2 lifting a vector of R^3 under the Hopf map.
struct Spinor {
    Complex u{0.0, 0.0};
    Complex v{0.0, 0.0};
};

/// h(u, v) = ((|u|^2 - |v|^2) / 2, u * conj(v)).
std::pair<double, Complex> hopf(const Spinor& s);

/// Which branch lift_pair uses. Auto keys on sign(a): the selected chart
/// always keeps its dominant component >= sqrt(rho), so neither branch ever
/// divides by a vanishing d or e.
enum class Chart {
    Auto,
    PlusAxis,   // (sqrt d, conj(z)/sqrt d); valid iff d > 0
    MinusAxis,  // (z/sqrt e, sqrt e);       valid iff e > 0
};

/// A lift of the pair vector (a, z). Throws DegenerateError when rho = 0 or
/// when a forced chart is singular for this pair.
Spinor lift_pair(const PairFrame& frame, Chart chart = Chart::Auto);

/// The lift (-conj(v), conj(u)) of the reversed vector. Applying it twice
/// yields -s.
Spinor paired_lift(const Spinor& s);

/// Coefficients of prod_m (u_m X + v_m Y) in the basis X^{n-1-i} Y^i,
/// accumulated by a fixed left-to-right fold.
std::vector<Complex> symmetric_column(std::span<const Spinor> spinors);

struct AtiyahResult {
    Complex at{0.0, 0.0};
    double normalizer = 0.0;        // prod_{j<k} 2 rho_jk
    Complex d_normalized{0.0, 0.0}; // at / normalizer
    bool planar = false;
};

struct LiftOptions {
    Chart chart = Chart::Auto;
    /// Optional per-pair phase angles theta for the base lifts, indexed
    /// lexicographically over pairs j < k. The paired lift transforms by
    /// e^{-i theta} automatically; the determinant is invariant.
    std::vector<double> pair_phases;
};

/// Index of pair (j, k), j < k, in lexicographic order.
std::size_t pair_index(std::size_t j, std::size_t k, std::size_t n);

/// The determinant of the n x n matrix whose k-th column is the symmetric
/// tensor product of the lifts of the vectors from point k to every other
/// point. Base lifts live on pairs j < k; reversed pairs always go through
/// paired_lift. Supports 2 <= n <= 8.
AtiyahResult atiyah_determinant(const Configuration& config, const LiftOptions& options = {});

/// Determinant by partially pivoted elimination; m is row-major n x n and
/// gets clobbered.
Complex determinant_inplace(std::vector<Complex>& m, std::size_t n);

struct C1Result {
    bool pass = false;
    double margin = 0.0;  // |At| / normalizer
};

/// Nonvanishing beyond the conditioning floor 1e-12 x normalizer.
C1Result check_c1(const Configuration& config);

struct C2Result {
    bool pass = false;
    Complex d{0.0, 0.0};
    double re_d = 0.0;
    double abs_d = 0.0;
    bool planar = false;
};

/// Lower bound by the distance product: planar configurations test
/// Re(D) >= 1 - tol, spatial ones |D| >= 1 - tol; both readings reported.
C2Result check_c2(const Configuration& config, double tol = 1e-10);

struct C3Result {
    bool pass = false;
    Complex lhs{0.0, 0.0};  // At^{n-2}
    Complex rhs{0.0, 0.0};  // product of the n facial determinants
    double margin = 0.0;    // (lhs - rhs) / max(|lhs|, |rhs|)
};

/// Facial-determinant product inequality; real parts compared for planar
/// configurations, moduli for spatial ones.
C3Result check_c3(const Configuration& config, double tol = 1e-9);

}  // namespace atiyah
