#pragma once

#include <array>

#include "atiyah/geometry.hpp"

namespace atiyah {

/// The factorization At = P * At_ang of the planar four-point determinant:
/// P = r12 r13 r14 r23 r24 r34 carries all the length units, At_ang is the
/// dimensionless angular part. C2 at n = 4 is equivalent to At_ang >= 64.
struct StandardForm {
    double p_scalar = 0.0;
    double at_ang = 0.0;
};

/// The three angle aggregates of the angular expansion
///   At_ang = 24 + 8 S1 + 2 S2 + E.
struct AngularTerms {
    double s1 = 0.0;
    double s2 = 0.0;
    double e_dimensionless = 0.0;
    /// sum_j sin(alpha_{j+1}/2) sin(gamma_{j+2}/2) sin(beta_{j+3}/2);
    /// S1 = 4 + 4 * sin_half_sum.
    double sin_half_sum = 0.0;
};

/// Area-based edge terms, one per vertex pair (length^6). The aggregate E is
/// carried by the signed combination e12 + e23 + e34 + e14 - e13 - e24
/// (quadrilateral sides plus, diagonals minus).
struct EdgeTerms {
    double e12 = 0.0;
    double e23 = 0.0;
    double e34 = 0.0;
    double e14 = 0.0;
    double e13 = 0.0;
    double e24 = 0.0;
    double a123 = 0.0;
    double a124 = 0.0;
    double a134 = 0.0;
    double a234 = 0.0;

    double signed_sum() const { return e12 + e23 + e34 + e14 - e13 - e24; }
};

/// S1 = sum_j (cos alpha_j + cos beta_j + cos gamma_j); at least 4 on convex
/// quadrilaterals.
double s1(const QuadAngles& angles);

/// S2 = sum_j (cos alpha_j + cos beta_j + cos gamma_j)
///            (cos alpha_{j+1} + cos gamma_{j+2} + cos beta_{j+3}),
/// vertex against opposite triangle, indices mod 4.
double s2(const QuadAngles& angles);

double sin_half_sum(const QuadAngles& angles);

EdgeTerms edge_terms(const PlanarQuad& quad);

struct QuadDecomposition {
    StandardForm form;
    AngularTerms angular;
    EdgeTerms edges;
    double at = 0.0;
};

/// Assembles the full decomposition:
///   at = P * (24 + 8 S1 + 2 S2) + 8 * (e12 + e23 + e34 + e14 - e13 - e24),
/// with e_dimensionless = 8 * signed sum / P.
QuadDecomposition decomposed_at(const PlanarQuad& quad);

struct Theorem1Report {
    double at_direct = 0.0;      // determinant engine on the four vertices
    double at_decomposed = 0.0;  // angular route above
    double rel_error = 0.0;      // |direct - decomposed| / max(|direct|, P)
    bool pass = false;
};

Theorem1Report verify_theorem1(const PlanarQuad& quad, double tol);

/// The 24 signed permutation terms of the angular determinant (including the
/// direction prefactor), ordered by lexicographic one-line notation of the
/// permutations of {0,1,2,3}. Their sum is At_ang; the term of a permutation
/// and the term of its reversed one-line notation are complex conjugates.
std::array<Complex, 24> permutation_expansion(const PlanarQuad& quad);

}  // namespace atiyah
