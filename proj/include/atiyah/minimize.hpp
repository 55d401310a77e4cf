#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "atiyah/geometry.hpp"

namespace atiyah {

enum class Objective {
    NormalizedD,  // D = At / prod 2 rho
    AtAng,        // At / P, the dimensionless angular part
};

struct SimplexParams {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

/// Search space: convex quads modulo similarity, parameterized by
/// (Re z3, Im z3, Re z4, Im z4) with z1 = 0 and z2 = 1 fixed. Proposals
/// whose ordered vertices are not strictly convex CCW score +infinity.
struct MinimizeSpec {
    Objective objective = Objective::NormalizedD;
    std::array<Complex, 4> start{};    // must be a feasible convex quad
    std::uint64_t max_iterations = 2000;
    double tolerance = 1e-10;          // value-spread convergence threshold
    SimplexParams simplex;
};

struct TracePoint {
    std::uint64_t iteration = 0;
    double best = 0.0;
};

struct MinimizeResult {
    std::array<Complex, 4> best_quad{};  // in the z1 = 0, z2 = 1 frame
    double best_value = 0.0;
    std::vector<TracePoint> trace;       // best per iteration, non-increasing
    std::uint64_t evaluations = 0;
    bool converged = false;
};

/// Nelder-Mead descent of the chosen objective over the similarity-reduced
/// convex-quad space. Throws InvalidSpecError when the start is infeasible.
MinimizeResult minimize_d(const MinimizeSpec& spec);

}  // namespace atiyah
