#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "atiyah/errors.hpp"

namespace atiyah {

using Complex = std::complex<double>;

/// Relative floor below which two points count as coincident.
inline constexpr double kDistinctnessRel = 1e-9;
/// Vertex cross products must exceed this times diameter^2 for a quad to
/// count as strictly convex.
inline constexpr double kConvexityRel = 1e-9;
/// Absolute floor for quadrilateral angles (radians).
inline constexpr double kAngleTolerance = 1e-12;

/// A point of R^3 in the R x C presentation: height a along the preferred
/// axis, planar coordinate z.
struct Point {
    double a = 0.0;
    Complex z{0.0, 0.0};
};

/// An ordered list of n >= 2 pairwise-distinct points. Immutable after
/// construction; construction validates finiteness and distinctness
/// (min pairwise distance >= 1e-9 x diameter).
class Configuration {
public:
    explicit Configuration(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    double diameter() const { return diameter_; }
    /// True when all points lie in a common plane (within 1e-9 x diameter).
    bool planar() const { return planar_; }

    /// The face configuration with point j removed (n must be >= 3).
    Configuration without(std::size_t j) const;

private:
    std::vector<Point> points_;
    double diameter_ = 0.0;
    bool planar_ = true;
};

/// All per-pair scalars for the ordered pair (j, k):
///   a = a_k - a_j, z = z_k - z_j, rho = |P_j P_k|,
///   d = a + rho, e = rho - a, u = z / |z| (when z != 0).
struct PairFrame {
    double a = 0.0;
    Complex z{0.0, 0.0};
    double rho = 0.0;
    double d = 0.0;
    double e = 0.0;
    bool has_direction = false;
    Complex u{0.0, 0.0};
};

PairFrame pair_frame(const Configuration& config, std::size_t j, std::size_t k);

/// A strictly convex quadrilateral with vertices in counterclockwise order.
/// Side lengths carry the names used throughout the decomposition:
///   r23 = a, r13 = b, r12 = c, r14 = d, r24 = e, r34 = f.
struct PlanarQuad {
    std::array<Complex, 4> z{};
    double side_a = 0.0;  // r23
    double side_b = 0.0;  // r13
    double side_c = 0.0;  // r12
    double side_d = 0.0;  // r14
    double side_e = 0.0;  // r24
    double side_f = 0.0;  // r34
    double diameter = 0.0;

    double distance(std::size_t j, std::size_t k) const { return std::abs(z[k] - z[j]); }
};

/// Reorders four planar points counterclockwise around their centroid,
/// anchored at the first input point, and validates strict convexity.
/// Throws NotConvexError (with the offending input index) for collinear
/// triples or reflex vertices; idempotent on valid input.
PlanarQuad canonicalize_quad(const std::array<Complex, 4>& points);

/// True when the four points, in the order given, form a strictly convex
/// counterclockwise quadrilateral.
bool is_ccw_convex(const std::array<Complex, 4>& z);

/// The twelve angles of a convex quadrilateral: at vertex z_j, alpha_j spans
/// ray z_j->z_{j+1} to the diagonal z_j->z_{j+2}, beta_j spans the diagonal
/// to ray z_j->z_{j-1}, and gamma_j = alpha_j + beta_j (indices mod 4).
struct QuadAngles {
    std::array<double, 4> alpha{};
    std::array<double, 4> beta{};
    std::array<double, 4> gamma{};
};

/// Angles are computed as principal arguments of direction ratios.
/// Throws DegenerateError if any angle falls below kAngleTolerance.
QuadAngles quad_angles(const PlanarQuad& quad);

/// |triangle p q r|; zero for collinear arguments.
double triangle_area(Complex p, Complex q, Complex r);

struct Translation {
    double da = 0.0;
    Complex dz{0.0, 0.0};
};

/// Orthogonal action on R^3, row-major over coordinates (a, Re z, Im z).
struct Rotation {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

/// Reflection through the plane a = 0.
struct Reflection {};

struct UniformScale {
    double lambda = 1.0;
};

using Motion = std::variant<Translation, Rotation, Reflection, UniformScale>;

/// Pointwise image of the configuration. Throws InvalidSpecError for a
/// non-positive scale factor.
Configuration apply_motion(const Configuration& config, const Motion& motion);

/// Rotation about the given axis (need not be normalized) by angle radians.
Rotation axis_angle_rotation(double axis_a, double axis_x, double axis_y, double angle);

/// Rotation from a (not necessarily normalized) quaternion.
Rotation quaternion_rotation(double w, double x, double y, double z);

}  // namespace atiyah
