#include "atiyah/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace atiyah {

namespace {

struct Vec3 {
    double a, x, y;
};

Vec3 to_vec(const Point& p) { return {p.a, p.z.real(), p.z.imag()}; }

Vec3 sub(const Vec3& u, const Vec3& v) { return {u.a - v.a, u.x - v.x, u.y - v.y}; }

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.x * v.y - u.y * v.x, u.y * v.a - u.a * v.y, u.a * v.x - u.x * v.a};
}

double dot(const Vec3& u, const Vec3& v) { return u.a * v.a + u.x * v.x + u.y * v.y; }

double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

double point_distance(const Point& p, const Point& q) {
    const double da = q.a - p.a;
    return std::sqrt(da * da + std::norm(q.z - p.z));
}

bool coplanar(std::span<const Point> pts, double diameter) {
    if (pts.size() <= 3) return true;
    const Vec3 base = to_vec(pts[0]);
    // Normal from the widest-spanning pair of edge vectors out of pts[0].
    Vec3 best_normal{0, 0, 0};
    double best = 0.0;
    std::vector<Vec3> edges;
    edges.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) edges.push_back(sub(to_vec(pts[i]), base));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Vec3 c = cross(edges[i], edges[j]);
            const double n = norm(c);
            if (n > best) {
                best = n;
                best_normal = c;
            }
        }
    }
    if (best == 0.0) return true;  // collinear
    const Vec3 n{best_normal.a / best, best_normal.x / best, best_normal.y / best};
    const double tol = kDistinctnessRel * diameter;
    for (const Vec3& e : edges) {
        if (std::abs(dot(e, n)) > tol) return false;
    }
    return true;
}

}  // namespace

Configuration::Configuration(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw InvalidSpecError("configuration needs at least 2 points");
    }
    for (const Point& p : points_) {
        if (!std::isfinite(p.a) || !std::isfinite(p.z.real()) || !std::isfinite(p.z.imag())) {
            throw InvalidSpecError("configuration has a non-finite coordinate");
        }
    }
    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points_.size(); ++j) {
        for (std::size_t k = j + 1; k < points_.size(); ++k) {
            const double d = point_distance(points_[j], points_[k]);
            diameter_ = std::max(diameter_, d);
            min_dist = std::min(min_dist, d);
        }
    }
    if (!(min_dist > kDistinctnessRel * diameter_)) {
        throw DegenerateError("configuration has (nearly) coincident points: min distance " +
                              std::to_string(min_dist) + " vs diameter " +
                              std::to_string(diameter_));
    }
    planar_ = coplanar(points_, diameter_);
}

Configuration Configuration::without(std::size_t j) const {
    std::vector<Point> rest;
    rest.reserve(points_.size() - 1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i != j) rest.push_back(points_[i]);
    }
    return Configuration(std::move(rest));
}

PairFrame pair_frame(const Configuration& config, std::size_t j, std::size_t k) {
    if (j == k || j >= config.size() || k >= config.size()) {
        throw InvalidSpecError("pair_frame: invalid indices");
    }
    PairFrame f;
    f.a = config[k].a - config[j].a;
    f.z = config[k].z - config[j].z;
    f.rho = std::sqrt(f.a * f.a + std::norm(f.z));
    if (f.rho <= 0.0) {
        throw DegenerateError("pair_frame: coincident points");
    }
    f.d = f.a + f.rho;
    f.e = f.rho - f.a;
    const double r = std::abs(f.z);
    f.has_direction = r > 0.0;
    if (f.has_direction) f.u = f.z / r;
    return f;
}

bool is_ccw_convex(const std::array<Complex, 4>& z) {
    double diam = 0.0;
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) diam = std::max(diam, std::abs(z[k] - z[j]));
    }
    const double floor = kConvexityRel * diam * diam;
    for (int j = 0; j < 4; ++j) {
        const Complex v1 = z[(j + 1) % 4] - z[j];
        const Complex v2 = z[(j + 2) % 4] - z[(j + 1) % 4];
        const double c = (std::conj(v1) * v2).imag();
        if (!(c > floor)) return false;
    }
    return true;
}

PlanarQuad canonicalize_quad(const std::array<Complex, 4>& points) {
    Complex centroid{0.0, 0.0};
    for (const Complex& p : points) centroid += p;
    centroid /= 4.0;

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::arg(points[i] - centroid) < std::arg(points[j] - centroid);
    });
    // Anchor the cycle at the caller's first point so valid input is unchanged.
    const auto anchor = std::find(order.begin(), order.end(), 0);
    std::rotate(order.begin(), anchor, order.end());

    PlanarQuad q;
    for (int i = 0; i < 4; ++i) q.z[i] = points[order[i]];
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            q.diameter = std::max(q.diameter, std::abs(q.z[k] - q.z[j]));
        }
    }
    const double floor = kConvexityRel * q.diameter * q.diameter;
    for (int j = 0; j < 4; ++j) {
        const Complex v1 = q.z[(j + 1) % 4] - q.z[j];
        const Complex v2 = q.z[(j + 2) % 4] - q.z[(j + 1) % 4];
        const double c = (std::conj(v1) * v2).imag();
        if (!(c > floor)) {
            throw NotConvexError("points not in strictly convex position at input vertex " +
                                     std::to_string(order[(j + 1) % 4]),
                                 order[(j + 1) % 4]);
        }
    }
    q.side_a = q.distance(1, 2);
    q.side_b = q.distance(0, 2);
    q.side_c = q.distance(0, 1);
    q.side_d = q.distance(0, 3);
    q.side_e = q.distance(1, 3);
    q.side_f = q.distance(2, 3);
    return q;
}

QuadAngles quad_angles(const PlanarQuad& quad) {
    QuadAngles out;
    for (int j = 0; j < 4; ++j) {
        const Complex zj = quad.z[j];
        const Complex r1 = quad.z[(j + 1) % 4] - zj;
        const Complex r2 = quad.z[(j + 2) % 4] - zj;
        const Complex r3 = quad.z[(j + 3) % 4] - zj;
        const double alpha = std::arg(r2 / r1);
        const double beta = std::arg(r3 / r2);
        if (!(alpha > kAngleTolerance) || !(beta > kAngleTolerance) ||
            !(alpha + beta < std::numbers::pi - kAngleTolerance)) {
            throw DegenerateError("quad_angles: degenerate angle at vertex " + std::to_string(j));
        }
        out.alpha[j] = alpha;
        out.beta[j] = beta;
        out.gamma[j] = alpha + beta;
    }
    return out;
}

double triangle_area(Complex p, Complex q, Complex r) {
    return std::abs((std::conj(q - p) * (r - p)).imag()) / 2.0;
}

namespace {

Point rotate_point(const Rotation& rot, const Point& p) {
    const Vec3 v = to_vec(p);
    const auto& m = rot.m;
    Point out;
    out.a = m[0] * v.a + m[1] * v.x + m[2] * v.y;
    out.z = Complex(m[3] * v.a + m[4] * v.x + m[5] * v.y,
                    m[6] * v.a + m[7] * v.x + m[8] * v.y);
    return out;
}

}  // namespace

Configuration apply_motion(const Configuration& config, const Motion& motion) {
    std::vector<Point> out;
    out.reserve(config.size());
    if (const auto* t = std::get_if<Translation>(&motion)) {
        for (const Point& p : config.points()) out.push_back({p.a + t->da, p.z + t->dz});
    } else if (const auto* r = std::get_if<Rotation>(&motion)) {
        for (const Point& p : config.points()) out.push_back(rotate_point(*r, p));
    } else if (std::get_if<Reflection>(&motion)) {
        for (const Point& p : config.points()) out.push_back({-p.a, p.z});
    } else {
        const auto& s = std::get<UniformScale>(motion);
        if (!(s.lambda > 0.0)) {
            throw InvalidSpecError("apply_motion: scale factor must be positive");
        }
        for (const Point& p : config.points()) out.push_back({p.a * s.lambda, p.z * s.lambda});
    }
    return Configuration(std::move(out));
}

Rotation axis_angle_rotation(double axis_a, double axis_x, double axis_y, double angle) {
    const double n = std::sqrt(axis_a * axis_a + axis_x * axis_x + axis_y * axis_y);
    if (!(n > 0.0)) throw InvalidSpecError("axis_angle_rotation: zero axis");
    const double h = angle / 2.0;
    const double s = std::sin(h) / n;
    return quaternion_rotation(std::cos(h), axis_a * s, axis_x * s, axis_y * s);
}

Rotation quaternion_rotation(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(n > 0.0)) throw InvalidSpecError("quaternion_rotation: zero quaternion");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    Rotation r;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
           2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
    return r;
}

}  // namespace atiyah
