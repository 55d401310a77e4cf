#include "atiyah/quad.hpp"

#include <algorithm>
#include <cmath>

#include "atiyah/engine.hpp"

namespace atiyah {

double s1(const QuadAngles& angles) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        sum += std::cos(angles.alpha[j]) + std::cos(angles.beta[j]) + std::cos(angles.gamma[j]);
    }
    return sum;
}

double s2(const QuadAngles& angles) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        const double vertex = std::cos(angles.alpha[j]) + std::cos(angles.beta[j]) +
                              std::cos(angles.gamma[j]);
        const double opposite = std::cos(angles.alpha[(j + 1) % 4]) +
                                std::cos(angles.gamma[(j + 2) % 4]) +
                                std::cos(angles.beta[(j + 3) % 4]);
        sum += vertex * opposite;
    }
    return sum;
}

double sin_half_sum(const QuadAngles& angles) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        sum += std::sin(angles.alpha[(j + 1) % 4] / 2.0) *
               std::sin(angles.gamma[(j + 2) % 4] / 2.0) *
               std::sin(angles.beta[(j + 3) % 4] / 2.0);
    }
    return sum;
}

EdgeTerms edge_terms(const PlanarQuad& quad) {
    EdgeTerms t;
    t.a123 = triangle_area(quad.z[0], quad.z[1], quad.z[2]);
    t.a124 = triangle_area(quad.z[0], quad.z[1], quad.z[3]);
    t.a134 = triangle_area(quad.z[0], quad.z[2], quad.z[3]);
    t.a234 = triangle_area(quad.z[1], quad.z[2], quad.z[3]);
    const double a = quad.side_a, b = quad.side_b, c = quad.side_c;
    const double d = quad.side_d, e = quad.side_e, f = quad.side_f;
    t.e12 = t.a123 * t.a124 * f * (a + b + e + d - 2 * c);
    t.e23 = t.a123 * t.a234 * d * (c + b + e + f - 2 * a);
    t.e34 = t.a134 * t.a234 * c * (a + e + d + b - 2 * f);
    t.e14 = t.a124 * t.a134 * a * (c + e + b + f - 2 * d);
    t.e13 = t.a123 * t.a134 * e * (a + c + d + f - 2 * b);
    t.e24 = t.a124 * t.a234 * b * (c + d + f + a - 2 * e);
    return t;
}

QuadDecomposition decomposed_at(const PlanarQuad& quad) {
    QuadDecomposition out;
    const QuadAngles angles = quad_angles(quad);
    out.angular.s1 = s1(angles);
    out.angular.s2 = s2(angles);
    out.angular.sin_half_sum = sin_half_sum(angles);
    out.edges = edge_terms(quad);
    // P in the fixed order r12 r13 r14 r23 r24 r34.
    out.form.p_scalar = quad.side_c * quad.side_b * quad.side_d * quad.side_a * quad.side_e *
                        quad.side_f;
    const double signed_sum = out.edges.signed_sum();
    out.angular.e_dimensionless = 8.0 * signed_sum / out.form.p_scalar;
    out.at = out.form.p_scalar * (24.0 + 8.0 * out.angular.s1 + 2.0 * out.angular.s2) +
             8.0 * signed_sum;
    out.form.at_ang = out.at / out.form.p_scalar;
    return out;
}

Theorem1Report verify_theorem1(const PlanarQuad& quad, double tol) {
    const QuadDecomposition dec = decomposed_at(quad);
    std::vector<Point> points;
    points.reserve(4);
    for (const Complex& z : quad.z) points.push_back({0.0, z});
    const AtiyahResult direct = atiyah_determinant(Configuration(std::move(points)));

    Theorem1Report report;
    report.at_direct = direct.at.real();
    report.at_decomposed = dec.at;
    report.rel_error = std::abs(report.at_direct - report.at_decomposed) /
                       std::max(std::abs(report.at_direct), dec.form.p_scalar);
    report.pass = report.rel_error <= tol;
    return report;
}

std::array<Complex, 24> permutation_expansion(const PlanarQuad& quad) {
    // Unit directions u[j][k] = (z_k - z_j) / r_jk.
    Complex u[4][4];
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j == k) continue;
            u[j][k] = (quad.z[k] - quad.z[j]) / quad.distance(j, k);
        }
    }
    // Column k: elementary symmetric polynomials of conj(u_kj), j != k.
    Complex col[4][4];
    for (int k = 0; k < 4; ++k) {
        Complex w[3];
        int m = 0;
        for (int j = 0; j < 4; ++j) {
            if (j != k) w[m++] = std::conj(u[k][j]);
        }
        col[k][0] = Complex(1.0, 0.0);
        col[k][1] = w[0] + w[1] + w[2];
        col[k][2] = w[0] * w[1] + w[0] * w[2] + w[1] * w[2];
        col[k][3] = w[0] * w[1] * w[2];
    }
    const Complex prefactor = u[0][1] * u[0][2] * u[0][3] * u[1][2] * u[1][3] * u[2][3];

    std::array<Complex, 24> terms;
    std::array<int, 4> sigma{0, 1, 2, 3};
    for (int idx = 0; idx < 24; ++idx) {
        int sign = 1;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (sigma[i] > sigma[j]) sign = -sign;
            }
        }
        Complex term = prefactor * static_cast<double>(sign);
        for (int k = 0; k < 4; ++k) term *= col[k][sigma[k]];
        terms[idx] = term;
        std::next_permutation(sigma.begin(), sigma.end());
    }
    return terms;
}

}  // namespace atiyah
