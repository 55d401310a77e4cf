#include "atiyah/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace atiyah {

std::pair<double, Complex> hopf(const Spinor& s) {
    return {(std::norm(s.u) - std::norm(s.v)) / 2.0, s.u * std::conj(s.v)};
}

Spinor lift_pair(const PairFrame& frame, Chart chart) {
    if (!(frame.rho > 0.0)) {
        throw DegenerateError("lift_pair: degenerate pair (rho = 0)");
    }
    const bool plus = chart == Chart::PlusAxis || (chart == Chart::Auto && frame.a >= 0.0);
    if (plus) {
        if (!(frame.d > 0.0)) {
            throw DegenerateError("lift_pair: chart (sqrt d, conj z/sqrt d) singular, d = 0");
        }
        const double sd = std::sqrt(frame.d);
        return {Complex(sd, 0.0), std::conj(frame.z) / sd};
    }
    if (!(frame.e > 0.0)) {
        throw DegenerateError("lift_pair: chart (z/sqrt e, sqrt e) singular, e = 0");
    }
    const double se = std::sqrt(frame.e);
    return {frame.z / se, Complex(se, 0.0)};
}

Spinor paired_lift(const Spinor& s) {
    return {-std::conj(s.v), std::conj(s.u)};
}

std::vector<Complex> symmetric_column(std::span<const Spinor> spinors) {
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    for (const Spinor& s : spinors) {
        std::vector<Complex> next(coeffs.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * s.u;
            next[i + 1] += coeffs[i] * s.v;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

std::size_t pair_index(std::size_t j, std::size_t k, std::size_t n) {
    // j < k; lexicographic over the n(n-1)/2 unordered pairs.
    return j * n - j * (j + 1) / 2 + (k - j - 1);
}

Complex determinant_inplace(std::vector<Complex>& m, std::size_t n) {
    Complex det(1.0, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(m[r * n + col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return Complex(0.0, 0.0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[pivot * n + c]);
            det = -det;
        }
        const Complex diag = m[col * n + col];
        det *= diag;
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = m[r * n + col] / diag;
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= factor * m[col * n + c];
        }
    }
    return det;
}

AtiyahResult atiyah_determinant(const Configuration& config, const LiftOptions& options) {
    const std::size_t n = config.size();
    if (n < 2 || n > 8) {
        throw InvalidSpecError("atiyah_determinant: supported sizes are 2..8, got " +
                               std::to_string(n));
    }
    const std::size_t npairs = n * (n - 1) / 2;
    if (!options.pair_phases.empty() && options.pair_phases.size() != npairs) {
        throw InvalidSpecError("atiyah_determinant: pair_phases must have one entry per pair");
    }

    std::vector<Spinor> base(npairs);
    double normalizer = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const PairFrame f = pair_frame(config, j, k);
            Spinor s = lift_pair(f, options.chart);
            if (!options.pair_phases.empty()) {
                const double theta = options.pair_phases[pair_index(j, k, n)];
                const Complex phase = std::polar(1.0, theta);
                s.u *= phase;
                s.v *= phase;
            }
            base[pair_index(j, k, n)] = s;
            normalizer *= 2.0 * f.rho;
        }
    }

    std::vector<Complex> matrix(n * n);
    std::vector<Spinor> lifts(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t m = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            lifts[m++] = j < k ? paired_lift(base[pair_index(j, k, n)])
                               : base[pair_index(k, j, n)];
        }
        const std::vector<Complex> column = symmetric_column(lifts);
        for (std::size_t i = 0; i < n; ++i) matrix[i * n + k] = column[i];
    }

    AtiyahResult result;
    result.at = determinant_inplace(matrix, n);
    result.normalizer = normalizer;
    result.d_normalized = result.at / normalizer;
    result.planar = config.planar();
    return result;
}

C1Result check_c1(const Configuration& config) {
    const AtiyahResult r = atiyah_determinant(config);
    C1Result out;
    out.margin = std::abs(r.at) / r.normalizer;
    out.pass = out.margin > 1e-12;
    return out;
}

C2Result check_c2(const Configuration& config, double tol) {
    const AtiyahResult r = atiyah_determinant(config);
    C2Result out;
    out.d = r.d_normalized;
    out.re_d = r.d_normalized.real();
    out.abs_d = std::abs(r.d_normalized);
    out.planar = r.planar;
    const double reading = out.planar ? out.re_d : out.abs_d;
    out.pass = reading >= 1.0 - tol;
    return out;
}

C3Result check_c3(const Configuration& config, double tol) {
    const std::size_t n = config.size();
    if (n < 3) {
        throw InvalidSpecError("check_c3 needs at least 3 points");
    }
    const AtiyahResult full = atiyah_determinant(config);
    C3Result out;
    out.lhs = Complex(1.0, 0.0);
    for (std::size_t i = 0; i + 2 < n; ++i) out.lhs *= full.at;
    out.rhs = Complex(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        out.rhs *= atiyah_determinant(config.without(j)).at;
    }
    const double lhs_v = full.planar ? out.lhs.real() : std::abs(out.lhs);
    const double rhs_v = full.planar ? out.rhs.real() : std::abs(out.rhs);
    const double scale = std::max({std::abs(lhs_v), std::abs(rhs_v), 1e-300});
    out.margin = (lhs_v - rhs_v) / scale;
    out.pass = out.margin >= -tol;
    return out;
}

}  // namespace atiyah
