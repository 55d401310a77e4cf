#include "atiyah/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "atiyah/engine.hpp"
#include "atiyah/quad.hpp"

namespace atiyah {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Params = std::array<double, 4>;

std::array<Complex, 4> embed(const Params& x) {
    return {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(x[0], x[1]), Complex(x[2], x[3])};
}

double evaluate(Objective objective, const Params& x) {
    const std::array<Complex, 4> z = embed(x);
    for (const Complex& v : z) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return kInf;
    }
    if (!is_ccw_convex(z)) return kInf;
    std::vector<Point> pts;
    pts.reserve(4);
    for (const Complex& v : z) pts.push_back({0.0, v});
    try {
        const AtiyahResult at = atiyah_determinant(Configuration(std::move(pts)));
        if (objective == Objective::NormalizedD) return at.d_normalized.real();
        double p = 1.0;
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) p *= std::abs(z[k] - z[j]);
        }
        return at.at.real() / p;
    } catch (const DegenerateError&) {
        return kInf;
    }
}

}  // namespace

MinimizeResult minimize_d(const MinimizeSpec& spec) {
    // Map the start quad into the z1 = 0, z2 = 1 frame.
    const Complex denom = spec.start[1] - spec.start[0];
    if (std::abs(denom) == 0.0) throw InvalidSpecError("minimize: start has z1 = z2");
    Params x0;
    {
        const Complex w3 = (spec.start[2] - spec.start[0]) / denom;
        const Complex w4 = (spec.start[3] - spec.start[0]) / denom;
        x0 = {w3.real(), w3.imag(), w4.real(), w4.imag()};
    }
    const double f0 = evaluate(spec.objective, x0);
    if (!std::isfinite(f0)) {
        throw InvalidSpecError("minimize: start is not a strictly convex CCW quad");
    }

    MinimizeResult result;
    result.evaluations = 1;

    struct Vertex {
        Params x;
        double f;
    };
    std::array<Vertex, 5> simplex;
    simplex[0] = {x0, f0};
    for (int i = 0; i < 4; ++i) {
        Params x = x0;
        double h = 0.05 * std::max(1.0, std::abs(x0[i]));
        // Back off until the perturbed vertex is feasible.
        double f = kInf;
        for (int att = 0; att < 12; ++att) {
            x[i] = x0[i] + h;
            f = evaluate(spec.objective, x);
            ++result.evaluations;
            if (std::isfinite(f)) break;
            h = -h;
            if (att % 2 == 1) h *= 0.5;
        }
        simplex[i + 1] = {x, f};
    }

    auto order = [&] {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();
    result.trace.push_back({0, simplex[0].f});

    const SimplexParams& p = spec.simplex;
    for (std::uint64_t iter = 1; iter <= spec.max_iterations; ++iter) {
        // Value spread between best and worst finite vertices.
        double worst_finite = simplex[0].f;
        for (const Vertex& v : simplex) {
            if (std::isfinite(v.f)) worst_finite = std::max(worst_finite, v.f);
        }
        if (worst_finite - simplex[0].f <= spec.tolerance) {
            result.converged = true;
            break;
        }

        Params centroid{0, 0, 0, 0};
        for (int v = 0; v < 4; ++v) {
            for (int i = 0; i < 4; ++i) centroid[i] += simplex[v].x[i] / 4.0;
        }
        const Vertex& worst = simplex[4];

        auto blend = [&](double t) {
            Params x;
            for (int i = 0; i < 4; ++i) x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
            return x;
        };

        const Params xr = blend(p.reflection);
        const double fr = evaluate(spec.objective, xr);
        ++result.evaluations;

        if (fr < simplex[0].f) {
            const Params xe = blend(p.reflection * p.expansion);
            const double fe = evaluate(spec.objective, xe);
            ++result.evaluations;
            simplex[4] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[3].f) {
            simplex[4] = {xr, fr};
        } else {
            const bool outside = fr < worst.f;
            const Params xc = blend(outside ? p.reflection * p.contraction : -p.contraction);
            const double fc = evaluate(spec.objective, xc);
            ++result.evaluations;
            if (fc < std::min(fr, worst.f)) {
                simplex[4] = {xc, fc};
            } else {
                for (int v = 1; v < 5; ++v) {
                    for (int i = 0; i < 4; ++i) {
                        simplex[v].x[i] =
                            simplex[0].x[i] + p.shrink * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v].f = evaluate(spec.objective, simplex[v].x);
                    ++result.evaluations;
                }
            }
        }
        order();
        result.trace.push_back({iter, simplex[0].f});
    }

    result.best_value = simplex[0].f;
    result.best_quad = embed(simplex[0].x);
    return result;
}

}  // namespace atiyah
