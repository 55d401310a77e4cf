#include "atiyah/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "atiyah/engine.hpp"
#include "atiyah/quad.hpp"
#include "atiyah/rng.hpp"

namespace atiyah {

namespace {

constexpr int kRejectionBudget = 10000;
constexpr std::uint64_t kMotionSalt = 0x51E0D3A7C2B49F6DULL;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Complex disk_point(SplitMix64& rng, double radius) {
    for (;;) {
        const double x = rng.uniform(-radius, radius);
        const double y = rng.uniform(-radius, radius);
        if (x * x + y * y <= radius * radius) return {x, y};
    }
}

Point ball_point(SplitMix64& rng, double radius) {
    for (;;) {
        const double a = rng.uniform(-radius, radius);
        const double x = rng.uniform(-radius, radius);
        const double y = rng.uniform(-radius, radius);
        if (a * a + x * x + y * y <= radius * radius) return {a, Complex(x, y)};
    }
}

double gaussian(SplitMix64& rng) {
    const double u1 = std::max(rng.uniform01(), 0x1.0p-60);
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Point> planar_points(const std::array<Complex, 4>& z) {
    std::vector<Point> pts;
    pts.reserve(4);
    for (const Complex& v : z) pts.push_back({0.0, v});
    return pts;
}

PlanarQuad draw_convex_quad(SplitMix64& rng, double scale) {
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        std::array<Complex, 4> z;
        for (Complex& v : z) v = disk_point(rng, scale);
        try {
            return canonicalize_quad(z);
        } catch (const NotConvexError&) {
            continue;
        }
    }
    throw InvalidSpecError("sample: rejection budget exceeded for convex quad");
}

Configuration sample_convex_quad(SplitMix64& rng, double scale) {
    return Configuration(planar_points(draw_convex_quad(rng, scale).z));
}

Configuration sample_planar_general(SplitMix64& rng, double scale) {
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        std::vector<Point> pts;
        pts.reserve(4);
        for (int i = 0; i < 4; ++i) pts.push_back({0.0, disk_point(rng, scale)});
        try {
            return Configuration(std::move(pts));
        } catch (const DegenerateError&) {
            continue;
        }
    }
    throw InvalidSpecError("sample: rejection budget exceeded for planar points");
}

Configuration sample_spatial(SplitMix64& rng, double scale) {
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        std::vector<Point> pts;
        pts.reserve(4);
        for (int i = 0; i < 4; ++i) pts.push_back(ball_point(rng, scale));
        try {
            return Configuration(std::move(pts));
        } catch (const DegenerateError&) {
            continue;
        }
    }
    throw InvalidSpecError("sample: rejection budget exceeded for spatial points");
}

Configuration sample_collinear_perturbed(SplitMix64& rng, double scale, std::uint64_t index) {
    const int k = static_cast<int>(index % 8) + 1;
    const double eps = std::pow(10.0, -k) * scale;
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        std::array<double, 4> xs;
        for (double& x : xs) x = rng.uniform(-scale, scale);
        std::sort(xs.begin(), xs.end());
        bool separated = true;
        for (int i = 0; i < 3; ++i) {
            if (xs[i + 1] - xs[i] < 1e-3 * scale) separated = false;
        }
        if (!separated) continue;
        std::vector<Point> pts;
        pts.reserve(4);
        for (const double x : xs) pts.push_back({0.0, Complex(x, 0.0) + disk_point(rng, eps)});
        try {
            return Configuration(std::move(pts));
        } catch (const DegenerateError&) {
            continue;
        }
    }
    throw InvalidSpecError("sample: rejection budget exceeded for collinear-perturbed points");
}

Configuration sample_near_degenerate(SplitMix64& rng, double scale) {
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        PlanarQuad quad = draw_convex_quad(rng, scale);
        std::array<Complex, 4> z = quad.z;
        const int side = static_cast<int>(rng.next() % 4);
        const double u = 0.05 + 0.95 * rng.uniform01();
        const double target = u * 1e-4 * quad.diameter;
        const int head = (side + 1) % 4;
        const Complex dir = z[head] - z[side];
        z[head] = z[side] + dir * (target / std::abs(dir));
        if (!is_ccw_convex(z)) continue;
        double diam = 0.0;
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) diam = std::max(diam, std::abs(z[k] - z[j]));
        }
        if (!(target < 1e-4 * diam)) continue;
        return Configuration(planar_points(z));
    }
    throw InvalidSpecError("sample: rejection budget exceeded for near-degenerate quad");
}

}  // namespace

std::string_view kind_name(SampleKind kind) {
    switch (kind) {
        case SampleKind::ConvexQuad: return "convex-quad";
        case SampleKind::PlanarGeneral: return "planar-general";
        case SampleKind::Spatial: return "spatial";
        case SampleKind::CollinearPerturbed: return "collinear-perturbed";
        case SampleKind::NearDegenerate: return "near-degenerate";
    }
    return "unknown";
}

std::optional<SampleKind> parse_kind(std::string_view name) {
    for (const SampleKind k : {SampleKind::ConvexQuad, SampleKind::PlanarGeneral,
                               SampleKind::Spatial, SampleKind::CollinearPerturbed,
                               SampleKind::NearDegenerate}) {
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

std::string_view check_name(Check check) {
    switch (check) {
        case Check::C1: return "c1";
        case Check::C2: return "c2";
        case Check::C3: return "c3";
        case Check::Thm1: return "thm1";
        case Check::Cor1: return "cor1";
        case Check::Cor2: return "cor2";
        case Check::Star: return "star";
        case Check::ESum: return "esum";
        case Check::SineArea: return "sine_area";
        case Check::Motion: return "motion";
    }
    return "unknown";
}

Configuration sample_at(const SampleSpec& spec, std::uint64_t index) {
    if (spec.count == 0) throw InvalidSpecError("sample: count must be positive");
    if (!(spec.scale > 0.0)) throw InvalidSpecError("sample: scale must be positive");
    SplitMix64 rng = substream(spec.seed, index);
    switch (spec.kind) {
        case SampleKind::ConvexQuad: return sample_convex_quad(rng, spec.scale);
        case SampleKind::PlanarGeneral: return sample_planar_general(rng, spec.scale);
        case SampleKind::Spatial: return sample_spatial(rng, spec.scale);
        case SampleKind::CollinearPerturbed:
            return sample_collinear_perturbed(rng, spec.scale, index);
        case SampleKind::NearDegenerate: return sample_near_degenerate(rng, spec.scale);
    }
    throw InvalidSpecError("sample: unknown kind");
}

std::vector<Configuration> sample(const SampleSpec& spec) {
    std::vector<Configuration> out;
    out.reserve(spec.count);
    for (std::uint64_t i = 0; i < spec.count; ++i) out.push_back(sample_at(spec, i));
    return out;
}

namespace {

struct Slack {
    Check check;
    double value;
};

void set_check(SampleRecord& r, Check c, bool pass) {
    r.applicable_mask |= static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
    if (!pass) r.fail_mask |= static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
}

SampleRecord evaluate_sample(const SampleSpec& spec, std::uint64_t index,
                             const CheckTolerances& tol) {
    const Configuration config = sample_at(spec, index);
    SampleRecord r;
    r.at_ang = r.s1 = r.s2 = r.e_sum = r.e_sum_scaled = kNaN;
    r.thm1_rel = r.cor1_margin = r.cor2_margin = r.star_resid = r.sine_rel = kNaN;

    const AtiyahResult at = atiyah_determinant(config);
    r.d_re = at.d_normalized.real();
    r.d_im = at.d_normalized.imag();
    r.d_reading = at.planar ? r.d_re : std::abs(at.d_normalized);
    r.c1_margin = std::abs(at.at) / at.normalizer;
    r.margin_c2 = r.d_reading - 1.0;

    std::vector<Slack> slacks;
    slacks.reserve(kCheckCount);

    set_check(r, Check::C1, r.c1_margin > tol.c1_floor);
    slacks.push_back({Check::C1, r.c1_margin - tol.c1_floor});

    const C3Result c3 = check_c3(config, tol.identity_rel);
    r.margin_c3 = c3.margin;
    set_check(r, Check::C3, c3.pass);
    slacks.push_back({Check::C3, c3.margin + tol.identity_rel});

    // Rigid-motion spot check with a per-index random rotation + translation.
    {
        SplitMix64 mrng = substream(spec.seed ^ kMotionSalt, index);
        const Rotation rot = quaternion_rotation(gaussian(mrng), gaussian(mrng), gaussian(mrng),
                                                 gaussian(mrng));
        Configuration moved = apply_motion(config, rot);
        moved = apply_motion(moved, Translation{mrng.uniform(-spec.scale, spec.scale),
                                                disk_point(mrng, spec.scale)});
        const AtiyahResult at2 = atiyah_determinant(moved);
        r.motion_rel = std::abs(at2.at - at.at) / std::max(std::abs(at.at), 1e-300);
        set_check(r, Check::Motion, r.motion_rel <= tol.invariance_rel);
        slacks.push_back({Check::Motion, tol.invariance_rel - r.motion_rel});
    }

    // Quad decomposition path, when the sample is a strictly convex planar
    // quadrilateral presented in the a = 0 plane.
    bool horizontal = config.size() == 4;
    for (const Point& p : config.points()) {
        if (p.a != config[0].a) horizontal = false;
    }
    bool c2_pass = r.d_reading >= 1.0 - tol.c2_rel;
    if (horizontal) {
        try {
            const PlanarQuad quad = canonicalize_quad(
                {config[0].z, config[1].z, config[2].z, config[3].z});
            const QuadDecomposition dec = decomposed_at(quad);
            const QuadAngles angles = quad_angles(quad);
            r.at_ang = dec.form.at_ang;
            r.s1 = dec.angular.s1;
            r.s2 = dec.angular.s2;
            r.e_sum = dec.edges.signed_sum();
            const double diam6 = std::pow(quad.diameter, 6);
            r.e_sum_scaled = r.e_sum / diam6;

            r.thm1_rel = std::abs(at.at.real() - dec.at) /
                         std::max(std::abs(at.at.real()), dec.form.p_scalar);
            set_check(r, Check::Thm1, r.thm1_rel <= tol.identity_rel);
            slacks.push_back({Check::Thm1, tol.identity_rel - r.thm1_rel});

            r.cor1_margin = r.s1 - 4.0;
            set_check(r, Check::Cor1, r.cor1_margin >= -tol.inequality_abs);
            slacks.push_back({Check::Cor1, r.cor1_margin + tol.inequality_abs});

            r.cor2_margin = 8.0 * r.s1 + 2.0 * r.s2 - 40.0;
            set_check(r, Check::Cor2, r.cor2_margin >= -tol.inequality_abs);
            slacks.push_back({Check::Cor2, r.cor2_margin + tol.inequality_abs});

            double star = 0.0;
            for (int j = 0; j < 4; ++j) {
                const double a = angles.alpha[(j + 1) % 4];
                const double g = angles.gamma[(j + 2) % 4];
                const double b = angles.beta[(j + 3) % 4];
                star = std::max(star,
                                std::abs(std::cos(a) + std::cos(g) + std::cos(b) - 1.0 -
                                         4.0 * std::sin(a / 2) * std::sin(g / 2) *
                                             std::sin(b / 2)));
            }
            r.star_resid = star;
            set_check(r, Check::Star, star <= tol.inequality_abs);
            slacks.push_back({Check::Star, tol.inequality_abs - star});

            set_check(r, Check::ESum, r.e_sum_scaled >= -tol.inequality_abs);
            slacks.push_back({Check::ESum, r.e_sum_scaled + tol.inequality_abs});

            // Paper-exemplar side z3 z4: area form against the sine form.
            const double sine_form =
                dec.form.p_scalar *
                (std::sin(angles.beta[0]) * std::sin(angles.beta[3]) +
                 std::sin(angles.beta[0]) * std::sin(angles.gamma[2]) +
                 std::sin(angles.alpha[1]) * std::sin(angles.alpha[2]) +
                 std::sin(angles.alpha[1]) * std::sin(angles.gamma[3]) -
                 2.0 * std::sin(angles.alpha[1]) * std::sin(angles.beta[0])) /
                4.0;
            r.sine_rel = std::abs(dec.edges.e34 - sine_form) /
                         std::max(std::abs(dec.edges.e34), dec.form.p_scalar / 4.0);
            set_check(r, Check::SineArea, r.sine_rel <= tol.identity_rel);
            slacks.push_back({Check::SineArea, tol.identity_rel - r.sine_rel});

            // C2 for a convex quad also requires the angular reading.
            c2_pass = c2_pass && r.at_ang >= 64.0 * (1.0 - tol.c2_rel);
        } catch (const NotConvexError&) {
            // Not in convex position: decomposition checks do not apply.
        }
    }

    set_check(r, Check::C2, c2_pass);
    slacks.push_back({Check::C2, r.margin_c2 + tol.c2_rel});

    Check worst = slacks.front().check;
    double worst_value = slacks.front().value;
    for (const Slack& s : slacks) {
        if (s.value < worst_value) {
            worst_value = s.value;
            worst = s.check;
        }
    }
    r.worst = static_cast<std::uint8_t>(worst);
    return r;
}

double failure_value(const SampleRecord& r, Check c) {
    switch (c) {
        case Check::C1: return r.c1_margin;
        case Check::C2: return r.margin_c2;
        case Check::C3: return r.margin_c3;
        case Check::Thm1: return r.thm1_rel;
        case Check::Cor1: return r.cor1_margin;
        case Check::Cor2: return r.cor2_margin;
        case Check::Star: return r.star_resid;
        case Check::ESum: return r.e_sum_scaled;
        case Check::SineArea: return r.sine_rel;
        case Check::Motion: return r.motion_rel;
    }
    return 0.0;
}

}  // namespace

RunReport run_verification(const SampleSpec& spec, const CheckTolerances& tolerances,
                           int threads) {
    if (spec.count == 0) throw InvalidSpecError("run_verification: count must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    RunReport report;
    report.spec = spec;
    report.tolerances = tolerances;
    threads = std::clamp(threads, 1, 64);
    report.threads = threads;
    report.records.resize(spec.count);

    std::exception_ptr first_error;
    auto worker = [&](std::uint64_t lo, std::uint64_t hi, std::exception_ptr& err) {
        try {
            for (std::uint64_t i = lo; i < hi; ++i) {
                report.records[i] = evaluate_sample(spec, i, tolerances);
            }
        } catch (...) {
            err = std::current_exception();
        }
    };

    if (threads == 1 || spec.count < 2) {
        worker(0, spec.count, first_error);
    } else {
        const std::uint64_t chunk = (spec.count + threads - 1) / threads;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, spec.count);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi, std::ref(errors[t]));
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : errors) {
            if (e && !first_error) first_error = e;
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    // Deterministic, order-fixed merge.
    report.min_d = kInf;
    report.min_at_ang_margin = kInf;
    report.min_s1_margin = kInf;
    report.min_cor2_margin = kInf;
    report.min_e_sum = kInf;
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        const SampleRecord& r = report.records[i];
        report.min_d = std::min(report.min_d, r.d_reading);
        if (!std::isnan(r.at_ang)) {
            report.min_at_ang_margin = std::min(report.min_at_ang_margin, r.at_ang - 64.0);
            report.min_s1_margin = std::min(report.min_s1_margin, r.cor1_margin);
            report.min_cor2_margin = std::min(report.min_cor2_margin, r.cor2_margin);
            report.min_e_sum = std::min(report.min_e_sum, r.e_sum);
        }
        for (unsigned c = 0; c < kCheckCount; ++c) {
            const Check check = static_cast<Check>(c);
            if (!r.applies(check)) continue;
            ++report.checks[c].applicable;
            if (!r.failed(check)) {
                ++report.checks[c].passed;
                continue;
            }
            ++report.failure_count;
            if (report.failures.size() < kMaxStoredFailures) {
                Failure f;
                f.index = i;
                f.check = check;
                f.value = failure_value(r, check);
                const Configuration config = sample_at(spec, i);
                f.points.assign(config.points().begin(), config.points().end());
                report.failures.push_back(std::move(f));
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace atiyah
