#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atiyah/geometry.hpp"

namespace atiyah {

enum class SampleKind {
    ConvexQuad,
    PlanarGeneral,
    Spatial,
    CollinearPerturbed,
    NearDegenerate,
};

std::string_view kind_name(SampleKind kind);
std::optional<SampleKind> parse_kind(std::string_view name);

struct SampleSpec {
    SampleKind kind = SampleKind::ConvexQuad;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// Deterministic sample `index` of the stream described by `spec`; every
/// index is reproducible in isolation. Throws InvalidSpecError when the
/// rejection budget (10^4 tries) is exhausted.
Configuration sample_at(const SampleSpec& spec, std::uint64_t index);

/// The whole stream, materialized.
std::vector<Configuration> sample(const SampleSpec& spec);

struct CheckTolerances {
    double identity_rel = 1e-9;    // two-route, C3, sine/area cross-check
    double inequality_abs = 1e-12; // corollary slack on dimensionless values
    double c2_rel = 1e-10;
    double invariance_rel = 1e-9;  // rigid-motion spot check
    double c1_floor = 1e-12;
};

enum class Check : unsigned {
    C1,
    C2,
    C3,
    Thm1,
    Cor1,
    Cor2,
    Star,
    ESum,
    SineArea,
    Motion,
};
inline constexpr unsigned kCheckCount = 10;

std::string_view check_name(Check check);

/// Per-sample results; angular fields are NaN when the sample is not a
/// strictly convex planar quadrilateral.
struct SampleRecord {
    double d_re = 0.0;
    double d_im = 0.0;
    double d_reading = 0.0;  // Re(D) planar, |D| spatial
    double at_ang = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double e_sum = 0.0;        // signed edge-term sum, length^6
    double e_sum_scaled = 0.0; // e_sum / diameter^6
    double margin_c2 = 0.0;    // d_reading - 1
    double margin_c3 = 0.0;
    double c1_margin = 0.0;    // |At| / normalizer
    double thm1_rel = 0.0;
    double cor1_margin = 0.0;  // s1 - 4
    double cor2_margin = 0.0;  // 8 s1 + 2 s2 - 40
    double star_resid = 0.0;
    double sine_rel = 0.0;
    double motion_rel = 0.0;
    std::uint16_t applicable_mask = 0;
    std::uint16_t fail_mask = 0;
    std::uint8_t worst = 0;  // Check with the smallest slack

    bool applies(Check c) const { return applicable_mask >> static_cast<unsigned>(c) & 1u; }
    bool failed(Check c) const { return fail_mask >> static_cast<unsigned>(c) & 1u; }
};

struct CheckStat {
    std::uint64_t applicable = 0;
    std::uint64_t passed = 0;
};

struct Failure {
    std::uint64_t index = 0;
    Check check = Check::C1;
    double value = 0.0;
    std::vector<Point> points;
};

/// Cap on stored failure reproducers; the total count is always exact.
inline constexpr std::size_t kMaxStoredFailures = 100;

struct RunReport {
    SampleSpec spec;
    CheckTolerances tolerances;
    int threads = 1;
    std::array<CheckStat, kCheckCount> checks{};
    std::vector<Failure> failures;
    std::uint64_t failure_count = 0;
    double min_d = 0.0;
    double min_at_ang_margin = 0.0;  // at_ang - 64 over decomposable samples
    double min_s1_margin = 0.0;
    double min_cor2_margin = 0.0;
    double min_e_sum = 0.0;
    double elapsed_seconds = 0.0;
    std::vector<SampleRecord> records;

    bool all_pass() const { return failure_count == 0; }
};

/// Runs every applicable check on every sample: C1/C2/C3 and a random
/// rigid-motion spot check on all kinds; the two-route identity, corollary
/// bounds, identity (*), signed edge-term sum and the sine/area cross-check
/// on strictly convex planar quads. Check failures are data, not errors;
/// the merged report is identical for any worker count.
RunReport run_verification(const SampleSpec& spec, const CheckTolerances& tolerances = {},
                           int threads = 1);

}  // namespace atiyah
