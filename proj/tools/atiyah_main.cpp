#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "atiyah/engine.hpp"
#include "atiyah/minimize.hpp"
#include "atiyah/points_io.hpp"
#include "atiyah/quad.hpp"
#include "atiyah/sampler.hpp"
#include "atiyah/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

int default_threads() {
    if (const char* env = std::getenv("ATIYAH_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw atiyah::ParseError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void print_value(std::ostream& os, const std::string& key, double v) {
    os << key << " = " << atiyah::format_double(v) << "\n";
}

int cmd_compute(const std::string& input) {
    std::vector<atiyah::Point> points;
    try {
        points = atiyah::parse_points_text(read_input(input));
    } catch (const atiyah::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const atiyah::Configuration config(points);
        const atiyah::AtiyahResult at = atiyah::atiyah_determinant(config);
        std::ostream& os = std::cout;
        os << "n = " << config.size() << "\n";
        os << "planar = " << (at.planar ? "true" : "false") << "\n";
        print_value(os, "at_re", at.at.real());
        print_value(os, "at_im", at.at.imag());
        print_value(os, "normalizer", at.normalizer);
        print_value(os, "d_re", at.d_normalized.real());
        print_value(os, "d_im", at.d_normalized.imag());

        bool horizontal = config.size() == 4;
        for (const atiyah::Point& p : config.points()) {
            if (p.a != config[0].a) horizontal = false;
        }
        if (horizontal) {
            try {
                const atiyah::PlanarQuad quad = atiyah::canonicalize_quad(
                    {config[0].z, config[1].z, config[2].z, config[3].z});
                const atiyah::QuadDecomposition dec = atiyah::decomposed_at(quad);
                print_value(os, "p_scalar", dec.form.p_scalar);
                print_value(os, "at_ang", dec.form.at_ang);
                print_value(os, "s1", dec.angular.s1);
                print_value(os, "s2", dec.angular.s2);
                print_value(os, "e_dimensionless", dec.angular.e_dimensionless);
                print_value(os, "e12", dec.edges.e12);
                print_value(os, "e23", dec.edges.e23);
                print_value(os, "e34", dec.edges.e34);
                print_value(os, "e14", dec.edges.e14);
                print_value(os, "e13", dec.edges.e13);
                print_value(os, "e24", dec.edges.e24);
                const double rel = std::abs(at.at.real() - dec.at) /
                                   std::max(std::abs(at.at.real()), dec.form.p_scalar);
                print_value(os, "two_route_rel_error", rel);
            } catch (const atiyah::NotConvexError&) {
                // Not a convex quad: base quantities only.
            }
        }
        return kExitOk;
    } catch (const atiyah::DegenerateError& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const atiyah::InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

std::string report_csv(const atiyah::RunReport& report) {
    std::string out = "sample_index,kind,D_re,D_im,at_ang,s1,s2,e_sum,margin_c2,margin_c3,"
                      "worst_check\n";
    const std::string kind(atiyah::kind_name(report.spec.kind));
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const atiyah::SampleRecord& r = report.records[i];
        out += std::to_string(i);
        out += ',';
        out += kind;
        out += ',';
        out += atiyah::format_double(r.d_re);
        out += ',';
        out += atiyah::format_double(r.d_im);
        out += ',';
        out += atiyah::format_double(r.at_ang);
        out += ',';
        out += atiyah::format_double(r.s1);
        out += ',';
        out += atiyah::format_double(r.s2);
        out += ',';
        out += atiyah::format_double(r.e_sum);
        out += ',';
        out += atiyah::format_double(r.margin_c2);
        out += ',';
        out += atiyah::format_double(r.margin_c3);
        out += ',';
        out += atiyah::check_name(static_cast<atiyah::Check>(r.worst));
        out += '\n';
    }
    return out;
}

json points_json(const std::vector<atiyah::Point>& points) {
    json arr = json::array();
    for (const atiyah::Point& p : points) {
        arr.push_back({p.a, p.z.real(), p.z.imag()});
    }
    return arr;
}

std::string report_json(const atiyah::RunReport& report) {
    json doc;
    doc["tool"] = "atiyah-lab";
    doc["version"] = atiyah::kVersion;
    doc["spec"] = {{"kind", std::string(atiyah::kind_name(report.spec.kind))},
                   {"samples", report.spec.count},
                   {"seed", report.spec.seed},
                   {"scale", report.spec.scale},
                   {"threads", report.threads}};
    doc["tolerances"] = {{"identity_rel", report.tolerances.identity_rel},
                         {"inequality_abs", report.tolerances.inequality_abs},
                         {"c2_rel", report.tolerances.c2_rel},
                         {"invariance_rel", report.tolerances.invariance_rel},
                         {"c1_floor", report.tolerances.c1_floor}};
    json checks = json::array();
    for (unsigned c = 0; c < atiyah::kCheckCount; ++c) {
        checks.push_back({{"name", std::string(atiyah::check_name(static_cast<atiyah::Check>(c)))},
                          {"applicable", report.checks[c].applicable},
                          {"passed", report.checks[c].passed}});
    }
    doc["checks"] = checks;
    doc["extremes"] = {{"min_d", report.min_d},
                       {"min_at_ang_margin", report.min_at_ang_margin},
                       {"min_s1_margin", report.min_s1_margin},
                       {"min_cor2_margin", report.min_cor2_margin},
                       {"min_e_sum", report.min_e_sum}};
    json failures = json::array();
    for (const atiyah::Failure& f : report.failures) {
        failures.push_back({{"index", f.index},
                            {"check", std::string(atiyah::check_name(f.check))},
                            {"value", f.value},
                            {"points", points_json(f.points)}});
    }
    doc["failures"] = failures;
    doc["failure_count"] = report.failure_count;
    doc["failures_truncated"] = report.failure_count > report.failures.size();
    doc["all_pass"] = report.all_pass();
    doc["elapsed_seconds"] = report.elapsed_seconds;
    return doc.dump(2) + "\n";
}

int cmd_verify(const atiyah::SampleSpec& spec, double tol, const std::string& format,
               const std::string& out_path, int threads) {
    atiyah::CheckTolerances tolerances;
    tolerances.identity_rel = tol;
    const atiyah::RunReport report = atiyah::run_verification(spec, tolerances, threads);

    const std::string body = format == "json" ? report_json(report) : report_csv(report);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        write_file(out_path, body);
    }

    // One reproducer points file per failing sample.
    const std::filesystem::path dir =
        out_path.empty() ? std::filesystem::path(".")
                         : std::filesystem::path(out_path).parent_path();
    std::set<std::uint64_t> dumped;
    for (const atiyah::Failure& f : report.failures) {
        if (!dumped.insert(f.index).second) continue;
        const std::string name = "reproducer_" + std::string(atiyah::kind_name(spec.kind)) + "_" +
                                 std::to_string(f.index) + ".txt";
        const std::filesystem::path path = dir.empty() ? std::filesystem::path(name) : dir / name;
        write_file(path.string(), atiyah::format_points(f.points));
        std::cerr << "violation at sample " << f.index << " (" << atiyah::check_name(f.check)
                  << " = " << atiyah::format_double(f.value) << "), reproducer: " << path.string()
                  << "\n";
    }
    return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_minimize(const std::string& objective_name, const std::string& start_name,
                 std::uint64_t max_iter, double tol, const std::string& trace_path,
                 const std::string& out_path) {
    atiyah::MinimizeSpec spec;
    if (objective_name == "D") {
        spec.objective = atiyah::Objective::NormalizedD;
    } else if (objective_name == "at_ang") {
        spec.objective = atiyah::Objective::AtAng;
    } else {
        std::cerr << "unknown objective '" << objective_name << "' (use D or at_ang)\n";
        return kExitUsage;
    }
    spec.max_iterations = max_iter;
    spec.tolerance = tol;

    try {
        if (start_name == "square" || start_name == "figure1") {
            const std::vector<atiyah::Point> pts = atiyah::fixture(start_name);
            for (int i = 0; i < 4; ++i) spec.start[i] = pts[i].z;
        } else if (start_name.rfind("seed:", 0) == 0) {
            atiyah::SampleSpec sampler;
            sampler.kind = atiyah::SampleKind::ConvexQuad;
            sampler.count = 1;
            sampler.seed = std::stoull(start_name.substr(5));
            const atiyah::Configuration c = atiyah::sample_at(sampler, 0);
            for (int i = 0; i < 4; ++i) spec.start[i] = c[i].z;
        } else {
            std::cerr << "unknown start '" << start_name << "' (use square, figure1, seed:N)\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "bad start: " << e.what() << "\n";
        return kExitUsage;
    }

    atiyah::MinimizeResult result;
    try {
        result = atiyah::minimize_d(spec);
    } catch (const atiyah::InvalidSpecError& e) {
        std::cerr << "infeasible start: " << e.what() << "\n";
        return kExitDegenerate;
    }

    std::string trace = "iteration,best\n";
    for (const atiyah::TracePoint& t : result.trace) {
        trace += std::to_string(t.iteration);
        trace += ',';
        trace += atiyah::format_double(t.best);
        trace += '\n';
    }
    write_file(trace_path, trace);

    std::vector<atiyah::Point> best;
    for (const atiyah::Complex& z : result.best_quad) best.push_back({0.0, z});
    write_file(out_path, atiyah::format_points(best));

    print_value(std::cout, "best", result.best_value);
    std::cout << "iterations = " << (result.trace.back().iteration) << "\n";
    std::cout << "evaluations = " << result.evaluations << "\n";
    std::cout << "trace = " << trace_path << "\n";
    std::cout << "best_quad = " << out_path << "\n";

    const double floor = spec.objective == atiyah::Objective::NormalizedD
                             ? 1.0 - 1e-8
                             : 64.0 * (1.0 - 1e-8);
    if (result.best_value < floor) {
        std::cerr << "conjecture floor breached: best " << atiyah::format_double(result.best_value)
                  << " < " << atiyah::format_double(floor) << "; reproducer: " << out_path << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_fixture(const std::string& name) {
    try {
        std::cout << atiyah::format_points(atiyah::fixture(name));
        return kExitOk;
    } catch (const atiyah::InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atiyah determinant laboratory: computation, verification sweeps and "
                 "extremal search for point configurations in R^3"};
    app.set_version_flag("--version", std::string("atiyah-lab ") + atiyah::kVersion);
    app.require_subcommand(1);

    // compute
    std::string compute_input = "-";
    CLI::App* compute = app.add_subcommand(
        "compute", "Evaluate the determinant (and, for convex planar quads, the decomposition) "
                   "on a points file");
    compute->add_option("input", compute_input, "points file, or - for stdin");

    // verify
    std::string kind_str = "convex-quad";
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double scale = 1.0;
    double tol = 1e-9;
    std::string format = "csv";
    std::string out_path;
    int threads = default_threads();
    CLI::App* verify = app.add_subcommand("verify", "Run a seeded verification sweep");
    verify->add_option("--kind", kind_str, "convex-quad | planar-general | spatial | "
                                           "collinear-perturbed | near-degenerate");
    verify->add_option("--samples", samples, "number of samples (> 0)");
    verify->add_option("--seed", seed, "stream seed");
    verify->add_option("--scale", scale, "sampling scale (> 0)");
    verify->add_option("--tol", tol, "relative tolerance for identity checks");
    verify->add_option("--format", format, "csv | json");
    verify->add_option("--out", out_path, "output path (default stdout)");
    verify->add_option("--threads", threads, "worker count (default ATIYAH_LAB_THREADS or 1)");

    // minimize
    std::string objective = "D";
    std::string start = "square";
    std::uint64_t max_iter = 2000;
    double min_tol = 1e-10;
    std::string trace_path = "minimize_trace.csv";
    std::string best_path = "minimize_best.txt";
    CLI::App* minimize = app.add_subcommand("minimize", "Derivative-free descent of D or At_ang "
                                                        "over convex quads");
    minimize->add_option("--objective", objective, "D | at_ang");
    minimize->add_option("--start", start, "square | figure1 | seed:N");
    minimize->add_option("--max-iter", max_iter, "iteration cap");
    minimize->add_option("--tol", min_tol, "convergence tolerance");
    minimize->add_option("--trace", trace_path, "trace CSV path");
    minimize->add_option("--out", best_path, "best configuration points file");

    // fixture
    std::string fixture_name;
    CLI::App* fixture_cmd = app.add_subcommand("fixture", "Print a canonical fixture");
    fixture_cmd->add_option("name", fixture_name, "square | collinear3 | collinear4 | "
                                                  "equilateral | figure1")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_input);
        if (verify->parsed()) {
            const auto kind = atiyah::parse_kind(kind_str);
            if (!kind) {
                std::cerr << "unknown kind '" << kind_str << "'\n";
                return kExitUsage;
            }
            if (samples == 0) {
                std::cerr << "--samples must be positive\n";
                return kExitUsage;
            }
            if (!(scale > 0.0)) {
                std::cerr << "--scale must be positive\n";
                return kExitUsage;
            }
            if (format != "csv" && format != "json") {
                std::cerr << "--format must be csv or json\n";
                return kExitUsage;
            }
            if (threads < 1) {
                std::cerr << "--threads must be at least 1\n";
                return kExitUsage;
            }
            atiyah::SampleSpec spec;
            spec.kind = *kind;
            spec.count = samples;
            spec.seed = seed;
            spec.scale = scale;
            return cmd_verify(spec, tol, format, out_path, threads);
        }
        if (minimize->parsed()) {
            return cmd_minimize(objective, start, max_iter, min_tol, trace_path, best_path);
        }
        if (fixture_cmd->parsed()) return cmd_fixture(fixture_name);
    } catch (const atiyah::InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitUsage;
}
