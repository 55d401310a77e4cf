#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atiyah/engine.hpp"
#include "atiyah/minimize.hpp"
#include "atiyah/points_io.hpp"
#include "atiyah/quad.hpp"
#include "atiyah/sampler.hpp"
#include "atiyah/version.hpp"

namespace py = pybind11;

namespace {

using atiyah::Complex;

atiyah::Configuration make_config(const std::vector<std::vector<double>>& points) {
    std::vector<atiyah::Point> pts;
    pts.reserve(points.size());
    for (const auto& row : points) {
        if (row.size() == 2) {
            pts.push_back({0.0, Complex(row[0], row[1])});
        } else if (row.size() == 3) {
            pts.push_back({row[0], Complex(row[1], row[2])});
        } else {
            throw atiyah::InvalidSpecError("each point needs 2 (re, im) or 3 (a, re, im) fields");
        }
    }
    return atiyah::Configuration(std::move(pts));
}

std::vector<std::vector<double>> dump_points(std::span<const atiyah::Point> points) {
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const atiyah::Point& p : points) out.push_back({p.a, p.z.real(), p.z.imag()});
    return out;
}

atiyah::PlanarQuad make_quad(const std::vector<std::vector<double>>& points) {
    const atiyah::Configuration c = make_config(points);
    if (c.size() != 4) throw atiyah::InvalidSpecError("quad operations need exactly 4 points");
    for (const atiyah::Point& p : c.points()) {
        if (p.a != c[0].a) {
            throw atiyah::InvalidSpecError("quad operations need points in a horizontal plane");
        }
    }
    return atiyah::canonicalize_quad({c[0].z, c[1].z, c[2].z, c[3].z});
}

py::dict determinant_dict(const atiyah::AtiyahResult& r) {
    py::dict d;
    d["at"] = r.at;
    d["normalizer"] = r.normalizer;
    d["d"] = r.d_normalized;
    d["planar"] = r.planar;
    return d;
}

py::dict decomposition_dict(const atiyah::QuadDecomposition& dec) {
    py::dict d;
    d["p_scalar"] = dec.form.p_scalar;
    d["at_ang"] = dec.form.at_ang;
    d["at"] = dec.at;
    d["s1"] = dec.angular.s1;
    d["s2"] = dec.angular.s2;
    d["e_dimensionless"] = dec.angular.e_dimensionless;
    d["sin_half_sum"] = dec.angular.sin_half_sum;
    py::dict e;
    e["e12"] = dec.edges.e12;
    e["e23"] = dec.edges.e23;
    e["e34"] = dec.edges.e34;
    e["e14"] = dec.edges.e14;
    e["e13"] = dec.edges.e13;
    e["e24"] = dec.edges.e24;
    e["signed_sum"] = dec.edges.signed_sum();
    d["edges"] = e;
    py::dict areas;
    areas["a123"] = dec.edges.a123;
    areas["a124"] = dec.edges.a124;
    areas["a134"] = dec.edges.a134;
    areas["a234"] = dec.edges.a234;
    d["areas"] = areas;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Atiyah determinant computations, planar quad decomposition, verification sweeps";
    m.attr("__version__") = atiyah::kVersion;

    py::register_exception<atiyah::DegenerateError>(m, "DegenerateError");
    py::register_exception<atiyah::NotConvexError>(m, "NotConvexError");
    py::register_exception<atiyah::InvalidSpecError>(m, "InvalidSpecError");
    py::register_exception<atiyah::ParseError>(m, "ParseError");

    m.def(
        "atiyah_determinant",
        [](const std::vector<std::vector<double>>& points) {
            return determinant_dict(atiyah::atiyah_determinant(make_config(points)));
        },
        py::arg("points"),
        "Determinant, normalizer and D for 2..8 points given as (a, re, im) or (re, im) rows.");

    m.def(
        "check_conjectures",
        [](const std::vector<std::vector<double>>& points) {
            const atiyah::Configuration c = make_config(points);
            const atiyah::C1Result c1 = atiyah::check_c1(c);
            const atiyah::C2Result c2 = atiyah::check_c2(c);
            py::dict d;
            d["c1_pass"] = c1.pass;
            d["c1_margin"] = c1.margin;
            d["c2_pass"] = c2.pass;
            d["d_re"] = c2.re_d;
            d["d_abs"] = c2.abs_d;
            if (c.size() >= 3) {
                const atiyah::C3Result c3 = atiyah::check_c3(c);
                d["c3_pass"] = c3.pass;
                d["c3_margin"] = c3.margin;
            }
            return d;
        },
        py::arg("points"), "C1/C2/C3 predicates with margins.");

    m.def(
        "decompose",
        [](const std::vector<std::vector<double>>& points) {
            return decomposition_dict(atiyah::decomposed_at(make_quad(points)));
        },
        py::arg("points"),
        "Standard form P, At_ang, the S1/S2/E aggregates and edge terms of a convex planar quad.");

    m.def(
        "quad_angles",
        [](const std::vector<std::vector<double>>& points) {
            const atiyah::QuadAngles a = atiyah::quad_angles(make_quad(points));
            py::dict d;
            d["alpha"] = a.alpha;
            d["beta"] = a.beta;
            d["gamma"] = a.gamma;
            return d;
        },
        py::arg("points"));

    m.def(
        "verify_theorem1",
        [](const std::vector<std::vector<double>>& points, double tol) {
            const atiyah::Theorem1Report r = atiyah::verify_theorem1(make_quad(points), tol);
            py::dict d;
            d["at_direct"] = r.at_direct;
            d["at_decomposed"] = r.at_decomposed;
            d["rel_error"] = r.rel_error;
            d["pass"] = r.pass;
            return d;
        },
        py::arg("points"), py::arg("tol") = 1e-9);

    m.def("triangle_area", [](Complex p, Complex q, Complex r) {
        return atiyah::triangle_area(p, q, r);
    });

    m.def(
        "run_verification",
        [](const std::string& kind, std::uint64_t samples, std::uint64_t seed, double scale,
           double tol, int threads) {
            const auto k = atiyah::parse_kind(kind);
            if (!k) throw atiyah::InvalidSpecError("unknown kind '" + kind + "'");
            atiyah::SampleSpec spec;
            spec.kind = *k;
            spec.count = samples;
            spec.seed = seed;
            spec.scale = scale;
            atiyah::CheckTolerances tolerances;
            tolerances.identity_rel = tol;
            const atiyah::RunReport r = atiyah::run_verification(spec, tolerances, threads);
            py::dict d;
            d["kind"] = kind;
            d["samples"] = r.spec.count;
            d["seed"] = r.spec.seed;
            d["all_pass"] = r.all_pass();
            d["failure_count"] = r.failure_count;
            py::dict checks;
            for (unsigned c = 0; c < atiyah::kCheckCount; ++c) {
                py::dict stat;
                stat["applicable"] = r.checks[c].applicable;
                stat["passed"] = r.checks[c].passed;
                checks[std::string(atiyah::check_name(static_cast<atiyah::Check>(c))).c_str()] =
                    stat;
            }
            d["checks"] = checks;
            py::dict ext;
            ext["min_d"] = r.min_d;
            ext["min_at_ang_margin"] = r.min_at_ang_margin;
            ext["min_s1_margin"] = r.min_s1_margin;
            ext["min_cor2_margin"] = r.min_cor2_margin;
            ext["min_e_sum"] = r.min_e_sum;
            d["extremes"] = ext;
            py::list failures;
            for (const atiyah::Failure& f : r.failures) {
                py::dict fd;
                fd["index"] = f.index;
                fd["check"] = std::string(atiyah::check_name(f.check));
                fd["value"] = f.value;
                fd["points"] = dump_points(f.points);
                failures.append(fd);
            }
            d["failures"] = failures;
            d["elapsed_seconds"] = r.elapsed_seconds;
            return d;
        },
        py::arg("kind"), py::arg("samples"), py::arg("seed") = 0, py::arg("scale") = 1.0,
        py::arg("tol") = 1e-9, py::arg("threads") = 1,
        "Seeded Monte Carlo sweep over all applicable checks.");

    m.def(
        "sample",
        [](const std::string& kind, std::uint64_t count, std::uint64_t seed, double scale) {
            const auto k = atiyah::parse_kind(kind);
            if (!k) throw atiyah::InvalidSpecError("unknown kind '" + kind + "'");
            atiyah::SampleSpec spec;
            spec.kind = *k;
            spec.count = count;
            spec.seed = seed;
            spec.scale = scale;
            std::vector<std::vector<std::vector<double>>> out;
            out.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) {
                out.push_back(dump_points(atiyah::sample_at(spec, i).points()));
            }
            return out;
        },
        py::arg("kind"), py::arg("count"), py::arg("seed") = 0, py::arg("scale") = 1.0);

    m.def(
        "minimize",
        [](const std::string& objective, const std::vector<std::vector<double>>& start,
           std::uint64_t max_iter, double tol) {
            atiyah::MinimizeSpec spec;
            if (objective == "D") {
                spec.objective = atiyah::Objective::NormalizedD;
            } else if (objective == "at_ang") {
                spec.objective = atiyah::Objective::AtAng;
            } else {
                throw atiyah::InvalidSpecError("objective must be D or at_ang");
            }
            const atiyah::Configuration c = make_config(start);
            if (c.size() != 4) throw atiyah::InvalidSpecError("start needs 4 points");
            for (int i = 0; i < 4; ++i) spec.start[i] = c[i].z;
            spec.max_iterations = max_iter;
            spec.tolerance = tol;
            const atiyah::MinimizeResult r = atiyah::minimize_d(spec);
            py::dict d;
            d["best_value"] = r.best_value;
            std::vector<std::vector<double>> quad;
            for (const Complex& z : r.best_quad) quad.push_back({0.0, z.real(), z.imag()});
            d["best_quad"] = quad;
            d["evaluations"] = r.evaluations;
            d["converged"] = r.converged;
            std::vector<std::pair<std::uint64_t, double>> trace;
            trace.reserve(r.trace.size());
            for (const atiyah::TracePoint& t : r.trace) trace.emplace_back(t.iteration, t.best);
            d["trace"] = trace;
            return d;
        },
        py::arg("objective"), py::arg("start"), py::arg("max_iter") = 2000,
        py::arg("tol") = 1e-10, "Nelder-Mead descent over the similarity-reduced quad space.");

    m.def("fixture", [](const std::string& name) { return dump_points(atiyah::fixture(name)); });
    m.def("fixture_names", &atiyah::fixture_names);
    m.def("parse_points", [](const std::string& text) {
        const std::vector<atiyah::Point> pts = atiyah::parse_points_text(text);
        return dump_points(pts);
    });
    m.def("format_points", [](const std::vector<std::vector<double>>& points) {
        const atiyah::Configuration c = make_config(points);
        return atiyah::format_points(c.points());
    });
}
