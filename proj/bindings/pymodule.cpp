#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qkgr/classparse.hpp"
#include "qkgr/mirror.hpp"
#include "qkgr/suites.hpp"

namespace py = pybind11;

namespace {

std::string series_coeff_json(const std::string& kind_name, int level, int n, int N,
                              const std::vector<int>& d) {
    auto kind = qkgr::SeriesKind::parse(kind_name, level);
    if (!kind) throw std::invalid_argument("unknown series kind " + kind_name);
    return qkgr::factored_to_json(qkgr::series_coeff(*kind, qkgr::GrassmannianCtx(n, N), d));
}

std::string series_json(const std::string& kind_name, int level, int n, int N, int D) {
    auto kind = qkgr::SeriesKind::parse(kind_name, level);
    if (!kind) throw std::invalid_argument("unknown series kind " + kind_name);
    qkgr::GrassmannianCtx ctx(n, N);
    return qkgr::series_to_json(qkgr::build_series(*kind, ctx, D), *kind);
}

int q_degree_gap_py(const std::string& kind_name, int level, int n, int N,
                    const std::vector<int>& d) {
    auto kind = qkgr::SeriesKind::parse(kind_name, level);
    if (!kind) throw std::invalid_argument("unknown series kind " + kind_name);
    return qkgr::q_degree_gap(*kind, qkgr::GrassmannianCtx(n, N), d);
}

std::string pairing(int n, int N, const std::string& expr) {
    qkgr::GrassmannianCtx ctx(n, N);
    return qkgr::pairing_nonequivariant(ctx, qkgr::parse_class_expr(expr, n)).str();
}

std::string pairing_equivariant_py(int n, int N, const std::string& expr) {
    qkgr::GrassmannianCtx ctx(n, N);
    return qkgr::pairing_equivariant(ctx, qkgr::parse_class_expr(expr, n)).str();
}

std::string run_suite_json(const std::string& name, std::uint64_t seed, int precision, int jobs) {
    if (!qkgr::is_suite_name(name)) throw std::invalid_argument("unknown suite " + name);
    qkgr::SuiteOptions opt;
    opt.seed = seed;
    opt.precision = precision;
    opt.jobs = jobs;
    auto results = qkgr::run_suites(name, opt);
    return qkgr::report_to_json("verify --suite " + name, opt, results);
}

std::string qint_plus_py(int d, const std::string& lam_ratio, const std::string& q, int digits) {
    qkgr::set_precision(digits);
    qkgr::QIntegralSpec s;
    s.d = d;
    s.lam_ratio = qkgr::Real(lam_ratio);
    s.q = qkgr::Real(q);
    s.digits = digits;
    return qkgr::qint_plus(s).value.re.str(static_cast<unsigned>(digits));
}

std::string qint_minus_py(int d, const std::string& lam_ratio, const std::string& q,
                          const std::string& shift_a, int digits) {
    qkgr::set_precision(digits);
    qkgr::QIntegralSpec s;
    s.variant = qkgr::QIntegralSpec::Variant::minus;
    s.d = d;
    s.lam_ratio = qkgr::Real(lam_ratio);
    s.q = qkgr::Real(q);
    s.shift_A = qkgr::Real(shift_a);
    s.digits = digits;
    return qkgr::qint_minus(s).value.str(static_cast<unsigned>(digits));
}

int critical_orbit_count(int n, int N, int digits) {
    qkgr::MirrorConfig cfg;
    cfg.n = n;
    cfg.N = N;
    cfg.Q = qkgr::Cplx(qkgr::Real(1));
    cfg.digits = digits;
    auto rep = qkgr::verify_ring_count(cfg);
    if (!rep.pass) throw std::runtime_error("critical-point verification failed");
    return rep.orbit_count;
}

std::string critical_gradient_norm(int n, int N, int digits) {
    qkgr::MirrorConfig cfg;
    cfg.n = n;
    cfg.N = N;
    cfg.Q = qkgr::Cplx(qkgr::Real(1));
    cfg.digits = digits;
    auto cs = qkgr::critical_points(cfg);
    qkgr::Real worst(0);
    for (const auto& orbit : cs.orbits) {
        auto conf = qkgr::critical_configuration(cfg, cs, orbit);
        qkgr::Real nrm = qkgr::gradient_norm(qkgr::superpotential_gradient(cfg, conf));
        if (nrm > worst) worst = nrm;
    }
    return worst.str(20);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-hypergeometric series and verification suites for quantum K-theory of "
              "grassmannians";

    m.def("series_coeff_json", &series_coeff_json, py::arg("kind"), py::arg("level"), py::arg("n"),
          py::arg("N"), py::arg("d"),
          "Canonical JSON of the factored coefficient of Q^d.");
    m.def("series_json", &series_json, py::arg("kind"), py::arg("level"), py::arg("n"),
          py::arg("N"), py::arg("D"), "Canonical JSON of all coefficients with |d| <= D.");
    m.def("q_degree_gap", &q_degree_gap_py, py::arg("kind"), py::arg("level"), py::arg("n"),
          py::arg("N"), py::arg("d"));
    m.def("pairing", &pairing, py::arg("n"), py::arg("N"), py::arg("expr"),
          "Euler characteristic of a symmetric Laurent class, as a decimal string.");
    m.def("pairing_equivariant", &pairing_equivariant_py, py::arg("n"), py::arg("N"),
          py::arg("expr"), "Equivariant pairing as a Laurent polynomial string.");
    m.def("run_suite", &run_suite_json, py::arg("name"), py::arg("seed") = 20200818,
          py::arg("precision") = 50, py::arg("jobs") = 1,
          "Run a verification suite; returns the JSON report.");
    m.def("qint_plus", &qint_plus_py, py::arg("d"), py::arg("lam_ratio"), py::arg("q"),
          py::arg("digits") = 50);
    m.def("qint_minus", &qint_minus_py, py::arg("d"), py::arg("lam_ratio"), py::arg("q"),
          py::arg("shift_a") = "-1", py::arg("digits") = 50);
    m.def("critical_orbit_count", &critical_orbit_count, py::arg("n"), py::arg("N"),
          py::arg("digits") = 50);
    m.def("critical_gradient_norm", &critical_gradient_norm, py::arg("n"), py::arg("N"),
          py::arg("digits") = 50);
}
