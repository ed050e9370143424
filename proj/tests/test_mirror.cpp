#include <doctest.h>

#include "qkgr/mirror.hpp"

using namespace qkgr;

namespace {

Real tol(int e) { return boost::multiprecision::pow(Real(10), e); }

}  // namespace

TEST_CASE("q-gamma evaluation identity") {
    set_precision(50);
    QIntegralSpec s;
    s.lam_ratio = Real(3);
    s.q = Real(2);
    s.digits = 50;
    QIntResult r = qint_plus(s);
    Real closed = qgamma_plus_value(Real(3), Real(2), 50);
    CHECK((r.value - Cplx(closed)).abs() < tol(-12));

    // only the d = 0 term survives for huge Lambda
    s.lam_ratio = Real(1000000);
    CHECK((qint_plus(s).value - Cplx(euler_qpochhammer(Real(2), 50))).abs() < tol(-5));

    QIntegralSpec bad = s;
    bad.q = Real(1);
    CHECK_THROWS_AS(qint_plus(bad), arith_error);
}

TEST_CASE("plus integral d-recursion and its convergence domain") {
    set_precision(50);
    auto value = [](int d, const Real& R, const Real& q) {
        QIntegralSpec s;
        s.d = d;
        s.lam_ratio = R;
        s.q = q;
        s.digits = 50;
        return qint_plus(s).value;
    };
    // paper-domain point: q = 2, Lambda/Lambda' = 1/3 converges only for d <= 1
    Cplx lhs = (Cplx(Real(1)) - Cplx(Real(2) / 3)) * value(1, Real(3), Real(2));
    CHECK((lhs - value(0, Real(3), Real(2))).abs() < tol(-12));
    {
        QIntegralSpec s;
        s.d = 2;
        s.lam_ratio = Real(3);
        s.q = Real(2);
        s.digits = 50;
        CHECK_THROWS_AS(qint_plus(s), arith_error);  // |q^d/R| >= 1
    }
    // wide-domain run for d <= 6
    Real R(100);
    for (int d = 1; d <= 6; ++d) {
        Cplx l = (Cplx(Real(1)) - Cplx(boost::multiprecision::pow(Real(2), d) / R)) *
                 value(d, R, Real(2));
        CHECK((l - value(d - 1, R, Real(2))).abs() / value(d - 1, R, Real(2)).abs() < tol(-12));
    }
    // the continued value agrees with the lattice sum inside the domain
    CHECK((qint_plus_continued(1, Real(3), Real(2), 50) - value(1, Real(3), Real(2))).abs() <
          tol(-40));
}

TEST_CASE("minus integral translation and shift guards") {
    set_precision(50);
    QIntegralSpec s;
    s.variant = QIntegralSpec::Variant::minus;
    s.d = 1;
    s.lam_ratio = Real(3);
    s.q = Real(2);
    s.digits = 50;
    Cplx v = qint_minus(s).value;
    QIntegralSpec sq = s;
    sq.lam_ratio = Real(6);
    CHECK((qint_minus(sq).value - (Cplx(Real(1)) - Cplx(Real(3))) * v).abs() / v.abs() < tol(-12));

    QIntegralSpec pole = s;
    pole.shift_A = Real(1);
    CHECK_THROWS_WITH_AS(qint_minus(pole), "shift A hits pole", arith_error);

    QIntegralSpec div = s;
    div.lam_ratio = Real(1) / 3;  // integrand grows along the lattice
    CHECK_THROWS_AS(qint_minus(div), arith_error);

    // d-recursion: (1 - q^{1-d} M) I^{(d)} = I^{(d-1)}
    Real M(1000);
    auto value = [&](int d) {
        QIntegralSpec t = s;
        t.d = d;
        t.lam_ratio = M;
        return qint_minus(t).value;
    };
    for (int d = 1; d <= 6; ++d) {
        Cplx lhs = (Cplx(Real(1)) - Cplx(boost::multiprecision::pow(Real(2), 1 - d) * M)) * value(d);
        CHECK((lhs - value(d - 1)).abs() / value(d - 1).abs() < tol(-12));
    }
    CHECK((qint_minus_continued(1, Real(3), Real(2), Real(-1), 50) - v).abs() < tol(-40));
}

TEST_CASE("tail estimates control truncation") {
    set_precision(50);
    for (double qv : {1.5, 2.0, 4.0}) {
        QIntegralSpec s;
        s.lam_ratio = Real(7);
        s.q = Real(qv);
        s.digits = 50;
        s.tolerance = tol(-25);
        QIntResult a = qint_plus(s);
        QIntegralSpec s2 = s;
        s2.tolerance = s.tolerance / 2;
        QIntResult b = qint_plus(s2);
        CHECK((a.value - b.value).abs() <= a.tail_bound);
    }
}

TEST_CASE("model reduction of chart integrals") {
    auto r1 = verify_model_reduction(1, 2, {1}, {Real(5), Real(7)}, Real(1), Real(2), 50);
    CHECK(r1.rel_error < tol(-10));
    auto r0 = verify_model_reduction(1, 2, {0}, {Real(5), Real(7)}, Real(1), Real(2), 50);
    CHECK(r0.rel_error == 0);
    auto r2 = verify_model_reduction(2, 2, {1, 0}, {Real(5), Real(7)}, Real(1) / 2, Real(2), 50);
    CHECK(r2.rel_error < tol(-8));
}

TEST_CASE("finite difference systems") {
    for (auto& c : verify_difference_system(GrassmannianCtx(1, 1), false, 4)) CHECK(c.pass);
    for (auto& c : verify_difference_system(GrassmannianCtx(1, 3), false, 3)) CHECK(c.pass);
    for (auto& c : verify_difference_system(GrassmannianCtx(2, 2), true, 2)) CHECK(c.pass);
}

TEST_CASE("critical points of the superpotential") {
    MirrorConfig cfg;
    cfg.Q = Cplx(Real(1));
    cfg.digits = 50;

    cfg.n = 1;
    cfg.N = 3;
    CHECK(critical_points(cfg).orbits.size() == 3);
    cfg.n = 2;
    cfg.N = 4;
    CHECK(critical_points(cfg).orbits.size() == 6);
    cfg.n = 2;
    cfg.N = 2;
    CHECK(critical_points(cfg).orbits.size() == 1);
    cfg.n = 3;
    cfg.N = 3;
    CHECK(critical_points(cfg).orbits.size() == 1);

    cfg.n = 1;
    cfg.N = 1;
    CriticalSet cs = critical_points(cfg);
    MirrorConfiguration conf = critical_configuration(cfg, cs, cs.orbits.front());
    CHECK((conf.p[0] - Cplx(Real(1))).abs() < tol(-40));
    CHECK(gradient_norm(superpotential_gradient(cfg, conf)) < tol(-40));
}

TEST_CASE("gradient vanishes at critical configurations and detects perturbations") {
    MirrorConfig cfg;
    cfg.n = 2;
    cfg.N = 4;
    cfg.Q = Cplx(Real(1));
    cfg.digits = 50;
    CriticalSet cs = critical_points(cfg);
    for (const auto& orbit : cs.orbits) {
        MirrorConfiguration conf = critical_configuration(cfg, cs, orbit);
        CHECK(gradient_norm(superpotential_gradient(cfg, conf)) < tol(-10));
    }
    MirrorConfiguration pert = critical_configuration(cfg, cs, cs.orbits.front());
    for (auto& row : pert.x)
        for (auto& v : row) v = v * Cplx(Real(101) / 100);
    CHECK(gradient_norm(superpotential_gradient(cfg, pert)) > tol(-4));
}

TEST_CASE("analytic gradient matches finite differences") {
    MirrorConfig cfg;
    cfg.n = 2;
    cfg.N = 4;
    cfg.Q = Cplx(Real(1));
    cfg.digits = 50;
    CriticalSet cs = critical_points(cfg);
    MirrorConfiguration conf = critical_configuration(cfg, cs, cs.orbits.at(2));
    std::vector<Cplx> analytic = superpotential_gradient(cfg, conf, false);
    Real h = tol(-12);
    std::size_t comp = 0;
    Real worst(0);
    auto fd_check = [&](auto bump) {
        MirrorConfiguration up = conf, dn = conf;
        bump(up, Cplx(h));
        bump(dn, Cplx(Real(0)) - Cplx(h));
        Cplx fd = (superpotential_value(cfg, up, conf) - superpotential_value(cfg, dn, conf)) /
                  Cplx(2 * h);
        Real scale = analytic[comp].abs();
        Real err = (fd - analytic[comp]).abs() / (scale > Real(1) ? scale : Real(1));
        if (err > worst) worst = err;
        ++comp;
    };
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.N; ++j)
            fd_check([i, j](MirrorConfiguration& c, const Cplx& dz) {
                c.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + dz;
            });
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, v] : conf.y) keys.push_back(k);
    for (const auto& k : keys)
        fd_check([&k](MirrorConfiguration& c, const Cplx& dz) { c.y[k] = c.y[k] + dz; });
    for (int i = 0; i < cfg.n; ++i)
        fd_check([i](MirrorConfiguration& c, const Cplx& dz) {
            c.p[static_cast<std::size_t>(i)] = c.p[static_cast<std::size_t>(i)] + dz;
        });
    CHECK(worst < tol(-6));
}

TEST_CASE("ring count report") {
    MirrorConfig cfg;
    cfg.n = 2;
    cfg.N = 5;
    cfg.Q = Cplx(Real(1));
    cfg.digits = 50;
    RingCountReport rep = verify_ring_count(cfg);
    CHECK(rep.pass);
    CHECK(rep.expected == 10);
    CHECK(rep.orbit_count == 10);
}
