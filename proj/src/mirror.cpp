#include "qkgr/mirror.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qkgr {

namespace {

Real pi_value() { return boost::multiprecision::atan2(Real(0), Real(-1)); }

}  // namespace

Cplx Cplx::operator/(const Cplx& o) const {
    Real n = o.re * o.re + o.im * o.im;
    if (n == 0) throw arith_error("complex division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

Real Cplx::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

std::string Cplx::str(unsigned digits) const {
    std::ostringstream os;
    os << re.str(digits) << (im < 0 ? "" : "+") << im.str(digits) << "i";
    return os.str();
}

Cplx clog(const Cplx& z) {
    if (z.re == 0 && z.im == 0) throw arith_error("log of zero");
    return {boost::multiprecision::log(z.abs()), boost::multiprecision::atan2(z.im, z.re)};
}

Cplx cexp(const Cplx& z) {
    Real m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Cplx cpow(const Cplx& base, const Real& e) {
    Cplx l = clog(base);
    return cexp({l.re * e, l.im * e});
}

void set_precision(int digits) {
    if (digits < 10) throw arith_error("precision below 10 digits");
    Real::default_precision(static_cast<unsigned>(digits));
}

namespace {

Real eps_for(int digits) {
    return boost::multiprecision::pow(Real(10), -(digits + 10));
}

// prod_{m>=1} (1 - z / q^m), |q| > 1
Cplx tail_product_from_one(const Cplx& z, const Real& q, const Real& eps) {
    Cplx acc(Real(1));
    Real scale = z.abs();
    Real qm(1);
    for (int m = 1;; ++m) {
        qm *= q;
        if (scale / qm < eps) break;
        acc = acc * (Cplx(Real(1)) - z / Cplx(qm));
        if (m > 2000000) throw arith_error("product truncation failed");
    }
    return acc;
}

// prod_{m>=0} (1 - z / q^m)
Cplx tail_product_from_zero(const Cplx& z, const Real& q, const Real& eps) {
    return (Cplx(Real(1)) - z) * tail_product_from_one(z, q, eps);
}

void check_q(const Real& q) {
    if (boost::multiprecision::abs(q) < Real(11) / 10)
        throw arith_error("need |q| >= 1.1 for Jackson integrals");
}

}  // namespace

QIntResult qint_plus(const QIntegralSpec& spec) {
    set_precision(spec.digits);
    check_q(spec.q);
    if (spec.lam_ratio == 0) throw arith_error("lam_ratio must be nonzero");
    Real eps = spec.tolerance > 0 ? Real(spec.tolerance) : eps_for(spec.digits);

    // terms at X = q^{-t}, t >= 0 (the integrand vanishes on the rest of the lattice):
    // (q^d / R)^t * prod_{m > t} (1 - q^{-m})
    Real rho = boost::multiprecision::abs(boost::multiprecision::pow(spec.q, spec.d) / spec.lam_ratio);
    if (rho >= Real(99) / 100) throw arith_error("nonconvergent tail: |q^d/R| >= 1");

    Real qinv = Real(1) / spec.q;
    // running tail product P_t = prod_{m>t}(1-q^{-m}), starting from P_0
    Cplx p_t = tail_product_from_one(Cplx(Real(1)), spec.q, eps);

    Cplx sum(Real(0));
    Cplx ratio_step = Cplx(boost::multiprecision::pow(spec.q, spec.d)) / Cplx(spec.lam_ratio);
    Cplx geom(Real(1));
    Real last_abs(0);
    long t = 0;
    for (;; ++t) {
        if (t > spec.max_terms) throw arith_error("lattice sum exceeded max_terms");
        Cplx term = geom * p_t;
        sum = sum + term;
        last_abs = term.abs();
        if (last_abs < eps && t > 2) break;
        // advance: P_{t+1} = P_t / (1 - q^{-(t+1)})
        p_t = p_t / (Cplx(Real(1)) - Cplx(boost::multiprecision::pow(qinv, t + 1)));
        geom = geom * ratio_step;
    }
    QIntResult r;
    r.value = sum;
    r.tail_bound = last_abs * rho / (Real(1) - rho) + eps;
    r.terms_used = t + 1;
    return r;
}

Real qgamma_plus_value(const Real& lam, const Real& q, int digits) {
    set_precision(digits);
    check_q(q);
    Real eps = eps_for(digits);
    Cplx num = tail_product_from_one(Cplx(Real(1)), q, eps);      // prod_{m>=1}(1-q^{-m})
    Cplx den = tail_product_from_zero(Cplx(Real(1) / lam), q, eps);
    return (num / den).re;
}

Real euler_qpochhammer(const Real& q, int digits) {
    set_precision(digits);
    check_q(q);
    return tail_product_from_one(Cplx(Real(1)), q, eps_for(digits)).re;
}

Cplx qint_plus_continued(int d, const Real& R, const Real& q, int digits) {
    set_precision(digits);
    check_q(q);
    // I_plus^{(d)}(R) = qgamma(R / q^d): products converge for any argument.
    Real eps = eps_for(digits);
    Real lam_eff = R / boost::multiprecision::pow(q, d);
    Cplx num = tail_product_from_one(Cplx(Real(1)), q, eps);
    Cplx den = tail_product_from_zero(Cplx(Real(1) / lam_eff), q, eps);
    return num / den;
}

QIntResult qint_minus(const QIntegralSpec& spec) {
    set_precision(spec.digits);
    check_q(spec.q);
    const Real& A = spec.shift_A;
    if (A == 0) throw arith_error("shift A must be nonzero");
    Real eps = spec.tolerance > 0 ? Real(spec.tolerance) : eps_for(spec.digits);

    // reject lattices through the poles Y = q^m, m >= 0 as well as A = q^k in general
    if (A > 0) {
        Real lg = boost::multiprecision::log(A) / boost::multiprecision::log(spec.q);
        Real nearest = boost::multiprecision::round(lg);
        if (boost::multiprecision::abs(lg - nearest) < Real(1) / 1000000)
            throw arith_error("shift A hits pole");
    }

    // exponent c with q^c = M
    if (spec.lam_ratio <= 0)
        throw arith_error("minus-variant lam_ratio must be positive for a real exponent");
    Real c = boost::multiprecision::log(spec.lam_ratio) / boost::multiprecision::log(spec.q);
    Real expnt = Real(1 - spec.d) + c;

    // convergence towards Y -> 0: |q^{d-1}/M| < 1
    Real rho = boost::multiprecision::abs(boost::multiprecision::pow(spec.q, spec.d - 1) / spec.lam_ratio);
    if (rho >= Real(99) / 100) throw arith_error("nonconvergent tail: |q^{d-1}/M| >= 1");

    auto term_at = [&](long t) {
        Cplx y = Cplx(boost::multiprecision::pow(Real(1) / spec.q, static_cast<int>(t))) / Cplx(A);
        Cplx num = cpow(y, expnt);
        Cplx den = tail_product_from_zero(y, spec.q, eps);
        if (den.abs() == 0) throw arith_error("shift A hits pole");
        return num / den;
    };

    Cplx sum(Real(0));
    Real last_abs(0);
    long used = 0;
    for (long t = 0;; ++t) {  // Y -> 0 direction
        if (t > spec.max_terms) throw arith_error("lattice sum exceeded max_terms");
        Cplx term = term_at(t);
        sum = sum + term;
        ++used;
        last_abs = term.abs();
        if (last_abs < eps && t > 2) break;
    }
    Real tail = last_abs * rho / (Real(1) - rho);
    Real prev(0);
    for (long t = -1;; --t) {  // |Y| -> infinity direction; superfast decay
        if (-t > spec.max_terms) throw arith_error("lattice sum exceeded max_terms");
        Cplx term = term_at(t);
        sum = sum + term;
        ++used;
        Real a = term.abs();
        if (a < eps && -t > 2) break;
        if (prev > 0 && a > prev * 4 && -t > 50)
            throw arith_error("nonconvergent tail in the large-Y direction");
        prev = a;
    }
    QIntResult r;
    r.value = sum;
    r.tail_bound = tail + eps * 2;
    r.terms_used = used;
    return r;
}

Cplx qint_minus_continued(int d, const Real& M, const Real& q, const Real& A, int digits) {
    set_precision(digits);
    check_q(q);
    // I_minus^{(d)}(M) equals the basic minus integral at lam = q^{1-d} M; continue
    // small lam by lam -> q^k lam, dividing by prod_{j=0}^{k-1}(1 - q^j lam).
    Real lam = boost::multiprecision::pow(q, 1 - d) * M;
    Cplx corr(Real(1));
    int k = 0;
    while (boost::multiprecision::abs(lam) <= Real(3) / 2) {
        corr = corr * (Cplx(Real(1)) - Cplx(lam));
        lam *= q;
        ++k;
        if (k > 100000) throw arith_error("continuation failed");
    }
    QIntegralSpec s;
    s.variant = QIntegralSpec::Variant::minus;
    s.d = 1;  // basic integrand Y^{log lam / log q}
    s.lam_ratio = lam;
    s.q = q;
    s.shift_A = A;
    s.digits = digits;
    QIntResult base = qint_minus(s);
    return base.value / corr;
}

ModelReductionReport verify_model_reduction(int n, int N, const std::vector<int>& d,
                                            const std::vector<Real>& lambdas, const Real& lambda0,
                                            const Real& q, int digits) {
    set_precision(digits);
    if (static_cast<int>(lambdas.size()) != N) throw arith_error("need N lambda values");
    if (static_cast<int>(d.size()) != n) throw arith_error("need n degrees");
    auto di = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
    auto lam = [&](int j) { return lambdas[static_cast<std::size_t>(j - 1)]; };

    // lhs: product over the chart variables of 1-d integral ratios I^{(d)}/I^{(0)}
    Cplx lhs(Real(1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            Real R = lam(j) / lam(i);
            Cplx num = qint_plus_continued(di(i), R, q, digits);
            Cplx den = qint_plus_continued(0, R, q, digits);
            lhs = lhs * (num / den);
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int ip = 1; ip <= n; ++ip) {
            if (i == ip) continue;
            Real M = lambda0 * lam(i) / lam(ip);
            Cplx num = qint_minus_continued(di(ip) - di(i), M, q, Real(-1), digits);
            Cplx den = qint_minus_continued(0, M, q, Real(-1), digits);
            lhs = lhs * (num / den);
        }
    }

    // rhs: closed form 1/prod_{i != j} prod_{m<=d_i}(1-q^m L_i/L_j) times the
    // finitized L0-ratios over the root pairs
    Cplx rhs(Real(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            for (int m = 1; m <= di(i); ++m)
                rhs = rhs / Cplx(Real(1) - boost::multiprecision::pow(q, m) * lam(i) / lam(j));
        }
    for (int i = 1; i <= n; ++i)
        for (int ip = 1; ip <= n; ++ip) {
            if (i == ip) continue;
            int a = di(i) - di(ip);
            Real M = lambda0 * lam(i) / lam(ip);
            if (a > 0)
                for (int m = 1; m <= a; ++m)
                    rhs = rhs * Cplx(Real(1) - boost::multiprecision::pow(q, m) * M);
            else
                for (int m = a + 1; m <= 0; ++m)
                    rhs = rhs / Cplx(Real(1) - boost::multiprecision::pow(q, m) * M);
        }

    ModelReductionReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    Real denom = rhs.abs();
    rep.rel_error = denom == 0 ? (lhs - rhs).abs() : (lhs - rhs).abs() / denom;
    return rep;
}

std::vector<CheckResult> verify_difference_system(const GrassmannianCtx& ctx, bool equivariant,
                                                  int truncation) {
    std::vector<CheckResult> out;
    SeriesKind kind(equivariant ? SeriesTag::J_PiGT : SeriesTag::J_nonequiv);
    NovikovSeries s = build_series(kind, ctx, truncation);
    const int n = ctx.n, N = ctx.N;
    std::ostringstream pref;
    pref << "diffeq " << (equivariant ? "equivariant" : "nonequivariant") << " n=" << n
         << " N=" << N;

    for (int i = 1; i <= n; ++i) {
        bool ok = true;
        std::string failure;
        for (const auto& [d, cd] : s.coeffs) {
            auto dk = [&](int k) { return d[static_cast<std::size_t>(k - 1)]; };
            FactoredCoeff lhs = cd;
            for (int ip = 1; ip <= n; ++ip) {
                if (ip == i) continue;
                VarExp mono{{pvar(ip), 1}, {pvar(i), -1}};
                if (equivariant) mono["L0"] = 1;
                lhs.mul_factor(1 + dk(ip) - dk(i), mono, 1);
            }
            if (equivariant) {
                for (int j = 1; j <= N; ++j)
                    lhs.mul_factor(dk(i), VarExp{{pvar(i), 1}, {lvar(j), -1}}, 1);
            } else {
                lhs.mul_factor(dk(i), VarExp{{pvar(i), 1}}, N);
            }

            if (dk(i) >= 1) {
                std::vector<int> db = d;
                db[static_cast<std::size_t>(i - 1)] -= 1;
                FactoredCoeff rhs = s.coeffs.at(db);
                for (int ip = 1; ip <= n; ++ip) {
                    if (ip == i) continue;
                    VarExp mono{{pvar(i), 1}, {pvar(ip), -1}};
                    if (equivariant) mono["L0"] = 1;
                    rhs.mul_factor(dk(i) - dk(ip), mono, 1);
                }
                if (!(lhs == rhs)) {
                    ok = false;
                    failure = "mismatch at d=" + std::to_string(dk(1));
                }
            } else {
                // coefficient of Q^d on the right vanishes; the left side must lie
                // in the defining ideal of the K-ring, visible as the full product
                // of (1 - P_i/L_j) factors (respectively (1-P_i)^N).
                auto has = [&](const VarExp& mono, int mult) {
                    FactoredCoeff probe;
                    probe.mul_factor(0, mono, 1);
                    const QFactor& key = probe.factors().begin()->first;
                    auto it = lhs.factors().find(key);
                    return it != lhs.factors().end() && it->second >= mult;
                };
                bool member = true;
                if (equivariant) {
                    for (int j = 1; j <= N; ++j)
                        member = member && has(VarExp{{pvar(i), 1}, {lvar(j), -1}}, 1);
                } else {
                    member = has(VarExp{{pvar(i), 1}}, N);
                }
                if (!member) {
                    ok = false;
                    failure = "boundary term not in the defining ideal";
                }
            }
        }
        std::ostringstream key;
        key << pref.str() << " axis=" << i;
        out.push_back({key.str(), ok, ok ? "identity holds at all stored degrees" : failure});
    }
    return out;
}

CriticalSet critical_points(const MirrorConfig& cfg) {
    set_precision(cfg.digits);
    if (cfg.Q.abs() == 0) throw arith_error("Q must be nonzero");
    CriticalSet cs;
    // p^N = (-1)^{n+1} Q
    Cplx target = cfg.Q;
    if (cfg.n % 2 == 0) target = Cplx(Real(0)) - target;
    Cplx lt = clog(target);
    Real pi = pi_value();
    for (int k = 0; k < cfg.N; ++k) {
        Cplx e{lt.re / cfg.N, (lt.im + 2 * pi * k) / cfg.N};
        cs.roots.push_back(cexp(e));
    }
    // cluster equal roots (paranoia; the N-th roots are distinct for Q != 0)
    Real tol = cfg.root_tol > 0 ? cfg.root_tol : boost::multiprecision::pow(Real(10), -8);
    for (std::size_t a = 0; a < cs.roots.size(); ++a)
        for (std::size_t b = a + 1; b < cs.roots.size(); ++b)
            if ((cs.roots[a] - cs.roots[b]).abs() < tol)
                throw arith_error("repeated critical roots");

    std::vector<int> idx(static_cast<std::size_t>(cfg.n));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == cfg.n) {
            cs.orbits.push_back(idx);
            return;
        }
        for (int v = start; v < cfg.N; ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return cs;
}

MirrorConfiguration critical_configuration(const MirrorConfig& cfg, const CriticalSet& cs,
                                           const std::vector<int>& subset) {
    MirrorConfiguration conf;
    for (int i : subset) conf.p.push_back(cs.roots[static_cast<std::size_t>(i)]);
    conf.x.assign(static_cast<std::size_t>(cfg.n), std::vector<Cplx>());
    for (int i = 0; i < cfg.n; ++i)
        conf.x[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(cfg.N),
                                                   conf.p[static_cast<std::size_t>(i)]);
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j)
            if (i != j)
                conf.y[{i, j}] =
                    conf.p[static_cast<std::size_t>(i)] - conf.p[static_cast<std::size_t>(j)];
    return conf;
}

std::vector<Cplx> superpotential_gradient(const MirrorConfig& cfg,
                                          const MirrorConfiguration& conf,
                                          bool reduce_multiplier_branch) {
    set_precision(cfg.digits);
    std::vector<Cplx> g;
    const Cplx one(Real(1));
    for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.N; ++j) {
            const Cplx& x = conf.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (x.abs() == 0) throw arith_error("zero coordinate");
            g.push_back(one - conf.p[static_cast<std::size_t>(i)] / x);
        }
    for (const auto& [key, y] : conf.y) {
        if (y.abs() == 0) throw arith_error("zero coordinate");
        const Cplx diff = conf.p[static_cast<std::size_t>(key.first)] -
                          conf.p[static_cast<std::size_t>(key.second)];
        g.push_back(Cplx(Real(0)) - one + diff / y);
    }
    for (int i = 0; i < cfg.n; ++i) {
        if (reduce_multiplier_branch) {
            // principal log of the multiplicative constraint ratio
            Cplx w(Real(1));
            for (int j = 0; j < cfg.N; ++j)
                w = w * conf.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int ip = 0; ip < cfg.n; ++ip) {
                if (ip == i) continue;
                w = w * conf.y.at({ip, i}) / conf.y.at({i, ip});
            }
            w = w / cfg.Q;
            g.push_back(Cplx(Real(0)) - clog(w));
        } else {
            Cplx k(Real(0));
            for (int j = 0; j < cfg.N; ++j)
                k = k + clog(conf.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            for (int ip = 0; ip < cfg.n; ++ip) {
                if (ip == i) continue;
                k = k - clog(conf.y.at({i, ip})) + clog(conf.y.at({ip, i}));
            }
            k = k - clog(cfg.Q);
            g.push_back(Cplx(Real(0)) - k);
        }
    }
    return g;
}

Real gradient_norm(const std::vector<Cplx>& g) {
    Real s(0);
    for (const auto& z : g) s += z.re * z.re + z.im * z.im;
    return boost::multiprecision::sqrt(s);
}

Cplx superpotential_value(const MirrorConfig& cfg, const MirrorConfiguration& conf,
                          const MirrorConfiguration& base) {
    set_precision(cfg.digits);
    auto fixed_log = [](const Cplx& z, const Cplx& zb) {
        return clog(zb) + clog(z / zb);  // branch through the base point
    };
    Cplx w(Real(0));
    for (int i = 0; i < static_cast<int>(conf.x.size()); ++i)
        for (int j = 0; j < static_cast<int>(conf.x[static_cast<std::size_t>(i)].size()); ++j)
            w = w + conf.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (const auto& [key, y] : conf.y) w = w - y;
    for (int i = 0; i < static_cast<int>(conf.p.size()); ++i) {
        Cplx k(Real(0));
        for (int j = 0; j < static_cast<int>(conf.x[static_cast<std::size_t>(i)].size()); ++j)
            k = k + fixed_log(conf.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                              base.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        for (const auto& [key, y] : conf.y) {
            if (key.first == i)
                k = k - fixed_log(y, base.y.at(key));
            else if (key.second == i)
                k = k + fixed_log(y, base.y.at(key));
        }
        k = k - clog(cfg.Q);
        w = w - conf.p[static_cast<std::size_t>(i)] * k;
    }
    return w;
}

RingCountReport verify_ring_count(const MirrorConfig& cfg) {
    RingCountReport rep;
    CriticalSet cs = critical_points(cfg);
    rep.root_count = static_cast<int>(cs.roots.size());
    rep.orbit_count = static_cast<int>(cs.orbits.size());
    long expected = 1;
    for (int k = 1; k <= cfg.n; ++k) expected = expected * (cfg.N - cfg.n + k) / k;
    rep.expected = static_cast<int>(expected);

    // every root must satisfy the critical equation, and orbit members stay distinct
    set_precision(cfg.digits);
    Real tol = cfg.root_tol > 0 ? cfg.root_tol : boost::multiprecision::pow(Real(10), -8);
    Cplx target = cfg.Q;
    if (cfg.n % 2 == 0) target = Cplx(Real(0)) - target;
    bool roots_ok = true;
    for (const auto& p : cs.roots) {
        Cplx pn(Real(1));
        for (int k = 0; k < cfg.N; ++k) pn = pn * p;
        roots_ok = roots_ok && (pn - target).abs() < tol;
    }
    rep.pass = roots_ok && rep.root_count == cfg.N && rep.orbit_count == rep.expected;
    return rep;
}

}  // namespace qkgr
