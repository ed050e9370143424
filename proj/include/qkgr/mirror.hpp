#ifndef QKGR_MIRROR_HPP
#define QKGR_MIRROR_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <string>
#include <vector>

#include "qkgr/localization.hpp"

namespace qkgr {

using Real = boost::multiprecision::mpfr_float;

// Minimal complex arithmetic over Real; principal-branch log/pow.
struct Cplx {
    Real re, im;
    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator/(const Cplx& o) const;
    Real abs() const;
    std::string str(unsigned digits = 0) const;
};

Cplx clog(const Cplx& z);               // principal branch
Cplx cexp(const Cplx& z);
Cplx cpow(const Cplx& base, const Real& e);  // exp(e * clog(base))

// Sets the working mpfr precision (decimal digits) for the calling thread.
void set_precision(int digits);

// Model 1-dimensional Jackson integrals of section-8 type. The plus variant sums
// the integrand prod_{m>=1}(1-X/q^m) X^{-d} X^{log(R)/log q} over X = q^{-t};
// the minus variant sums Y^{1-d} Y^{log(M)/log q} / prod_{m>=0}(1-Y/q^m) over the
// shifted lattice Y = q^{-t}/A.
struct QIntegralSpec {
    enum class Variant { plus, minus };
    Variant variant = Variant::plus;
    int d = 0;
    Real lam_ratio;   // R for plus, M = L0*L'/L for minus
    Real q;           // requires |q| >= 1.1
    Real shift_A = Real(-1);
    Real tolerance;   // absolute tail target; 0 -> derived from digits
    int digits = 50;
    long max_terms = 200000;
};

struct QIntResult {
    Cplx value;
    Real tail_bound;
    long terms_used = 0;
};

QIntResult qint_plus(const QIntegralSpec& spec);   // throws on nonconvergent tail
QIntResult qint_minus(const QIntegralSpec& spec);  // throws when the lattice hits a pole

// Product-formula value prod_{m>=1}(1-q^{-m}) / prod_{m>=0}(1-q^{-m}/lam); this is
// the analytic continuation of the plus integral to |q^d/R| >= 1.
Real qgamma_plus_value(const Real& lam, const Real& q, int digits);

// prod_{m>=1}(1 - q^{-m})
Real euler_qpochhammer(const Real& q, int digits);

// Plus/minus integral values with continuation outside the convergent domain
// (product formula, respectively backward lambda-recursion).
Cplx qint_plus_continued(int d, const Real& R, const Real& q, int digits);
Cplx qint_minus_continued(int d, const Real& M, const Real& q, const Real& A, int digits);

struct ModelReductionReport {
    Cplx lhs, rhs;
    Real rel_error;
};

// Ratio of the chart integral at degree d to degree 0, assembled from 1-d model
// integrals, against the closed product formula.
ModelReductionReport verify_model_reduction(int n, int N, const std::vector<int>& d,
                                            const std::vector<Real>& lambdas, const Real& lambda0,
                                            const Real& q, int digits);

// Finite-difference system satisfied by the superspace series, checked as exact
// factored identities; degrees with d_i = 0 land in the defining ideal of the
// K-ring, which is reported via explicit factor membership.
std::vector<CheckResult> verify_difference_system(const GrassmannianCtx& ctx, bool equivariant,
                                                  int truncation);

struct MirrorConfig {
    int n = 1, N = 1;
    Cplx Q;
    int digits = 50;
    Real root_tol;  // 0 -> derived from digits
    Real grad_tol;
};

struct MirrorConfiguration {
    std::vector<std::vector<Cplx>> x;      // n rows, N columns
    std::map<std::pair<int, int>, Cplx> y;  // keys (i,i'), i != i', 0-based
    std::vector<Cplx> p;
};

struct CriticalSet {
    std::vector<Cplx> roots;                // the N roots of p^N = (-1)^{n+1} Q
    std::vector<std::vector<int>> orbits;   // Weyl orbits as root-index subsets
};

CriticalSet critical_points(const MirrorConfig& cfg);
MirrorConfiguration critical_configuration(const MirrorConfig& cfg, const CriticalSet& cs,
                                           const std::vector<int>& subset);

// Gradient of the constrained phase function. With reduce_multiplier_branch the
// Lagrange-multiplier components use the principal log of the constraint ratio
// (criticality measure); without it they use per-variable principal logs, which
// is the convention matched by finite differences of superpotential_value.
std::vector<Cplx> superpotential_gradient(const MirrorConfig& cfg,
                                          const MirrorConfiguration& conf,
                                          bool reduce_multiplier_branch = true);
Real gradient_norm(const std::vector<Cplx>& g);

// Phase function value with logs branch-fixed relative to base (analytic
// continuation along the segment), so finite differences are branch-safe.
Cplx superpotential_value(const MirrorConfig& cfg, const MirrorConfiguration& conf,
                          const MirrorConfiguration& base);

struct RingCountReport {
    int root_count = 0;
    int orbit_count = 0;
    int expected = 0;
    bool pass = false;
};

RingCountReport verify_ring_count(const MirrorConfig& cfg);

}  // namespace qkgr

#endif
