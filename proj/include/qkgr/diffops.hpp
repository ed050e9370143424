#ifndef QKGR_DIFFOPS_HPP
#define QKGR_DIFFOPS_HPP

#include <map>
#include <vector>

#include "qkgr/series.hpp"

namespace qkgr {

// Finite-difference operator acting on Q-monomials by the finitized product
// ratio prod_{m<=l.d}(1-lam q^m)/prod_{m<=0}(1-lam q^m).
struct GammaOp {
    std::vector<int> l;    // lattice direction of l . Q d/dQ
    Mono lam = Mono::one();  // e.g. L_i/L_j or L0 P_i/P_j
    bool inverse = false;

    GammaOp(std::vector<int> dir, Mono lambda, bool inv = false);
};

// q^{k Q_i d/dQ_i}: multiply the degree-d coefficient by q^{k d_i}. axis is 1-based.
NovikovSeries translate_apply(int axis, int k, const NovikovSeries& s);

NovikovSeries gamma_apply(const GammaOp& op, const NovikovSeries& s);

// Adams operation on a monomial: all exponents scale by k, Novikov variables by |k|.
Mono adams(int k, const Mono& m);

// Level-l determinantal twist: coefficient at d gains prod_i P_i^{l d_i} q^{l C(d_i,2)}.
// raw_sign multiplies by prod_i (-P_i)^{l d_i} q^{l C(d_i,2)} instead.
NovikovSeries level_apply(int level, const NovikovSeries& s, bool raw_sign = false);

// Eulerian twist multiplier prod_i prod_{m=1}^{d_i} (1 - q^m y P_i).
NovikovSeries lefschetz_apply(const Mono& y, const NovikovSeries& s);

// Multiplies the degree-d coefficient by
// prod_{i,j} (1 - y q^{d_i} P_i/L_j) / prod_{i,j<=n} (1 - y q^{d_i-d_j} P_i/P_j).
NovikovSeries restore_apply(const Mono& y, const NovikovSeries& s);

// prod_{i,j}(1 - y P_i/L_j) / prod_{i,j<=n}(1 - y P_i/P_j); equals the d=0
// restore multiplier and the C*-equivariant Euler class of the tangent bundle.
FactoredCoeff tangent_euler_cx(const GrassmannianCtx& ctx, const Mono& y);

// Q_1 = ... = Q_n = Q specialization: sums coefficients per total degree with the
// P-ratio Vandermonde factors cleared; optionally sets L0 = 1 first.
std::map<int, ClearedCoeff> specialize_nonabelian(const NovikovSeries& s, bool drop_L0);

}  // namespace qkgr

#endif
