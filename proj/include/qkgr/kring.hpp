#ifndef QKGR_KRING_HPP
#define QKGR_KRING_HPP

#include <string>
#include <vector>

#include "qkgr/laurent.hpp"
#include "qkgr/qfactor.hpp"

namespace qkgr {

struct GrassmannianCtx {
    int n = 1;
    int N = 1;
    GrassmannianCtx() = default;
    GrassmannianCtx(int n_, int N_);
    bool operator==(const GrassmannianCtx& o) const { return n == o.n && N == o.N; }
};

inline std::string pvar(int i) { return "P" + std::to_string(i); }
inline std::string lvar(int j) { return "L" + std::to_string(j); }
inline std::string qqvar(int i) { return "Q" + std::to_string(i); }

// Symmetric Laurent polynomial in P1..Pn (and optionally the Lj).
struct KClass {
    GrassmannianCtx ctx;
    LaurentPoly value;
    KClass(GrassmannianCtx c, LaurentPoly v);  // checks symmetry in P
};

// n-tuple of distinct indices in 1..N; position a records P_a -> L_{indices[a]}.
struct FixedPoint {
    GrassmannianCtx ctx;
    std::vector<int> indices;
    FixedPoint(GrassmannianCtx c, std::vector<int> idx);
};

std::vector<FixedPoint> all_fixed_points(const GrassmannianCtx& ctx);

// T^N-equivariant Euler characteristic chi_T(X; Phi) as the Lefschetz fixed
// point sum; the result must clear all (L_a - L_b) denominators.
LaurentPoly pairing_equivariant(const GrassmannianCtx& ctx, const LaurentPoly& phi);

// Non-equivariant chi(X; Phi) via the one-parameter path L_j = u^j and a local
// expansion at u = 1; the result must be an integer.
BigRat pairing_nonequivariant(const GrassmannianCtx& ctx, const LaurentPoly& phi);

struct GramResult {
    std::vector<std::vector<BigRat>> entries;
    BigRat det;
    bool singular = false;
};

GramResult gram_matrix(const GrassmannianCtx& ctx, const std::vector<KClass>& basis);

// Schur polynomial s_lambda(P1..Pn) via the bialternant formula.
LaurentPoly schur_poly(int n, const std::vector<int>& lambda);
// All partitions inside the n x (N-n) box, in a deterministic order.
std::vector<std::vector<int>> box_partitions(const GrassmannianCtx& ctx);

// Data of the 1-dimensional orbit joining two fixed points differing in one slot.
struct OrbitPair {
    int axis;           // position (0-based) where the tuples differ
    int i0, j0;         // alpha carries i0 there, beta carries j0
    std::vector<int> shared;  // indices common to both tuples
    std::vector<int> rest;    // indices of 1..N in neither tuple
};
OrbitPair orbit_pair(const FixedPoint& alpha, const FixedPoint& beta);

// Ratio Eu(T_alpha X)/Eu(T_phi X_{0,2,m0}) for the m0-fold cover of the orbit,
// as an exact factored expression in the L's and the formal root variable x
// (x^{m0} = L_{j0}/L_{i0} is imposed only at specialization time).
FactoredCoeff euler_ratio(const GrassmannianCtx& ctx, const FixedPoint& alpha,
                          const FixedPoint& beta, int m0);

// The same quantity arranged as the residue-recursion coefficient.
FactoredCoeff recursion_coefficient(const GrassmannianCtx& ctx, const FixedPoint& alpha,
                                    const FixedPoint& beta, int m0);

// Extra factor acquired by the recursion coefficient in the Y-twisted theory.
// Pass y = 1 or y = 0 monomials for the degenerate variants.
FactoredCoeff modifying_factor_Y(const GrassmannianCtx& ctx, const FixedPoint& alpha,
                                 const FixedPoint& beta, int m0,
                                 const Mono& y = Mono::var("Y"));

// Recursion coefficient of the toric superspace series carrying L0-factors;
// reduces to recursion_coefficient at L0 = 1.
FactoredCoeff superspace_recursion_coefficient(const GrassmannianCtx& ctx,
                                               const FixedPoint& alpha, const FixedPoint& beta,
                                               int m0);

}  // namespace qkgr

#endif
