#ifndef QKGR_LOCALIZATION_HPP
#define QKGR_LOCALIZATION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qkgr/diffops.hpp"
#include "qkgr/series.hpp"

namespace qkgr {

// Coefficient with P_a replaced by L_{fp[a]} (or L_{fp[a]}^{-1} for dual targets).
FactoredCoeff localize(const SeriesKind& kind, const GrassmannianCtx& ctx, const FixedPoint& fp,
                       const std::vector<int>& d, bool invert_chars = false);

struct LocalizedSeries {
    SeriesKind kind;
    FixedPoint fp;
    int truncation;
    std::map<std::vector<int>, FactoredCoeff> coeffs;
};

LocalizedSeries localize_series(const SeriesKind& kind, const GrassmannianCtx& ctx,
                                const FixedPoint& fp, int truncation, bool invert_chars = false);

// One residue-recursion check: the pole q = x with x^{m0} = L_{j0}/L_{i0} made
// rational by a perfect-power Lambda assignment.
struct RecursionInstance {
    SeriesKind kind;
    GrassmannianCtx ctx;
    FixedPoint alpha, beta;
    int m0 = 1;
    std::map<std::string, BigRat> assign;  // L1..LN (and Y, L0 when present)
    BigRat x;

    RecursionInstance(SeriesKind k, GrassmannianCtx c, FixedPoint a, FixedPoint b, int m)
        : kind(k), ctx(c), alpha(std::move(a)), beta(std::move(b)), m0(m) {}

    std::string key() const;
};

// Validates rationality of x and that no stray factor vanishes at q = x.
// Throws arith_error("choose Lambda values as perfect m0-th powers") or
// arith_error("Lambda assignment hits an extra pole at x").
RecursionInstance make_recursion_instance(const SeriesKind& kind, const GrassmannianCtx& ctx,
                                          const FixedPoint& alpha, const FixedPoint& beta, int m0,
                                          const std::vector<BigRat>& lambdas,
                                          const std::map<std::string, BigRat>& extra = {},
                                          int truncation = 4);

// Per-total-degree residuals of the criterion-(ii) relation (expected all zero):
// Res_{q=x} [(1-q) S_alpha]_t dq/q + (1/m0) C [(1-q) S_beta]_{t-m0}(x).
std::vector<BigRat> recursion_residual(const RecursionInstance& inst, int truncation);

// Same relation per multi-degree for the L0-weighted superspace series, using the
// superspace recursion coefficient; the recursion acts on the axis where the
// fixed points differ.
std::map<std::vector<int>, BigRat> recursion_residual_multidegree(const RecursionInstance& inst,
                                                                  int truncation);

struct CheckResult {
    std::string key;
    bool pass = false;
    std::string detail;
};

// Gamma-operator reconstruction of the localized series from the point series,
// degree by degree, plus the single-Q restatement at a random specialization.
std::vector<CheckResult> verify_gamma_reconstruction(const GrassmannianCtx& ctx, int truncation);

// (a) operator construction of the superspace series, (b) its Q_i = Q, L0 = 1
// specialization against the symmetrized grassmannian series, (c) the
// superspace residue recursion before specialization.
std::vector<CheckResult> verify_nonabelian(const GrassmannianCtx& ctx, int truncation,
                                           std::uint64_t seed = 20200818);

// Level-l correspondence with the dual grassmannian at every fixed point,
// compared per total degree at seeded random rational Lambda assignments.
std::vector<CheckResult> verify_dong_wen(const GrassmannianCtx& ctx, int level, int truncation,
                                         std::uint64_t seed = 20200818);

// q=0 pole structure of level series and the classification of Y-factors.
std::vector<CheckResult> verify_small_pole_structure(const SeriesKind& kind,
                                                     const GrassmannianCtx& ctx, int truncation,
                                                     std::uint64_t seed = 20200818);

// Distinct nonzero rationals for the L-variables, reproducible from the seed.
std::vector<BigRat> random_lambda_assignment(int count, std::uint64_t seed);

}  // namespace qkgr

#endif
