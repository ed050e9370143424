#ifndef QKGR_SERIES_HPP
#define QKGR_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkgr/kring.hpp"
#include "qkgr/qfactor.hpp"

namespace qkgr {

enum class SeriesTag {
    JT,             // equivariant grassmannian series
    J_nonequiv,     // its L -> 1 limit
    J_pt,           // point target, product of q-exponentials
    J_Xtilde,       // product of projective spaces
    J_PiGT,         // toric superspace with L0-weighted root factors
    IT,             // balanced cotangent-type series with Y
    IT_tilde,       // quasimap variant (Y-ranges shifted by one)
    IT_level,       // level-l twist of JT
    IT_dual,        // dual-grassmannian level series (inverted torus characters)
    I_PiE_dualtaut  // Eulerian twist by the dual tautological bundle
};

struct SeriesKind {
    SeriesTag tag = SeriesTag::JT;
    int level = 0;  // used by IT_level / IT_dual

    SeriesKind() = default;
    explicit SeriesKind(SeriesTag t, int l = 0);

    static std::optional<SeriesKind> parse(const std::string& name, int level = 0);
    static std::vector<std::string> names();
    std::string name() const;

    bool has_Y() const;
    bool has_L0() const { return tag == SeriesTag::J_PiGT; }
    bool multi_novikov() const {
        return tag == SeriesTag::J_pt || tag == SeriesTag::J_Xtilde || tag == SeriesTag::J_PiGT;
    }
};

// Exact factored coefficient of Q^d (componentwise d >= 0).
FactoredCoeff series_coeff(const SeriesKind& kind, const GrassmannianCtx& ctx,
                           const std::vector<int>& d);

// q-degree of denominator minus q-degree of numerator of the coefficient.
int q_degree_gap(const SeriesKind& kind, const GrassmannianCtx& ctx, const std::vector<int>& d);

struct NovikovSeries {
    GrassmannianCtx ctx;
    int nvars = 1;  // 1: single Q tracking total degree; n: per-axis Q_i
    int truncation = 0;
    std::map<std::vector<int>, FactoredCoeff> coeffs;  // absent entry = not computed

    const FactoredCoeff* find(const std::vector<int>& d) const;
};

NovikovSeries build_series(const SeriesKind& kind, const GrassmannianCtx& ctx, int truncation);

std::vector<std::vector<int>> degree_vectors(int n, int max_total);
std::vector<std::vector<int>> degree_class(int n, int total);

// Sum of factored coefficients over a common denominator, with all q^0
// P-ratio denominator factors (the Vandermonde carriers) divided out exactly.
struct ClearedCoeff {
    LaurentPoly num;
    std::map<QFactor, int> den;  // positive multiplicities

    LaurentPoly den_poly() const;
    bool equals(const ClearedCoeff& o) const;
    RatFuncQ expand(const std::map<std::string, BigRat>& spec) const;
    bool den_has_p_ratio() const;
};

LaurentPoly factor_poly(const QFactor& f);

// Throws arith_error("class sum failed to absorb a Vandermonde factor") when the numerator fails
// to absorb a q^0 P-ratio factor.
ClearedCoeff clear_class_sum(const std::vector<FactoredCoeff>& terms);

// Sum over all |d| = total of coeff(kind, ctx, d) at Q_1 = ... = Q_n = Q.
ClearedCoeff symmetrized_total_coeff(const SeriesKind& kind, const GrassmannianCtx& ctx,
                                     int total);

// Canonical JSON forms (bit-exact round trip).
std::string factored_to_json(const FactoredCoeff& c);
FactoredCoeff factored_from_json(const std::string& text);
std::string series_to_json(const NovikovSeries& s, const SeriesKind& kind);
std::pair<NovikovSeries, SeriesKind> series_from_json(const std::string& text);

}  // namespace qkgr

#endif
