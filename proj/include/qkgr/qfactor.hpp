#ifndef QKGR_QFACTOR_HPP
#define QKGR_QFACTOR_HPP

#include <map>
#include <string>
#include <vector>

#include "qkgr/mono.hpp"
#include "qkgr/ratfunc.hpp"

namespace qkgr {

// One binomial factor (1 - q^m * mono), mono a monomial with implied coefficient +1
// and no q content. Kept in a canonical orientation: the first variable of mono
// carries a positive exponent (flipping (1-q^m M) = -q^m M (1-q^{-m} M^{-1}) when
// needed), and pure roots-of-unity factors (mono == 1) have m > 0.
struct QFactor {
    VarExp mono;
    int m = 0;

    bool operator<(const QFactor& o) const { return mono != o.mono ? mono < o.mono : m < o.m; }
    bool operator==(const QFactor& o) const { return mono == o.mono && m == o.m; }
    bool is_root_of_unity() const { return mono.empty(); }
};

// A monomial prefactor times a canonical product of QFactors with integer
// exponents (positive: numerator, negative: denominator). The unique normal
// form makes equality of series coefficients a structural check.
class FactoredCoeff {
  public:
    FactoredCoeff() : prefactor_(Mono::one()) {}
    explicit FactoredCoeff(Mono pref) : prefactor_(std::move(pref)) {}
    static FactoredCoeff one() { return FactoredCoeff(); }
    static FactoredCoeff zero() { return FactoredCoeff(Mono(BigRat(0))); }

    const Mono& prefactor() const { return prefactor_; }
    const std::map<QFactor, int>& factors() const { return factors_; }
    bool is_zero() const { return prefactor_.is_zero(); }
    bool is_monomial() const { return factors_.empty(); }

    // Multiply by (1 - q^m * mono)^count; canonicalizes orientation.
    void mul_factor(int m, const VarExp& mono, int count = 1);
    // The finitized ratio prod_{k<=a}(1-q^k M)/prod_{k<=0}(1-q^k M), to the given power.
    void mul_ratio(int a, const VarExp& mono, int power = 1);
    void mul_mono(const Mono& m) { prefactor_ = prefactor_ * m; }

    FactoredCoeff operator*(const FactoredCoeff& o) const;
    FactoredCoeff inverse() const;
    FactoredCoeff pow(int k) const;
    bool operator==(const FactoredCoeff& o) const {
        return prefactor_ == o.prefactor_ && factors_ == o.factors_;
    }
    bool operator!=(const FactoredCoeff& o) const { return !(*this == o); }

    // Replace variables by monomials (coefficient +-1), e.g. P1 -> L3 or L0 -> 1.
    FactoredCoeff substitute_mono(const std::map<std::string, Mono>& repl) const;

    // Exact rational function of q after assigning every non-q variable.
    RatFuncQ expand(const std::map<std::string, BigRat>& spec) const;
    // Full numeric value (spec must also assign q).
    BigRat evaluate(const std::map<std::string, BigRat>& spec) const;

    // q-adic valuation: order of vanishing at q=0 (negative means a pole at q=0).
    int q_valuation() const;
    // q-degree of the denominator minus q-degree of the numerator.
    int q_degree_gap() const;

    std::string str() const;

  private:
    Mono prefactor_;
    std::map<QFactor, int> factors_;
};

struct PoleClassification {
    std::vector<QFactor> roots_of_unity;  // denominator factors with mono == 1
    std::vector<QFactor> other;           // all remaining denominator factors
};

PoleClassification classify_poles(const FactoredCoeff& c);

}  // namespace qkgr

#endif
