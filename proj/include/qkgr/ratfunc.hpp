#ifndef QKGR_RATFUNC_HPP
#define QKGR_RATFUNC_HPP

#include <string>
#include <vector>

#include "qkgr/rational.hpp"

namespace qkgr {

// Dense univariate polynomial over BigRat; c[k] is the q^k coefficient.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(BigRat c);
    explicit Poly1(std::vector<BigRat> coeffs);
    static Poly1 monomial(int deg, const BigRat& c = BigRat(1));

    const std::vector<BigRat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int valuation() const;                                          // lowest nonzero power
    BigRat at(int k) const;
    BigRat evaluate(const BigRat& x) const;

    Poly1 operator+(const Poly1& o) const;
    Poly1 operator-(const Poly1& o) const;
    Poly1 operator-() const;
    Poly1 operator*(const Poly1& o) const;
    Poly1 operator*(const BigRat& s) const;
    bool operator==(const Poly1& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly1, Poly1> divmod(const Poly1& d) const;
    Poly1 derivative() const;
    // Coefficients of p(x + a) (Taylor shift).
    Poly1 shift(const BigRat& a) const;

    std::string str(const std::string& var = "q") const;

  private:
    void trim();
    std::vector<BigRat> c_;
};

Poly1 poly_gcd(Poly1 a, Poly1 b);  // monic gcd

// Rational function of q in canonical form: gcd(num,den)=1 and the
// lowest-degree nonzero coefficient of den equals 1.
class RatFuncQ {
  public:
    RatFuncQ() : num_(BigRat(0)), den_(BigRat(1)) {}
    RatFuncQ(Poly1 num, Poly1 den);  // normalizes
    explicit RatFuncQ(const BigRat& c) : RatFuncQ(Poly1(c), Poly1(BigRat(1))) {}

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncQ operator+(const RatFuncQ& o) const;
    RatFuncQ operator-(const RatFuncQ& o) const;
    RatFuncQ operator*(const RatFuncQ& o) const;
    RatFuncQ operator/(const RatFuncQ& o) const;
    bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    BigRat evaluate(const BigRat& x) const;  // throws on a pole
    // Order of vanishing at x: multiplicity in den minus multiplicity in num.
    int pole_order(const BigRat& x) const;

    std::string str(const std::string& var = "q") const;

  private:
    Poly1 num_, den_;
};

inline RatFuncQ ratq_normalize(const Poly1& num, const Poly1& den) { return RatFuncQ(num, den); }

struct ResidueResult {
    BigRat value;
    bool was_pole;  // false (with value 0) when x is not a pole
};

// Residue of f at a simple pole x; throws arith_error("non-simple pole") otherwise.
ResidueResult residue_at(const RatFuncQ& f, const BigRat& pole);

// Truncated Laurent expansion of f at a point: sum coeffs[k]*(q-point)^{lead+k}.
struct LocalExpansion {
    int lead = 0;  // lowest exponent present (negative at a pole)
    std::vector<BigRat> coeffs;
    int pole_order = 0;  // den multiplicity minus num multiplicity at the point

    BigRat coeff(int k) const;  // coefficient of (q-point)^k
};

LocalExpansion local_expand(const RatFuncQ& f, const BigRat& point, int order);

}  // namespace qkgr

#endif
