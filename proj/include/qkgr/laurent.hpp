#ifndef QKGR_LAURENT_HPP
#define QKGR_LAURENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkgr/mono.hpp"

namespace qkgr {

// Lexicographic monomial order over variables sorted by name (absent exponent = 0).
// Total and multiplication-compatible, so map::rbegin() is the leading term.
struct LexLess {
    bool operator()(const VarExp& a, const VarExp& b) const;
};

// Multivariate Laurent polynomial over BigRat. No zero terms are stored.
class LaurentPoly {
  public:
    using TermMap = std::map<VarExp, BigRat, LexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(const BigRat& c);
    explicit LaurentPoly(const Mono& m);
    static LaurentPoly var(const std::string& name, int e = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const VarExp& e, const BigRat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Mono& m) const;
    LaurentPoly operator*(const BigRat& c) const;
    LaurentPoly pow(int k) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly substitute(const std::map<std::string, BigRat>& vals) const;
    LaurentPoly substitute_mono(const std::map<std::string, Mono>& repl) const;
    BigRat evaluate(const std::map<std::string, BigRat>& vals) const;

    LaurentPoly swap_vars(const std::string& a, const std::string& b) const;

    // All variables occurring with nonzero exponent.
    std::vector<std::string> variables() const;
    int min_exp(const std::string& v) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    std::string str() const;

  private:
    TermMap terms_;
};

// Symmetry of p in the given variables (checked on adjacent transpositions).
bool is_symmetric(const LaurentPoly& p, const std::vector<std::string>& vars);
bool is_alternating(const LaurentPoly& p, const std::vector<std::string>& vars);

// p / prod_{i<j} (v_i - v_j); requires p alternating in vars.
// Throws arith_error("not divisible by Vandermonde") otherwise.
LaurentPoly divide_by_vandermonde(const LaurentPoly& p, const std::vector<std::string>& vars);

std::vector<std::string> p_vars(int n);

}  // namespace qkgr

#endif
