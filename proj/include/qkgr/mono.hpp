#ifndef QKGR_MONO_HPP
#define QKGR_MONO_HPP

#include <map>
#include <string>

#include "qkgr/rational.hpp"

namespace qkgr {

// Sparse Laurent exponent vector keyed by variable name (P1.., L0, L1.., Y, q, Q1..).
using VarExp = std::map<std::string, int>;

VarExp exp_mul(const VarExp& a, const VarExp& b);
VarExp exp_inv(const VarExp& a);
VarExp exp_pow(const VarExp& a, int k);
int exp_get(const VarExp& a, const std::string& v);

// Single term c * prod v^e. Zero-exponent entries are never stored; c==0 means empty map.
struct Mono {
    BigRat coeff{1};
    VarExp exps;

    Mono() = default;
    explicit Mono(BigRat c) : coeff(std::move(c)) {}
    Mono(BigRat c, VarExp e);
    static Mono var(const std::string& name, int e = 1);
    static Mono one() { return Mono(BigRat(1)); }

    bool is_one() const { return coeff == 1 && exps.empty(); }
    bool is_zero() const { return coeff == 0; }
    bool is_constant() const { return exps.empty(); }

    Mono operator*(const Mono& o) const;
    Mono operator/(const Mono& o) const;
    Mono pow(int k) const;
    Mono inv() const;

    bool operator==(const Mono& o) const { return coeff == o.coeff && exps == o.exps; }
    bool operator!=(const Mono& o) const { return !(*this == o); }

    // Substitute variables by rational values (vars absent from the map stay symbolic).
    Mono substitute(const std::map<std::string, BigRat>& vals) const;
    // Rename/replace variables by monomials (e.g. P1 -> L3, Lj -> Lj^{-1}).
    Mono substitute_mono(const std::map<std::string, Mono>& repl) const;

    // Fully evaluate; throws if any variable remains unassigned.
    BigRat evaluate(const std::map<std::string, BigRat>& vals) const;

    std::string str() const;
};

}  // namespace qkgr

#endif
