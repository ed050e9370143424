#ifndef QKGR_RATIONAL_HPP
#define QKGR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qkgr {

// Exact scalars. mpq keeps gcd(num,den)=1 and den>0 canonically.
using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

inline BigRat pow_rat(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (base == 0) {
        if (e < 0) throw arith_error("zero to negative power");
        return BigRat(0);
    }
    BigRat b = e > 0 ? base : BigRat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    BigRat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Exact integer k-th root; nullopt when v is not a perfect k-th power.
inline std::optional<BigInt> exact_root(const BigInt& v, unsigned k) {
    if (k == 0) throw arith_error("zeroth root");
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::pow(BigInt(1), 1);  // placeholder init
    mpz_t root;
    mpz_init(root);
    int exactp = mpz_root(root, v.backend().data(), k);
    r = BigInt(root);
    mpz_clear(root);
    if (!exactp) return std::nullopt;
    return r;
}

// Exact rational k-th root when both numerator and denominator are perfect powers.
inline std::optional<BigRat> exact_root(const BigRat& v, unsigned k) {
    if (v < 0) return std::nullopt;
    auto n = exact_root(rat_num(v), k);
    auto d = exact_root(rat_den(v), k);
    if (!n || !d) return std::nullopt;
    return BigRat(*n) / BigRat(*d);
}

inline std::string to_string(const BigRat& r) { return r.str(); }

}  // namespace qkgr

#endif
