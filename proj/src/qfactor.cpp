#include "qkgr/qfactor.hpp"

#include <sstream>

namespace qkgr {

namespace {

bool needs_flip(int m, const VarExp& mono) {
    if (m != 0) return m < 0;
    if (mono.empty()) return false;
    return mono.begin()->second < 0;
}

}  // namespace

void FactoredCoeff::mul_factor(int m, const VarExp& mono, int count) {
    if (count == 0 || is_zero()) return;
    VarExp clean = mono;
    for (auto it = clean.begin(); it != clean.end();) {
        if (it->second == 0)
            it = clean.erase(it);
        else
            ++it;
    }
    if (clean.count("q")) throw arith_error("factor monomial must not contain q");
    if (clean.empty() && m == 0) throw arith_error("zero factor (1-1)");
    int mm = m;
    VarExp mo = clean;
    if (needs_flip(m, mo)) {
        // (1 - q^m M)^c = (-q^m M)^c * (1 - q^{-m} M^{-1})^c
        Mono adj(BigRat(-1), exp_mul(mo, VarExp{{"q", m}}));
        prefactor_ = prefactor_ * adj.pow(count);
        mm = -m;
        mo = exp_inv(mo);
    }
    QFactor f{std::move(mo), mm};
    auto it = factors_.find(f);
    if (it == factors_.end()) {
        factors_.emplace(std::move(f), count);
    } else {
        it->second += count;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactoredCoeff::mul_ratio(int a, const VarExp& mono, int power) {
    if (a > 0) {
        for (int k = 1; k <= a; ++k) mul_factor(k, mono, power);
    } else if (a < 0) {
        for (int k = a + 1; k <= 0; ++k) mul_factor(k, mono, -power);
    }
}

FactoredCoeff FactoredCoeff::operator*(const FactoredCoeff& o) const {
    if (is_zero() || o.is_zero()) return zero();
    FactoredCoeff r = *this;
    r.prefactor_ = r.prefactor_ * o.prefactor_;
    for (const auto& [f, c] : o.factors_) {
        auto it = r.factors_.find(f);
        if (it == r.factors_.end()) {
            r.factors_.emplace(f, c);
        } else {
            it->second += c;
            if (it->second == 0) r.factors_.erase(it);
        }
    }
    return r;
}

FactoredCoeff FactoredCoeff::inverse() const { return pow(-1); }

FactoredCoeff FactoredCoeff::pow(int k) const {
    if (k == 0) return one();
    if (is_zero()) {
        if (k < 0) throw arith_error("inverse of zero coefficient");
        return zero();
    }
    FactoredCoeff r;
    r.prefactor_ = prefactor_.pow(k);
    for (const auto& [f, c] : factors_) r.factors_[f] = c * k;
    return r;
}

FactoredCoeff FactoredCoeff::substitute_mono(const std::map<std::string, Mono>& repl) const {
    for (const auto& [v, m] : repl)
        if (m.coeff != 1 && m.coeff != -1 && !m.is_zero())
            throw arith_error("factor substitution must be monomial with unit coefficient");
    FactoredCoeff r(prefactor_.substitute_mono(repl));
    for (const auto& [f, c] : factors_) {
        Mono nm = Mono(BigRat(1), f.mono).substitute_mono(repl);
        int m = f.m + exp_get(nm.exps, "q");
        VarExp mo = nm.exps;
        mo.erase("q");
        if (nm.coeff == -1) {
            // (1 + q^m M) is outside the representable factor shapes
            throw arith_error("substitution produced a non-unit factor coefficient");
        }
        if (nm.is_zero()) throw arith_error("substitution produced a vanishing factor argument");
        r.mul_factor(m, mo, c);
    }
    return r;
}

RatFuncQ FactoredCoeff::expand(const std::map<std::string, BigRat>& spec) const {
    if (is_zero()) return RatFuncQ(BigRat(0));
    Mono p = prefactor_.substitute(spec);
    int qexp = exp_get(p.exps, "q");
    VarExp rest = p.exps;
    rest.erase("q");
    if (!rest.empty()) throw arith_error("expand: unassigned variable " + rest.begin()->first);

    Poly1 num(p.coeff), den(BigRat(1));
    if (qexp > 0)
        num = num * Poly1::monomial(qexp);
    else if (qexp < 0)
        den = den * Poly1::monomial(-qexp);

    for (const auto& [f, c] : factors_) {
        BigRat v = Mono(BigRat(1), f.mono).evaluate(spec);
        if (v == 0 && c < 0) throw arith_error("expand: denominator factor monomial evaluates to zero");
        // (1 - q^m v), with negative m cleared as (q^{|m|} - v)/q^{|m|}
        Poly1 fac;
        int qshift = 0;
        if (f.m >= 0) {
            std::vector<BigRat> coef(static_cast<std::size_t>(f.m) + 1, BigRat(0));
            coef[0] = 1;
            coef[static_cast<std::size_t>(f.m)] -= v;
            fac = Poly1(std::move(coef));
        } else {
            std::vector<BigRat> coef(static_cast<std::size_t>(-f.m) + 1, BigRat(0));
            coef[0] = -v;
            coef[static_cast<std::size_t>(-f.m)] = 1;
            fac = Poly1(std::move(coef));
            qshift = -f.m;
        }
        int reps = c > 0 ? c : -c;
        for (int i = 0; i < reps; ++i) {
            if (c > 0) {
                num = num * fac;
                if (qshift) den = den * Poly1::monomial(qshift);
            } else {
                den = den * fac;
                if (qshift) num = num * Poly1::monomial(qshift);
            }
        }
    }
    return RatFuncQ(num, den);
}

BigRat FactoredCoeff::evaluate(const std::map<std::string, BigRat>& spec) const {
    if (is_zero()) return BigRat(0);
    auto it = spec.find("q");
    if (it == spec.end()) throw arith_error("evaluate: q unassigned");
    BigRat q = it->second;
    BigRat r = prefactor_.evaluate(spec);
    for (const auto& [f, c] : factors_) {
        BigRat v = BigRat(1) - pow_rat(q, f.m) * Mono(BigRat(1), f.mono).evaluate(spec);
        if (v == 0) {
            if (c < 0) throw arith_error("evaluate: pole");
            r = 0;
            continue;
        }
        r *= pow_rat(v, c);
    }
    return r;
}

int FactoredCoeff::q_valuation() const {
    int v = exp_get(prefactor_.exps, "q");
    for (const auto& [f, c] : factors_)
        if (f.m < 0) v += c * f.m;
    return v;
}

int FactoredCoeff::q_degree_gap() const {
    // Writing the coefficient as q^E * N(q)/D(q) with N(0), D(0) != 0:
    // gap = deg D - deg N - E.
    int e = exp_get(prefactor_.exps, "q");
    int deg_num = 0, deg_den = 0;
    for (const auto& [f, c] : factors_) {
        int d = f.m >= 0 ? f.m : -f.m;
        if (c > 0)
            deg_num += c * d;
        else
            deg_den += (-c) * d;
        if (f.m < 0) e += c * f.m;
    }
    return deg_den - deg_num - e;
}

std::string FactoredCoeff::str() const {
    std::ostringstream os;
    os << prefactor_.str();
    for (const auto& [f, c] : factors_) {
        os << " * (1-q^" << f.m;
        for (const auto& [v, e] : f.mono) {
            os << "*" << v;
            if (e != 1) os << "^" << e;
        }
        os << ")";
        if (c != 1) os << "^" << c;
    }
    return os.str();
}

PoleClassification classify_poles(const FactoredCoeff& c) {
    PoleClassification out;
    for (const auto& [f, e] : c.factors()) {
        if (e >= 0) continue;
        for (int k = 0; k < -e; ++k) {
            if (f.is_root_of_unity())
                out.roots_of_unity.push_back(f);
            else
                out.other.push_back(f);
        }
    }
    return out;
}

}  // namespace qkgr
