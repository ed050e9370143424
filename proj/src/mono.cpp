#include "qkgr/mono.hpp"

#include <sstream>

namespace qkgr {

VarExp exp_mul(const VarExp& a, const VarExp& b) {
    VarExp r = a;
    for (const auto& [v, e] : b) {
        int ne = (r.count(v) ? r[v] : 0) + e;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

VarExp exp_inv(const VarExp& a) {
    VarExp r;
    for (const auto& [v, e] : a) r[v] = -e;
    return r;
}

VarExp exp_pow(const VarExp& a, int k) {
    VarExp r;
    if (k == 0) return r;
    for (const auto& [v, e] : a) r[v] = e * k;
    return r;
}

int exp_get(const VarExp& a, const std::string& v) {
    auto it = a.find(v);
    return it == a.end() ? 0 : it->second;
}

Mono::Mono(BigRat c, VarExp e) : coeff(std::move(c)), exps(std::move(e)) {
    if (coeff == 0) exps.clear();
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->second == 0)
            it = exps.erase(it);
        else
            ++it;
    }
}

Mono Mono::var(const std::string& name, int e) {
    Mono m;
    if (e != 0) m.exps[name] = e;
    return m;
}

Mono Mono::operator*(const Mono& o) const {
    if (is_zero() || o.is_zero()) return Mono(BigRat(0));
    return Mono(coeff * o.coeff, exp_mul(exps, o.exps));
}

Mono Mono::operator/(const Mono& o) const {
    if (o.is_zero()) throw arith_error("division by zero monomial");
    if (is_zero()) return Mono(BigRat(0));
    return Mono(coeff / o.coeff, exp_mul(exps, exp_inv(o.exps)));
}

Mono Mono::pow(int k) const {
    if (is_zero()) {
        if (k <= 0) throw arith_error("zero monomial to nonpositive power");
        return *this;
    }
    return Mono(pow_rat(coeff, k), exp_pow(exps, k));
}

Mono Mono::inv() const { return pow(-1); }

Mono Mono::substitute(const std::map<std::string, BigRat>& vals) const {
    Mono r(coeff);
    for (const auto& [v, e] : exps) {
        auto it = vals.find(v);
        if (it == vals.end()) {
            r.exps[v] = e;
        } else {
            r.coeff *= pow_rat(it->second, e);
        }
    }
    if (r.coeff == 0) r.exps.clear();
    return r;
}

Mono Mono::substitute_mono(const std::map<std::string, Mono>& repl) const {
    Mono r(coeff);
    for (const auto& [v, e] : exps) {
        auto it = repl.find(v);
        if (it == repl.end())
            r = r * Mono::var(v, e);
        else
            r = r * it->second.pow(e);
    }
    return r;
}

BigRat Mono::evaluate(const std::map<std::string, BigRat>& vals) const {
    BigRat r = coeff;
    for (const auto& [v, e] : exps) {
        auto it = vals.find(v);
        if (it == vals.end()) throw arith_error("unassigned variable " + v);
        r *= pow_rat(it->second, e);
    }
    return r;
}

std::string Mono::str() const {
    std::ostringstream os;
    os << coeff.str();
    for (const auto& [v, e] : exps) {
        os << "*" << v;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace qkgr
