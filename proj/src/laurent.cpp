#include "qkgr/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qkgr {

bool LexLess::operator()(const VarExp& a, const VarExp& b) const {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ia == a.end()) {
            // a has exponent 0 on remaining vars of b
            if (ib->second != 0) return ib->second > 0;
            ++ib;
            continue;
        }
        if (ib == b.end()) {
            if (ia->second != 0) return ia->second < 0;
            ++ia;
            continue;
        }
        if (ia->first < ib->first) {
            if (ia->second != 0) return ia->second < 0;
            ++ia;
        } else if (ib->first < ia->first) {
            if (ib->second != 0) return ib->second > 0;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
    }
    return false;
}

LaurentPoly::LaurentPoly(const BigRat& c) {
    if (c != 0) terms_[VarExp{}] = c;
}

LaurentPoly::LaurentPoly(const Mono& m) {
    if (m.coeff != 0) terms_[m.exps] = m.coeff;
}

LaurentPoly LaurentPoly::var(const std::string& name, int e) {
    return LaurentPoly(Mono::var(name, e));
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void LaurentPoly::add_term(const VarExp& e, const BigRat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Mono& m) const {
    LaurentPoly r;
    if (m.coeff == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[exp_mul(e, m.exps)] = c * m.coeff;
    return r;
}

LaurentPoly LaurentPoly::operator*(const BigRat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw arith_error("negative power of a polynomial");
    LaurentPoly acc(BigRat(1));
    LaurentPoly b = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, BigRat>& vals) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        Mono m(c, e);
        Mono s = m.substitute(vals);
        r.add_term(s.exps, s.coeff);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_mono(const std::map<std::string, Mono>& repl) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        Mono s = Mono(c, e).substitute_mono(repl);
        r.add_term(s.exps, s.coeff);
    }
    return r;
}

BigRat LaurentPoly::evaluate(const std::map<std::string, BigRat>& vals) const {
    BigRat r(0);
    for (const auto& [e, c] : terms_) r += Mono(c, e).evaluate(vals);
    return r;
}

LaurentPoly LaurentPoly::swap_vars(const std::string& a, const std::string& b) const {
    std::map<std::string, Mono> repl{{a, Mono::var(b)}, {b, Mono::var(a)}};
    return substitute_mono(repl);
}

std::vector<std::string> LaurentPoly::variables() const {
    std::set<std::string> s;
    for (const auto& [e, c] : terms_)
        for (const auto& [v, k] : e)
            if (k != 0) s.insert(v);
    return {s.begin(), s.end()};
}

int LaurentPoly::min_exp(const std::string& v) const {
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        int k = exp_get(e, v);
        if (first || k < m) m = k;
        first = false;
    }
    return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw arith_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly();

    // Strip both sides to content-free polynomials (minimum exponent 0 in every
    // variable); the Laurent quotient is then polynomial exactly when it exists,
    // and the stripped shifts recombine at the end.
    Mono shift_a = Mono::one(), shift_b = Mono::one();
    for (const auto& v : variables()) {
        int m = min_exp(v);
        if (m != 0) shift_a = shift_a * Mono::var(v, -m);
    }
    for (const auto& v : divisor.variables()) {
        int m = divisor.min_exp(v);
        if (m != 0) shift_b = shift_b * Mono::var(v, -m);
    }
    LaurentPoly a = *this * shift_a;
    LaurentPoly b = divisor * shift_b;

    LaurentPoly q;
    LaurentPoly rem = a;
    const auto lead_b = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto lead_r = *rem.terms_.rbegin();
        VarExp qe = exp_mul(lead_r.first, exp_inv(lead_b.first));
        for (const auto& [v, e] : qe)
            if (e < 0) return std::nullopt;
        BigRat qc = lead_r.second / lead_b.second;
        Mono qm(qc, qe);
        q.add_term(qe, qc);
        rem = rem - (b * qm);
    }
    return q * (shift_b / shift_a);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigRat& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        BigRat ac = c < 0 ? BigRat(-c) : c;
        bool unit = (ac == 1) && !it->first.empty();
        if (!unit) os << ac.str();
        bool started = !unit;
        for (const auto& [v, e] : it->first) {
            if (started) os << "*";
            os << v;
            if (e != 1) os << "^" << e;
            started = true;
        }
    }
    return os.str();
}

bool is_symmetric(const LaurentPoly& p, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (p.swap_vars(vars[i], vars[i + 1]) != p) return false;
    return true;
}

bool is_alternating(const LaurentPoly& p, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (p.swap_vars(vars[i], vars[i + 1]) != -p) return false;
    return true;
}

LaurentPoly divide_by_vandermonde(const LaurentPoly& p, const std::vector<std::string>& vars) {
    if (!is_alternating(p, vars)) throw arith_error("not divisible by Vandermonde");
    LaurentPoly r = p;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            LaurentPoly d = LaurentPoly::var(vars[i]) - LaurentPoly::var(vars[j]);
            auto q = r.divide_exact(d);
            if (!q) throw arith_error("not divisible by Vandermonde");
            r = *q;
        }
    }
    return r;
}

std::vector<std::string> p_vars(int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back("P" + std::to_string(i));
    return v;
}

}  // namespace qkgr
