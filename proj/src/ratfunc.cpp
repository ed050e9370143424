#include "qkgr/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qkgr {

Poly1::Poly1(BigRat c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly1::Poly1(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1 Poly1::monomial(int deg, const BigRat& c) {
    if (deg < 0) throw arith_error("negative monomial degree");
    std::vector<BigRat> v(static_cast<std::size_t>(deg) + 1, BigRat(0));
    v.back() = c;
    return Poly1(std::move(v));
}

void Poly1::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly1::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

BigRat Poly1::at(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return BigRat(0);
    return c_[static_cast<std::size_t>(k)];
}

BigRat Poly1::evaluate(const BigRat& x) const {
    BigRat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly1 Poly1::operator+(const Poly1& o) const {
    std::vector<BigRat> v(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly1(std::move(v));
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator-() const {
    std::vector<BigRat> v(c_);
    for (auto& x : v) x = -x;
    return Poly1(std::move(v));
}

Poly1 Poly1::operator*(const Poly1& o) const {
    if (is_zero() || o.is_zero()) return Poly1();
    std::vector<BigRat> v(c_.size() + o.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly1(std::move(v));
}

Poly1 Poly1::operator*(const BigRat& s) const {
    if (s == 0) return Poly1();
    std::vector<BigRat> v(c_);
    for (auto& x : v) x *= s;
    return Poly1(std::move(v));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& d) const {
    if (d.is_zero()) throw arith_error("division by zero polynomial");
    Poly1 q, r = *this;
    std::vector<BigRat> qc(c_.size(), BigRat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        BigRat f = r.c_.back() / d.c_.back();
        qc[static_cast<std::size_t>(k)] = f;
        r = r - d * Poly1::monomial(k, f);
    }
    return {Poly1(std::move(qc)), r};
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<BigRat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return Poly1(std::move(v));
}

Poly1 Poly1::shift(const BigRat& a) const {
    // Horner form: p(x+a) built from the top coefficient down.
    Poly1 r;
    Poly1 xa(std::vector<BigRat>{a, BigRat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xa + Poly1(*it);
    return r;
}

std::string Poly1::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigRat& ck = at(k);
        if (ck == 0) continue;
        if (!first) os << (ck > 0 ? " + " : " - ");
        if (first && ck < 0) os << "-";
        first = false;
        BigRat a = ck < 0 ? BigRat(-ck) : ck;
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = a.divmod(b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (BigRat(1) / a.coeffs().back());
}

RatFuncQ::RatFuncQ(Poly1 num, Poly1 den) {
    if (den.is_zero()) throw arith_error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = Poly1();
        den_ = Poly1(BigRat(1));
        return;
    }
    Poly1 g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    int v = den.valuation();
    BigRat lead = den.at(v);
    num_ = num * (BigRat(1) / lead);
    den_ = den * (BigRat(1) / lead);
}

RatFuncQ RatFuncQ::operator+(const RatFuncQ& o) const {
    return RatFuncQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncQ RatFuncQ::operator-(const RatFuncQ& o) const {
    return RatFuncQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFuncQ RatFuncQ::operator*(const RatFuncQ& o) const {
    return RatFuncQ(num_ * o.num_, den_ * o.den_);
}

RatFuncQ RatFuncQ::operator/(const RatFuncQ& o) const {
    if (o.is_zero()) throw arith_error("division by zero rational function");
    return RatFuncQ(num_ * o.den_, den_ * o.num_);
}

BigRat RatFuncQ::evaluate(const BigRat& x) const {
    BigRat d = den_.evaluate(x);
    if (d == 0) throw arith_error("evaluation at a pole");
    return num_.evaluate(x) / d;
}

int RatFuncQ::pole_order(const BigRat& x) const {
    auto mult = [&x](Poly1 p) {
        int m = 0;
        while (!p.is_zero() && p.evaluate(x) == 0) {
            Poly1 lin(std::vector<BigRat>{-x, BigRat(1)});
            p = p.divmod(lin).first;
            ++m;
        }
        return m;
    };
    return mult(den_) - mult(num_);
}

std::string RatFuncQ::str(const std::string& var) const {
    if (den_ == Poly1(BigRat(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

ResidueResult residue_at(const RatFuncQ& f, const BigRat& pole) {
    if (f.den().evaluate(pole) != 0) return {BigRat(0), false};
    Poly1 lin(std::vector<BigRat>{-pole, BigRat(1)});
    auto [g, rem] = f.den().divmod(lin);
    // rem == 0 since pole is a root
    if (g.evaluate(pole) == 0) throw arith_error("non-simple pole");
    if (f.num().evaluate(pole) == 0) {
        // removable point after reduction would mean gcd(num,den) != 1
        return {BigRat(0), false};
    }
    return {f.num().evaluate(pole) / g.evaluate(pole), true};
}

BigRat LocalExpansion::coeff(int k) const {
    int idx = k - lead;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return BigRat(0);
    return coeffs[static_cast<std::size_t>(idx)];
}

LocalExpansion local_expand(const RatFuncQ& f, const BigRat& point, int order) {
    if (order < 0) throw arith_error("negative expansion order");
    LocalExpansion out;
    if (f.is_zero()) {
        out.lead = 0;
        out.coeffs.assign(static_cast<std::size_t>(order) + 1, BigRat(0));
        return out;
    }
    Poly1 n = f.num().shift(point);
    Poly1 d = f.den().shift(point);
    int vn = n.valuation();
    int vd = d.valuation();
    out.pole_order = vd - vn;
    out.lead = vn - vd;

    // Series division of (n/t^vn) by (d/t^vd) to the requested order.
    int len = order - out.lead + 1;
    if (len <= 0) len = 1;
    std::vector<BigRat> a(static_cast<std::size_t>(len), BigRat(0));
    std::vector<BigRat> b(static_cast<std::size_t>(len), BigRat(0));
    for (int i = 0; i < len; ++i) {
        a[static_cast<std::size_t>(i)] = n.at(vn + i);
        b[static_cast<std::size_t>(i)] = d.at(vd + i);
    }
    std::vector<BigRat> c(static_cast<std::size_t>(len), BigRat(0));
    for (int i = 0; i < len; ++i) {
        BigRat s = a[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) s -= c[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
        c[static_cast<std::size_t>(i)] = s / b[0];
    }
    out.coeffs = std::move(c);
    return out;
}

}  // namespace qkgr
