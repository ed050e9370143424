#include "qkgr/diffops.hpp"

namespace qkgr {

GammaOp::GammaOp(std::vector<int> dir, Mono lambda, bool inv)
    : l(std::move(dir)), lam(std::move(lambda)), inverse(inv) {
    bool zero_dir = true;
    for (int v : l) zero_dir = zero_dir && v == 0;
    if (zero_dir && lam.is_one()) throw arith_error("trivial gamma operator");
    if (lam.coeff != 1) throw arith_error("gamma operator lambda must be a unit monomial");
}

NovikovSeries translate_apply(int axis, int k, const NovikovSeries& s) {
    if (axis < 1 || axis > s.ctx.n) throw arith_error("translation axis out of range");
    NovikovSeries r = s;
    for (auto& [d, c] : r.coeffs) {
        int e = k * d[static_cast<std::size_t>(axis - 1)];
        if (e != 0) c.mul_mono(Mono(BigRat(1), VarExp{{"q", e}}));
    }
    return r;
}

NovikovSeries gamma_apply(const GammaOp& op, const NovikovSeries& s) {
    if (static_cast<int>(op.l.size()) != s.ctx.n) throw arith_error("gamma direction length != n");
    NovikovSeries r = s;
    for (auto& [d, c] : r.coeffs) {
        int a = 0;
        for (std::size_t i = 0; i < op.l.size(); ++i) a += op.l[i] * d[i];
        c.mul_ratio(a, op.lam.exps, op.inverse ? -1 : 1);
    }
    return r;
}

Mono adams(int k, const Mono& m) {
    if (k == 0) throw arith_error("Adams operation needs k != 0");
    Mono r(m.coeff);
    for (const auto& [v, e] : m.exps) {
        bool novikov = v.size() >= 2 && v[0] == 'Q';
        int f = novikov ? (k > 0 ? k : -k) : k;
        r.exps[v] = e * f;
    }
    return r;
}

NovikovSeries level_apply(int level, const NovikovSeries& s, bool raw_sign) {
    NovikovSeries r = s;
    if (level == 0) return r;
    for (auto& [d, c] : r.coeffs) {
        VarExp pref;
        int qe = 0;
        long sign_pow = 0;
        for (int i = 1; i <= s.ctx.n; ++i) {
            int di = d[static_cast<std::size_t>(i - 1)];
            if (level * di != 0) pref[pvar(i)] = level * di;
            qe += level * (di * (di - 1) / 2);
            sign_pow += static_cast<long>(level) * di;
        }
        if (qe != 0) pref["q"] = qe;
        BigRat coeff = (raw_sign && (sign_pow % 2 != 0)) ? BigRat(-1) : BigRat(1);
        c.mul_mono(Mono(coeff, pref));
    }
    return r;
}

NovikovSeries lefschetz_apply(const Mono& y, const NovikovSeries& s) {
    NovikovSeries r = s;
    if (y.is_zero()) return r;
    if (y.coeff != 1) throw arith_error("Y substitute must be a unit monomial");
    for (auto& [d, c] : r.coeffs) {
        for (int i = 1; i <= s.ctx.n; ++i) {
            int di = d[static_cast<std::size_t>(i - 1)];
            for (int m = 1; m <= di; ++m)
                c.mul_factor(m, exp_mul(y.exps, VarExp{{pvar(i), 1}}), 1);
        }
    }
    return r;
}

NovikovSeries restore_apply(const Mono& y, const NovikovSeries& s) {
    NovikovSeries r = s;
    if (y.is_zero()) return r;
    if (y.coeff != 1) throw arith_error("Y substitute must be a unit monomial");
    const int n = s.ctx.n, N = s.ctx.N;
    for (auto& [d, c] : r.coeffs) {
        auto di = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= N; ++j)
                c.mul_factor(di(i), exp_mul(y.exps, VarExp{{pvar(i), 1}, {lvar(j), -1}}), 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                VarExp mono = i == j ? y.exps
                                     : exp_mul(y.exps, VarExp{{pvar(i), 1}, {pvar(j), -1}});
                c.mul_factor(di(i) - di(j), mono, -1);
            }
    }
    return r;
}

FactoredCoeff tangent_euler_cx(const GrassmannianCtx& ctx, const Mono& y) {
    if (y.is_zero()) return FactoredCoeff::one();
    if (y.coeff != 1) throw arith_error("Y substitute must be a unit monomial");
    FactoredCoeff c;
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.N; ++j)
            c.mul_factor(0, exp_mul(y.exps, VarExp{{pvar(i), 1}, {lvar(j), -1}}), 1);
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j) {
            VarExp mono = i == j ? y.exps : exp_mul(y.exps, VarExp{{pvar(i), 1}, {pvar(j), -1}});
            c.mul_factor(0, mono, -1);
        }
    return c;
}

std::map<int, ClearedCoeff> specialize_nonabelian(const NovikovSeries& s, bool drop_L0) {
    std::map<int, std::vector<FactoredCoeff>> classes;
    std::map<std::string, Mono> l0{{"L0", Mono::one()}};
    for (const auto& [d, c] : s.coeffs) {
        int t = 0;
        for (int v : d) t += v;
        classes[t].push_back(drop_L0 ? c.substitute_mono(l0) : c);
    }
    std::map<int, ClearedCoeff> out;
    for (auto& [t, terms] : classes) out[t] = clear_class_sum(terms);
    return out;
}

}  // namespace qkgr
