#include "qkgr/series.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

namespace qkgr {

namespace {
using nlohmann::json;

int binom2(int d) { return d * (d - 1) / 2; }  // C(d,2)

VarExp pl_ratio(int i, int j) { return VarExp{{pvar(i), 1}, {lvar(j), -1}}; }
VarExp pp_ratio(int i, int j) { return VarExp{{pvar(i), 1}, {pvar(j), -1}}; }

void check_degrees(const GrassmannianCtx& ctx, const std::vector<int>& d) {
    if (static_cast<int>(d.size()) != ctx.n) throw arith_error("degree vector length must be n");
    for (int di : d)
        if (di < 0) throw arith_error("negative degree");
}

// prod_{m=0}^{a-1}(1-q^m M)^power for a>0; inverse range for a<0.
void mul_shifted_ratio(FactoredCoeff& c, int a, const VarExp& mono, int power) {
    if (a > 0) {
        for (int m = 0; m <= a - 1; ++m) c.mul_factor(m, mono, power);
    } else if (a < 0) {
        for (int m = a; m <= -1; ++m) c.mul_factor(m, mono, -power);
    }
}

}  // namespace

SeriesKind::SeriesKind(SeriesTag t, int l) : tag(t), level(l) {
    if (level != 0 && tag != SeriesTag::IT_level && tag != SeriesTag::IT_dual)
        throw arith_error("level parameter only valid for IT_level / IT_dual");
}

std::vector<std::string> SeriesKind::names() {
    return {"JT",       "J_nonequiv", "J_pt",     "J_Xtilde", "J_PiGT",
            "IT",       "IT_tilde",   "IT_level", "IT_dual",  "I_PiE_dualtaut"};
}

std::optional<SeriesKind> SeriesKind::parse(const std::string& name, int level) {
    static const std::map<std::string, SeriesTag> m = {
        {"JT", SeriesTag::JT},
        {"J_nonequiv", SeriesTag::J_nonequiv},
        {"J_pt", SeriesTag::J_pt},
        {"J_Xtilde", SeriesTag::J_Xtilde},
        {"J_PiGT", SeriesTag::J_PiGT},
        {"IT", SeriesTag::IT},
        {"IT_tilde", SeriesTag::IT_tilde},
        {"IT_level", SeriesTag::IT_level},
        {"IT_dual", SeriesTag::IT_dual},
        {"I_PiE_dualtaut", SeriesTag::I_PiE_dualtaut}};
    auto it = m.find(name);
    if (it == m.end()) return std::nullopt;
    SeriesKind k;
    k.tag = it->second;
    if (k.tag == SeriesTag::IT_level || k.tag == SeriesTag::IT_dual) k.level = level;
    return k;
}

std::string SeriesKind::name() const {
    switch (tag) {
        case SeriesTag::JT: return "JT";
        case SeriesTag::J_nonequiv: return "J_nonequiv";
        case SeriesTag::J_pt: return "J_pt";
        case SeriesTag::J_Xtilde: return "J_Xtilde";
        case SeriesTag::J_PiGT: return "J_PiGT";
        case SeriesTag::IT: return "IT";
        case SeriesTag::IT_tilde: return "IT_tilde";
        case SeriesTag::IT_level: return "IT_level";
        case SeriesTag::IT_dual: return "IT_dual";
        case SeriesTag::I_PiE_dualtaut: return "I_PiE_dualtaut";
    }
    return "?";
}

bool SeriesKind::has_Y() const {
    return tag == SeriesTag::IT || tag == SeriesTag::IT_tilde || tag == SeriesTag::I_PiE_dualtaut;
}

FactoredCoeff series_coeff(const SeriesKind& kind, const GrassmannianCtx& ctx,
                           const std::vector<int>& d) {
    check_degrees(ctx, d);
    const int n = ctx.n;
    const int N = ctx.N;
    FactoredCoeff c;
    auto di = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };

    switch (kind.tag) {
        case SeriesTag::JT:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int m = 1; m <= di(i); ++m) c.mul_factor(m, pl_ratio(i, j), -1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) c.mul_ratio(di(i) - di(j), pp_ratio(i, j));
            return c;

        case SeriesTag::J_nonequiv:
            for (int i = 1; i <= n; ++i)
                for (int m = 1; m <= di(i); ++m) c.mul_factor(m, VarExp{{pvar(i), 1}}, -N);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) c.mul_ratio(di(i) - di(j), pp_ratio(i, j));
            return c;

        case SeriesTag::J_pt:
            for (int i = 1; i <= n; ++i)
                for (int m = 1; m <= di(i); ++m) c.mul_factor(m, VarExp{}, -1);
            return c;

        case SeriesTag::J_Xtilde:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int m = 1; m <= di(i); ++m) c.mul_factor(m, pl_ratio(i, j), -1);
            return c;

        case SeriesTag::J_PiGT:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int m = 1; m <= di(i); ++m) c.mul_factor(m, pl_ratio(i, j), -1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) c.mul_ratio(di(i) - di(j), exp_mul(pp_ratio(i, j), VarExp{{"L0", 1}}));
            return c;

        case SeriesTag::IT:
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= N; ++j) {
                    for (int m = 1; m <= di(i); ++m) {
                        c.mul_factor(m, exp_mul(pl_ratio(i, j), VarExp{{"Y", 1}}), 1);
                        c.mul_factor(m, pl_ratio(i, j), -1);
                    }
                }
            }
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    c.mul_ratio(di(i) - di(j), pp_ratio(i, j));
                    c.mul_ratio(di(i) - di(j), exp_mul(pp_ratio(i, j), VarExp{{"Y", 1}}), -1);
                }
            }
            // i == j gives the trivial ratio for 1-q^m P_i/P_i but a genuine
            // Y-ratio is also trivial there (a = 0); nothing to add.
            return c;

        case SeriesTag::IT_tilde:
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= N; ++j) {
                    for (int m = 0; m <= di(i) - 1; ++m)
                        c.mul_factor(m, exp_mul(pl_ratio(i, j), VarExp{{"Y", 1}}), 1);
                    for (int m = 1; m <= di(i); ++m) c.mul_factor(m, pl_ratio(i, j), -1);
                }
            }
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i != j) c.mul_ratio(di(i) - di(j), pp_ratio(i, j));
                    mul_shifted_ratio(c, di(i) - di(j), exp_mul(pp_ratio(i, j), VarExp{{"Y", 1}}),
                                      -1);
                }
            }
            return c;

        case SeriesTag::IT_level: {
            c = series_coeff(SeriesKind(SeriesTag::JT), ctx, d);
            VarExp pref;
            int qe = 0;
            for (int i = 1; i <= n; ++i) {
                if (kind.level * di(i) != 0) pref[pvar(i)] = kind.level * di(i);
                qe += kind.level * binom2(di(i));
            }
            if (qe != 0) pref["q"] = qe;
            c.mul_mono(Mono(BigRat(1), pref));
            return c;
        }

        case SeriesTag::IT_dual: {
            // ctx here is the dual grassmannian (N-n, N); torus characters are L_j^{-1}.
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int m = 1; m <= di(i); ++m)
                        c.mul_factor(m, VarExp{{pvar(i), 1}, {lvar(j), 1}}, -1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j) c.mul_ratio(di(i) - di(j), pp_ratio(i, j));
            VarExp pref;
            int qe = 0;
            for (int i = 1; i <= n; ++i) {
                if (kind.level * di(i) != 0) pref[pvar(i)] = -kind.level * di(i);
                qe += -kind.level * binom2(di(i) + 1);
            }
            if (qe != 0) pref["q"] = qe;
            c.mul_mono(Mono(BigRat(1), pref));
            return c;
        }

        case SeriesTag::I_PiE_dualtaut:
            c = series_coeff(SeriesKind(SeriesTag::JT), ctx, d);
            for (int i = 1; i <= n; ++i)
                for (int m = 1; m <= di(i); ++m)
                    c.mul_factor(m, VarExp{{"Y", 1}, {pvar(i), 1}}, 1);
            return c;
    }
    throw arith_error("unknown series kind");
}

int q_degree_gap(const SeriesKind& kind, const GrassmannianCtx& ctx, const std::vector<int>& d) {
    return series_coeff(kind, ctx, d).q_degree_gap();
}

const FactoredCoeff* NovikovSeries::find(const std::vector<int>& d) const {
    auto it = coeffs.find(d);
    return it == coeffs.end() ? nullptr : &it->second;
}

NovikovSeries build_series(const SeriesKind& kind, const GrassmannianCtx& ctx, int truncation) {
    NovikovSeries s;
    s.ctx = ctx;
    s.nvars = kind.multi_novikov() ? ctx.n : 1;
    s.truncation = truncation;
    for (const auto& d : degree_vectors(ctx.n, truncation)) s.coeffs[d] = series_coeff(kind, ctx, d);
    return s;
}

std::vector<std::vector<int>> degree_vectors(int n, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(d);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> degree_class(int n, int total) {
    std::vector<std::vector<int>> out;
    for (auto& d : degree_vectors(n, total)) {
        int s = 0;
        for (int v : d) s += v;
        if (s == total) out.push_back(d);
    }
    return out;
}

LaurentPoly factor_poly(const QFactor& f) {
    LaurentPoly p(BigRat(1));
    VarExp e = f.mono;
    if (f.m != 0) e["q"] = f.m;
    p.add_term(e, BigRat(-1));
    return p;
}

LaurentPoly ClearedCoeff::den_poly() const {
    LaurentPoly p(BigRat(1));
    for (const auto& [f, c] : den) p = p * factor_poly(f).pow(c);
    return p;
}

bool ClearedCoeff::equals(const ClearedCoeff& o) const {
    if (den == o.den) return num == o.num;
    return num * o.den_poly() == o.num * den_poly();
}

RatFuncQ ClearedCoeff::expand(const std::map<std::string, BigRat>& spec) const {
    auto to_ratq = [&](const LaurentPoly& p) {
        LaurentPoly s = p.substitute(spec);
        // now univariate in q
        if (s.is_zero()) return RatFuncQ(BigRat(0));
        int mn = s.min_exp("q");
        int mx = 0;
        for (const auto& [e, c] : s.terms()) {
            for (const auto& [v, k] : e)
                if (v != "q" && k != 0) throw arith_error("expand: unassigned variable " + v);
            mx = std::max(mx, exp_get(e, "q"));
        }
        std::vector<BigRat> coef(static_cast<std::size_t>(mx - mn) + 1, BigRat(0));
        for (const auto& [e, c] : s.terms()) coef[static_cast<std::size_t>(exp_get(e, "q") - mn)] = c;
        Poly1 np(std::move(coef));
        if (mn >= 0) return RatFuncQ(np * Poly1::monomial(mn), Poly1(BigRat(1)));
        return RatFuncQ(np, Poly1::monomial(-mn));
    };
    return to_ratq(num) / to_ratq(den_poly());
}

bool ClearedCoeff::den_has_p_ratio() const {
    for (const auto& [f, c] : den) {
        bool pure_p = !f.mono.empty();
        for (const auto& [v, e] : f.mono)
            if (v.empty() || v[0] != 'P') pure_p = false;
        if (pure_p && f.m == 0) return true;
    }
    return false;
}

ClearedCoeff clear_class_sum(const std::vector<FactoredCoeff>& terms) {
    std::map<QFactor, int> lcd;
    for (const auto& t : terms)
        for (const auto& [f, c] : t.factors())
            if (c < 0) lcd[f] = std::max(lcd[f], -c);

    LaurentPoly num;
    for (const auto& t : terms) {
        LaurentPoly acc(t.prefactor());
        for (const auto& [f, need] : lcd) {
            auto it = t.factors().find(f);
            int have = it == t.factors().end() ? 0 : it->second;
            int extra = have + need;
            if (extra > 0) acc = acc * factor_poly(f).pow(extra);
        }
        for (const auto& [f, c] : t.factors()) {
            if (lcd.count(f)) continue;  // already handled
            if (c > 0) acc = acc * factor_poly(f).pow(c);
        }
        num = num + acc;
    }

    // Divide out the q^0 P-ratio denominators; the class sum must absorb them.
    ClearedCoeff out;
    for (const auto& [f, c] : lcd) {
        bool pure_p = !f.mono.empty();
        for (const auto& [v, e] : f.mono)
            if (v.empty() || v[0] != 'P') pure_p = false;
        if (pure_p && f.m == 0) {
            LaurentPoly fp = factor_poly(f);
            for (int k = 0; k < c; ++k) {
                auto q = num.divide_exact(fp);
                if (!q) throw arith_error("class sum failed to absorb a Vandermonde factor");
                num = *q;
            }
        } else {
            out.den[f] = c;
        }
    }
    out.num = std::move(num);
    return out;
}

ClearedCoeff symmetrized_total_coeff(const SeriesKind& kind, const GrassmannianCtx& ctx,
                                     int total) {
    std::vector<FactoredCoeff> terms;
    for (const auto& d : degree_class(ctx.n, total)) terms.push_back(series_coeff(kind, ctx, d));
    return clear_class_sum(terms);
}

namespace {

json mono_to_json(const Mono& m) {
    json e = json::object();
    for (const auto& [v, k] : m.exps) e[v] = k;
    return json{{"coeff", m.coeff.str()}, {"exps", e}};
}

Mono mono_from_json(const json& j) {
    Mono m(BigRat(j.at("coeff").get<std::string>()));
    for (const auto& [v, k] : j.at("exps").items()) {
        int e = k.get<int>();
        if (e != 0) m.exps[v] = e;
    }
    return m;
}

json factored_json(const FactoredCoeff& c) {
    json factors = json::array();
    for (const auto& [f, cnt] : c.factors()) {
        json mono = json::object();
        for (const auto& [v, e] : f.mono) mono[v] = e;
        int reps = cnt > 0 ? cnt : -cnt;
        for (int r = 0; r < reps; ++r)
            factors.push_back(json{{"m", f.m}, {"mono", mono}, {"inv", cnt < 0}});
    }
    return json{{"prefactor", mono_to_json(c.prefactor())}, {"factors", factors}};
}

FactoredCoeff factored_parse(const json& j) {
    FactoredCoeff c(mono_from_json(j.at("prefactor")));
    for (const auto& f : j.at("factors")) {
        VarExp mono;
        for (const auto& [v, e] : f.at("mono").items()) {
            int k = e.get<int>();
            if (k != 0) mono[v] = k;
        }
        c.mul_factor(f.at("m").get<int>(), mono, f.at("inv").get<bool>() ? -1 : 1);
    }
    return c;
}

}  // namespace

std::string factored_to_json(const FactoredCoeff& c) { return factored_json(c).dump(); }

FactoredCoeff factored_from_json(const std::string& text) {
    return factored_parse(json::parse(text));
}

std::string series_to_json(const NovikovSeries& s, const SeriesKind& kind) {
    json coeffs = json::array();
    for (const auto& [d, c] : s.coeffs)
        coeffs.push_back(json{{"d", d}, {"coeff", factored_json(c)}});
    json out{{"schema", "qkgr/1"},
             {"kind", kind.name()},
             {"level", kind.level},
             {"n", s.ctx.n},
             {"N", s.ctx.N},
             {"nvars", s.nvars},
             {"truncation", s.truncation},
             {"coeffs", coeffs}};
    return out.dump(2) + "\n";
}

std::pair<NovikovSeries, SeriesKind> series_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "qkgr/1") throw arith_error("unknown schema");
    auto kind = SeriesKind::parse(j.at("kind").get<std::string>(), j.value("level", 0));
    if (!kind) throw arith_error("unknown series kind in file");
    NovikovSeries s;
    s.ctx = GrassmannianCtx(j.at("n").get<int>(), j.at("N").get<int>());
    s.nvars = j.at("nvars").get<int>();
    s.truncation = j.at("truncation").get<int>();
    for (const auto& e : j.at("coeffs"))
        s.coeffs[e.at("d").get<std::vector<int>>()] = factored_parse(e.at("coeff"));
    return {std::move(s), *kind};
}

}  // namespace qkgr
