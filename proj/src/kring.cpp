#include "qkgr/kring.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <set>

namespace qkgr {

GrassmannianCtx::GrassmannianCtx(int n_, int N_) : n(n_), N(N_) {
    if (n < 1 || N < n) throw arith_error("need 1 <= n <= N");
}

KClass::KClass(GrassmannianCtx c, LaurentPoly v) : ctx(c), value(std::move(v)) {
    if (!is_symmetric(value, p_vars(ctx.n))) throw arith_error("class not symmetric in P");
}

FixedPoint::FixedPoint(GrassmannianCtx c, std::vector<int> idx) : ctx(c), indices(std::move(idx)) {
    if (static_cast<int>(indices.size()) != ctx.n) throw arith_error("fixed point needs n indices");
    std::set<int> seen;
    for (int i : indices) {
        if (i < 1 || i > ctx.N) throw arith_error("fixed point index out of range");
        if (!seen.insert(i).second) throw arith_error("fixed point indices must be distinct");
    }
}

std::vector<FixedPoint> all_fixed_points(const GrassmannianCtx& ctx) {
    std::vector<FixedPoint> out;
    std::vector<int> idx(ctx.n);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.emplace_back(ctx, idx);
        int k = ctx.n - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == ctx.N - (ctx.n - 1 - k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < ctx.n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

LaurentPoly binom_LL(int a, int b) {
    // 1 - L_a/L_b
    LaurentPoly r(BigRat(1));
    Mono m(BigRat(-1), VarExp{{lvar(a), 1}, {lvar(b), -1}});
    r.add_term(m.exps, m.coeff);
    return r;
}

std::vector<std::vector<int>> n_subsets(int N, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.push_back(idx);
        int k = n - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == N - (n - 1 - k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

LaurentPoly restrict_to(const LaurentPoly& phi, const std::vector<int>& subset) {
    std::map<std::string, Mono> repl;
    for (std::size_t a = 0; a < subset.size(); ++a)
        repl[pvar(static_cast<int>(a) + 1)] = Mono::var(lvar(subset[a]));
    return phi.substitute_mono(repl);
}

}  // namespace

LaurentPoly pairing_equivariant(const GrassmannianCtx& ctx, const LaurentPoly& phi) {
    if (!is_symmetric(phi, p_vars(ctx.n))) throw arith_error("class not symmetric in P");
    const auto subsets = n_subsets(ctx.N, ctx.n);

    // Sum over fixed points of Phi|_I / Eu(T_I X), cleared over the common
    // denominator prod_{a != b} (1 - L_a/L_b).
    LaurentPoly num;
    for (const auto& I : subsets) {
        std::set<int> inI(I.begin(), I.end());
        LaurentPoly t = restrict_to(phi, I);
        for (int a = 1; a <= ctx.N; ++a) {
            for (int b = 1; b <= ctx.N; ++b) {
                if (a == b) continue;
                bool in_euler = inI.count(a) && !inI.count(b);
                if (!in_euler) t = t * binom_LL(a, b);
            }
        }
        num = num + t;
    }
    for (int a = 1; a <= ctx.N; ++a) {
        for (int b = 1; b <= ctx.N; ++b) {
            if (a == b) continue;
            auto q = num.divide_exact(binom_LL(a, b));
            if (!q) throw arith_error("pairing not polynomial");
            num = *q;
        }
    }
    return num;
}

namespace {

// Rational function of u from a Laurent polynomial in the single variable u.
RatFuncQ univariate(const LaurentPoly& p, const std::string& var) {
    if (p.is_zero()) return RatFuncQ(BigRat(0));
    int mn = p.min_exp(var);
    int mx = 0;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& [v, k] : e)
            if (v != var && k != 0) throw arith_error("univariate: extra variable " + v);
        mx = std::max(mx, exp_get(e, var));
    }
    std::vector<BigRat> coef(static_cast<std::size_t>(mx - mn) + 1, BigRat(0));
    for (const auto& [e, c] : p.terms()) coef[static_cast<std::size_t>(exp_get(e, var) - mn)] = c;
    Poly1 num(std::move(coef));
    if (mn >= 0) return RatFuncQ(num * Poly1::monomial(mn), Poly1(BigRat(1)));
    return RatFuncQ(num, Poly1::monomial(-mn));
}

}  // namespace

BigRat pairing_nonequivariant(const GrassmannianCtx& ctx, const LaurentPoly& phi) {
    if (!is_symmetric(phi, p_vars(ctx.n))) throw arith_error("class not symmetric in P");
    const auto subsets = n_subsets(ctx.N, ctx.n);
    RatFuncQ total;
    for (const auto& I : subsets) {
        std::set<int> inI(I.begin(), I.end());
        // Phi at P_a = u^{I_a}
        std::map<std::string, Mono> repl;
        for (std::size_t a = 0; a < I.size(); ++a)
            repl[pvar(static_cast<int>(a) + 1)] = Mono::var("u", I[a]);
        for (int j = 1; j <= ctx.N; ++j) repl[lvar(j)] = Mono::var("u", j);
        RatFuncQ term = univariate(phi.substitute_mono(repl), "u");
        for (int a : I) {
            for (int b = 1; b <= ctx.N; ++b) {
                if (inI.count(b)) continue;
                // 1 - u^{a-b}
                LaurentPoly f(BigRat(1));
                f.add_term(VarExp{{"u", a - b}}, BigRat(-1));
                term = term / univariate(f, "u");
            }
        }
        total = total + term;
    }
    LocalExpansion le = local_expand(total, BigRat(1), 0);
    if (le.lead < 0) {
        for (int k = le.lead; k < 0; ++k)
            if (le.coeff(k) != 0) throw arith_error("non-equivariant limit has a pole");
    }
    BigRat v = le.coeff(0);
    if (!is_integer(v)) throw arith_error("non-integer Euler characteristic");
    return v;
}

GramResult gram_matrix(const GrassmannianCtx& ctx, const std::vector<KClass>& basis) {
    GramResult g;
    const std::size_t k = basis.size();
    g.entries.assign(k, std::vector<BigRat>(k, BigRat(0)));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            BigRat v = pairing_nonequivariant(ctx, basis[a].value * basis[b].value);
            g.entries[a][b] = v;
            g.entries[b][a] = v;
        }
    }
    // Gaussian elimination over Q
    auto m = g.entries;
    BigRat det(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) {
            det = 0;
            break;
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            if (m[r][col] == 0) continue;
            BigRat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
        }
    }
    g.det = det;
    g.singular = (det == 0);
    return g;
}

LaurentPoly schur_poly(int n, const std::vector<int>& lambda) {
    std::vector<int> lam(lambda);
    lam.resize(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) throw arith_error("not a partition");
    // exponents lambda_j + n - j, alternating sum over permutations
    std::vector<int> expo(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) expo[static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)] + n - 1 - j;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly alt;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        VarExp e;
        for (int i = 0; i < n; ++i) {
            int ex = expo[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            if (ex != 0) e[pvar(i + 1)] = ex;
        }
        alt.add_term(e, inv % 2 == 0 ? BigRat(1) : BigRat(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return divide_by_vandermonde(alt, p_vars(n));
}

std::vector<std::vector<int>> box_partitions(const GrassmannianCtx& ctx) {
    std::vector<std::vector<int>> out;
    std::vector<int> lam(static_cast<std::size_t>(ctx.n), 0);
    const int w = ctx.N - ctx.n;
    // weakly decreasing parts bounded by the box width
    std::function<void(int, int)> build = [&](int pos, int hi) {
        if (pos == ctx.n) {
            out.push_back(lam);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            lam[static_cast<std::size_t>(pos)] = v;
            build(pos + 1, v);
        }
    };
    build(0, w);
    return out;
}

OrbitPair orbit_pair(const FixedPoint& alpha, const FixedPoint& beta) {
    if (!(alpha.ctx == beta.ctx)) throw arith_error("fixed points on different grassmannians");
    OrbitPair op;
    int diff = 0;
    for (int a = 0; a < alpha.ctx.n; ++a) {
        if (alpha.indices[static_cast<std::size_t>(a)] != beta.indices[static_cast<std::size_t>(a)]) {
            ++diff;
            op.axis = a;
            op.i0 = alpha.indices[static_cast<std::size_t>(a)];
            op.j0 = beta.indices[static_cast<std::size_t>(a)];
        }
    }
    if (diff != 1) throw arith_error("not connected by a 1-dimensional orbit");
    std::set<int> used;
    for (int a = 0; a < alpha.ctx.n; ++a) {
        if (a == op.axis) continue;
        op.shared.push_back(alpha.indices[static_cast<std::size_t>(a)]);
        used.insert(alpha.indices[static_cast<std::size_t>(a)]);
    }
    used.insert(op.i0);
    used.insert(op.j0);
    for (int j = 1; j <= alpha.ctx.N; ++j)
        if (!used.count(j)) op.rest.push_back(j);
    return op;
}

namespace {

VarExp lam_ratio(int a, int b) { return VarExp{{lvar(a), 1}, {lvar(b), -1}}; }

VarExp with_x(VarExp e, int m) {
    if (m != 0) e["x"] = m;
    return e;
}

}  // namespace

FactoredCoeff euler_ratio(const GrassmannianCtx&, const FixedPoint& alpha,
                          const FixedPoint& beta, int m0) {
    if (m0 <= 0) throw arith_error("cover degree m0 must be positive");
    OrbitPair op = orbit_pair(alpha, beta);
    FactoredCoeff r;
    r.mul_factor(0, lam_ratio(op.i0, op.j0), 1);
    for (int j : op.rest) r.mul_factor(0, lam_ratio(op.i0, j), 1);
    for (int i : op.shared) r.mul_factor(0, lam_ratio(i, op.j0), 1);
    for (int m = -m0; m <= m0; ++m) {
        if (m == 0) continue;
        r.mul_factor(0, VarExp{{"x", m}}, -1);
    }
    for (int j : op.rest)
        for (int m = 0; m <= m0; ++m) r.mul_factor(0, with_x(lam_ratio(op.i0, j), m), -1);
    for (int i : op.shared)
        for (int m = 0; m <= m0; ++m) r.mul_factor(0, with_x(lam_ratio(i, op.j0), m), -1);
    return r;
}

FactoredCoeff recursion_coefficient(const GrassmannianCtx& ctx, const FixedPoint& alpha,
                                    const FixedPoint& beta, int m0) {
    if (m0 <= 0) throw arith_error("cover degree m0 must be positive");
    OrbitPair op = orbit_pair(alpha, beta);
    FactoredCoeff r;
    for (int j = 1; j <= ctx.N; ++j) {
        for (int m = 1; m <= m0; ++m) {
            if (j == op.j0 && m == m0) continue;
            VarExp e = j == op.i0 ? VarExp{} : lam_ratio(op.i0, j);
            r.mul_factor(0, with_x(std::move(e), m), -1);
        }
    }
    for (int i : op.shared) {
        for (int m = 1; m <= m0; ++m) {
            r.mul_factor(0, with_x(lam_ratio(op.i0, i), m), 1);
            r.mul_factor(0, with_x(lam_ratio(i, op.j0), m), -1);
        }
    }
    return r;
}

FactoredCoeff modifying_factor_Y(const GrassmannianCtx& ctx, const FixedPoint& alpha,
                                 const FixedPoint& beta, int m0, const Mono& y) {
    if (m0 <= 0) throw arith_error("cover degree m0 must be positive");
    if (y.is_zero()) return FactoredCoeff::one();
    if (y.coeff != 1) throw arith_error("Y substitute must be a unit monomial");
    OrbitPair op = orbit_pair(alpha, beta);
    FactoredCoeff r;
    auto mul = [&](VarExp base, int m, int count) {
        r.mul_factor(0, with_x(exp_mul(std::move(base), y.exps), m), count);
    };
    for (int j = 1; j <= ctx.N; ++j)
        for (int m = 1; m <= m0; ++m) mul(j == op.i0 ? VarExp{} : lam_ratio(op.i0, j), m, 1);
    for (int i : op.shared) {
        for (int m = 1; m <= m0; ++m) {
            mul(lam_ratio(i, op.j0), m, 1);
            mul(lam_ratio(op.i0, i), m, -1);
        }
    }
    return r;
}

FactoredCoeff superspace_recursion_coefficient(const GrassmannianCtx& ctx,
                                               const FixedPoint& alpha, const FixedPoint& beta,
                                               int m0) {
    if (m0 <= 0) throw arith_error("cover degree m0 must be positive");
    OrbitPair op = orbit_pair(alpha, beta);
    FactoredCoeff r;
    for (int i : op.shared) {
        for (int m = 1; m <= m0; ++m)
            r.mul_factor(0, with_x(exp_mul(lam_ratio(op.i0, i), VarExp{{"L0", 1}}), m), 1);
        for (int m = 0; m <= m0 - 1; ++m)
            r.mul_factor(0, with_x(exp_mul(lam_ratio(i, op.i0), VarExp{{"L0", 1}}), -m), -1);
    }
    for (int j = 1; j <= ctx.N; ++j) {
        for (int m = 0; m <= m0 - 1; ++m) {
            if (j == op.j0 && m == 0) continue;
            VarExp e = j == op.j0 ? VarExp{} : lam_ratio(op.j0, j);
            r.mul_factor(0, with_x(std::move(e), -m), -1);
        }
    }
    return r;
}

}  // namespace qkgr
