#include <doctest.h>

#include <random>

#include "qkgr/kring.hpp"

using namespace qkgr;

TEST_CASE("equivariant pairing on the projective line") {
    GrassmannianCtx ctx(1, 2);
    CHECK(pairing_equivariant(ctx, LaurentPoly(BigRat(1))) == LaurentPoly(BigRat(1)));
    CHECK(pairing_equivariant(ctx, LaurentPoly::var("P1")).is_zero());
}

TEST_CASE("equivariant pairing on Gr(2,4)") {
    GrassmannianCtx ctx(2, 4);
    CHECK(pairing_equivariant(ctx, LaurentPoly(BigRat(1))) == LaurentPoly(BigRat(1)));

    // oracle: the fixed-point sum evaluated at random rational characters equals
    // the cleared polynomial evaluated there
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> val(2, 60);
    LaurentPoly phi = schur_poly(2, {2, 1}) + schur_poly(2, {1, 0}) * BigRat(-3);
    LaurentPoly cleared = pairing_equivariant(ctx, phi);
    for (int rep = 0; rep < 3; ++rep) {
        std::map<std::string, BigRat> lam;
        std::set<int> used;
        for (int j = 1; j <= 4; ++j) {
            int v = val(rng);
            while (used.count(v)) v = val(rng);
            used.insert(v);
            lam[lvar(j)] = BigRat(v);
        }
        BigRat direct(0);
        for (const auto& fp : all_fixed_points(ctx)) {
            std::map<std::string, Mono> repl;
            for (int a = 0; a < 2; ++a)
                repl[pvar(a + 1)] = Mono::var(lvar(fp.indices[static_cast<std::size_t>(a)]));
            BigRat num = phi.substitute_mono(repl).evaluate(lam);
            BigRat eu(1);
            std::set<int> inI(fp.indices.begin(), fp.indices.end());
            for (int i : fp.indices)
                for (int j = 1; j <= 4; ++j)
                    if (!inI.count(j)) eu *= 1 - lam.at(lvar(i)) / lam.at(lvar(j));
            direct += num / eu;
        }
        CHECK(direct == cleared.evaluate(lam));
    }
}

TEST_CASE("equivariant pairing stays polynomial on random symmetric classes") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> part(0, 2);
    std::uniform_int_distribution<int> cf(-3, 3);
    for (const auto& ctx :
         {GrassmannianCtx(1, 2), GrassmannianCtx(1, 3), GrassmannianCtx(2, 3), GrassmannianCtx(2, 4)}) {
        for (int rep = 0; rep < 12; ++rep) {
            std::vector<int> lam(static_cast<std::size_t>(ctx.n));
            for (auto& v : lam) v = part(rng);
            std::sort(lam.rbegin(), lam.rend());
            int c = cf(rng);
            LaurentPoly phi = schur_poly(ctx.n, lam) * BigRat(c == 0 ? 1 : c);
            LaurentPoly eq = pairing_equivariant(ctx, phi);  // throws if not polynomial
            std::map<std::string, BigRat> ones;
            for (int j = 1; j <= ctx.N; ++j) ones[lvar(j)] = BigRat(1);
            CHECK(eq.evaluate(ones) == pairing_nonequivariant(ctx, phi));
        }
    }
}

TEST_CASE("non-equivariant pairing examples") {
    GrassmannianCtx ctx(1, 2);
    CHECK(pairing_nonequivariant(ctx, LaurentPoly(BigRat(1))) == 1);
    CHECK(pairing_nonequivariant(ctx, LaurentPoly::var("P1", -1)) == 2);
    CHECK(pairing_nonequivariant(ctx, LaurentPoly::var("P1", 2)) == -1);
    CHECK_THROWS_AS(
        pairing_nonequivariant(GrassmannianCtx(2, 3), LaurentPoly::var("P1")), arith_error);
}

TEST_CASE("gram matrices") {
    GrassmannianCtx ctx(1, 2);
    std::vector<KClass> basis{{ctx, LaurentPoly(BigRat(1))}, {ctx, LaurentPoly::var("P1")}};
    GramResult g = gram_matrix(ctx, basis);
    CHECK(g.entries[0][0] == 1);
    CHECK(g.entries[0][1] == 0);
    CHECK(g.entries[1][1] == -1);
    CHECK(g.det == -1);

    std::vector<KClass> degenerate{{ctx, LaurentPoly(BigRat(1))}, {ctx, LaurentPoly(BigRat(1))}};
    GramResult s = gram_matrix(ctx, degenerate);
    CHECK(s.singular);
    CHECK(s.det == 0);

    for (const auto& c : {GrassmannianCtx(1, 3), GrassmannianCtx(2, 4)}) {
        std::vector<KClass> schur;
        for (const auto& lam : box_partitions(c)) schur.emplace_back(c, schur_poly(c.n, lam));
        CHECK(schur.size() == (c.n == 1 ? 3u : 6u));
        GramResult gs = gram_matrix(c, schur);
        CHECK((gs.det == 1 || gs.det == -1));
    }
}

TEST_CASE("schur polynomials") {
    CHECK(schur_poly(2, {1, 0}) == LaurentPoly::var("P1") + LaurentPoly::var("P2"));
    CHECK(schur_poly(2, {1, 1}) == LaurentPoly::var("P1") * LaurentPoly::var("P2"));
    CHECK_THROWS_AS(schur_poly(2, {1, 2}), arith_error);
}

TEST_CASE("orbit data guards") {
    GrassmannianCtx ctx(2, 4);
    FixedPoint a(ctx, {1, 2}), b(ctx, {3, 2}), c(ctx, {3, 4});
    CHECK_THROWS_AS(orbit_pair(a, c), arith_error);  // differ in both slots
    CHECK_THROWS_AS(euler_ratio(ctx, a, b, 0), arith_error);
    auto op = orbit_pair(a, b);
    CHECK(op.i0 == 1);
    CHECK(op.j0 == 3);
    CHECK(op.shared == std::vector<int>{2});
    CHECK(op.rest == std::vector<int>{4});
}

namespace {

// specialize the formal root variable by an exact m0-th root of L_{j0}/L_{i0}
std::map<std::string, BigRat> root_spec(const std::vector<BigRat>& lams, int i0, int j0, int m0) {
    std::map<std::string, BigRat> spec;
    for (std::size_t j = 0; j < lams.size(); ++j) spec[lvar(static_cast<int>(j) + 1)] = lams[j];
    auto x = exact_root(lams[static_cast<std::size_t>(j0 - 1)] / lams[static_cast<std::size_t>(i0 - 1)],
                        static_cast<unsigned>(m0));
    REQUIRE(x.has_value());
    spec["x"] = *x;
    spec["q"] = BigRat(0);
    return spec;
}

}  // namespace

TEST_CASE("Euler-class ratio equals the recursion coefficient") {
    // the two arrangements of the same quantity agree once x^{m0} = L_{j0}/L_{i0}
    struct Case {
        GrassmannianCtx ctx;
        std::vector<int> a, b;
        std::vector<BigRat> lams;
    };
    std::vector<Case> cases{
        {GrassmannianCtx(1, 2), {1}, {2}, {BigRat(1), BigRat(64)}},
        {GrassmannianCtx(2, 3), {1, 2}, {3, 2}, {BigRat(1), BigRat(5), BigRat(64)}},
        {GrassmannianCtx(2, 4), {1, 2}, {4, 2}, {BigRat(1), BigRat(5), BigRat(7), BigRat(64)}},
    };
    for (const auto& cs : cases) {
        FixedPoint alpha(cs.ctx, cs.a), beta(cs.ctx, cs.b);
        auto op = orbit_pair(alpha, beta);
        for (int m0 : {1, 2, 3}) {
            auto spec = root_spec(cs.lams, op.i0, op.j0, m0);
            BigRat lhs = euler_ratio(cs.ctx, alpha, beta, m0).evaluate(spec);
            BigRat rhs = recursion_coefficient(cs.ctx, alpha, beta, m0).evaluate(spec);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Euler-class ratio transcribes the displayed product") {
    // Gr(2,3), orbit (1,2) -> (3,2): i0 = 1, j0 = 3, shared = {2}, no rest
    GrassmannianCtx ctx(2, 3);
    FixedPoint alpha(ctx, {1, 2}), beta(ctx, {3, 2});
    for (int m0 : {1, 2}) {
        FactoredCoeff want;
        want.mul_factor(0, VarExp{{"L1", 1}, {"L3", -1}}, 1);  // (1 - L1/L3)
        want.mul_factor(0, VarExp{{"L2", 1}, {"L3", -1}}, 1);  // (1 - L2/L3)
        for (int m = -m0; m <= m0; ++m)
            if (m != 0) want.mul_factor(0, VarExp{{"x", m}}, -1);
        for (int m = 0; m <= m0; ++m)
            want.mul_factor(0, VarExp{{"x", m}, {"L2", 1}, {"L3", -1}}, -1);
        CHECK(euler_ratio(ctx, alpha, beta, m0) == want);
    }
}

TEST_CASE("modifying factor degenerations") {
    GrassmannianCtx ctx(2, 3);
    FixedPoint alpha(ctx, {1, 2}), beta(ctx, {3, 2});
    CHECK(modifying_factor_Y(ctx, alpha, beta, 1, Mono(BigRat(0))) == FactoredCoeff::one());

    // hand-built product for m0 = 1
    FactoredCoeff want;
    for (int j = 1; j <= 3; ++j) {
        VarExp m{{"Y", 1}, {"x", 1}};
        if (j != 1) {
            m[lvar(1)] = 1;
            m[lvar(j)] = -1;
        }
        want.mul_factor(0, m, 1);
    }
    want.mul_factor(0, VarExp{{"Y", 1}, {"x", 1}, {"L2", 1}, {"L3", -1}}, 1);
    want.mul_factor(0, VarExp{{"Y", 1}, {"x", 1}, {"L1", 1}, {"L2", -1}}, -1);
    CHECK(modifying_factor_Y(ctx, alpha, beta, 1) == want);

    // at Y = 1 the factor with (j, m) = (j0, m0) degenerates to 1 - Y; the rest
    // is reciprocal to the recursion coefficient
    for (int m0 : {1, 2}) {
        std::vector<BigRat> lams{BigRat(1), BigRat(5), BigRat(64)};
        auto op = orbit_pair(alpha, beta);
        auto spec = root_spec(lams, op.i0, op.j0, m0);
        spec["Y"] = BigRat(1);
        FactoredCoeff mf = modifying_factor_Y(ctx, alpha, beta, m0);
        mf.mul_factor(0, VarExp{{"Y", 1}, {"x", m0}, {lvar(op.i0), 1}, {lvar(op.j0), -1}}, -1);
        BigRat lhs = mf.evaluate(spec);
        BigRat rhs = recursion_coefficient(ctx, alpha, beta, m0).evaluate(spec);
        CHECK(lhs * rhs == 1);
    }
}
