#include <doctest.h>

#include <random>

#include "qkgr/diffops.hpp"
#include "qkgr/localization.hpp"

using namespace qkgr;

namespace {

NovikovSeries jpt2(int D) { return build_series(SeriesKind(SeriesTag::J_pt), GrassmannianCtx(2, 2), D); }

}  // namespace

TEST_CASE("translation operators act by monomial eigenvalues") {
    NovikovSeries s = jpt2(4);
    NovikovSeries t = translate_apply(1, 1, s);
    CHECK(exp_get(t.coeffs.at({2, 0}).prefactor().exps, "q") == 2);
    CHECK(translate_apply(1, 0, s).coeffs == s.coeffs);
    NovikovSeries u = translate_apply(2, -1, s);
    CHECK(exp_get(u.coeffs.at({1, 3}).prefactor().exps, "q") == -3);
    CHECK_THROWS_AS(translate_apply(3, 1, s), arith_error);
}

TEST_CASE("gamma operators multiply by finitized ratios") {
    NovikovSeries s = jpt2(3);
    GammaOp op({1, 0}, Mono::var("L1"));
    NovikovSeries t = gamma_apply(op, s);
    FactoredCoeff want = s.coeffs.at({2, 0});
    want.mul_factor(1, VarExp{{"L1", 1}});
    want.mul_factor(2, VarExp{{"L1", 1}});
    CHECK(t.coeffs.at({2, 0}) == want);
    CHECK(t.coeffs.at({0, 2}) == s.coeffs.at({0, 2}));  // l.d = 0

    GammaOp down({1, -1}, Mono::var("L1"));
    NovikovSeries u = gamma_apply(down, s);
    FactoredCoeff w2 = s.coeffs.at({0, 1});
    w2.mul_factor(0, VarExp{{"L1", 1}}, -1);  // divide by (1 - L1)
    CHECK(u.coeffs.at({0, 1}) == w2);
}

TEST_CASE("gamma operators commute and invert") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> dir(-1, 1);
    std::uniform_int_distribution<int> which(1, 3);
    NovikovSeries s = jpt2(3);
    for (int rep = 0; rep < 20; ++rep) {
        auto mklam = [&] {
            VarExp e{{lvar(which(rng)), 1}, {lvar(3), -1}};
            return Mono(BigRat(1), e);
        };
        std::vector<int> l1{dir(rng), dir(rng)}, l2{dir(rng), dir(rng)};
        if (l1 == std::vector<int>{0, 0}) l1[0] = 1;
        if (l2 == std::vector<int>{0, 0}) l2[1] = 1;
        GammaOp a(l1, mklam()), b(l2, mklam());
        CHECK(gamma_apply(a, gamma_apply(b, s)).coeffs == gamma_apply(b, gamma_apply(a, s)).coeffs);

        GammaOp inv(a.l, a.lam, true);
        CHECK(gamma_apply(inv, gamma_apply(a, s)).coeffs == s.coeffs);
    }
}

TEST_CASE("Adams operations") {
    Mono m = Mono(BigRat(1), VarExp{{"L1", 1}, {"L2", -1}});
    CHECK(adams(2, m).exps == VarExp{{"L1", 2}, {"L2", -2}});
    CHECK(adams(3, Mono::var("Q1")).exps == VarExp{{"Q1", 3}});
    CHECK(adams(-1, Mono(BigRat(1), VarExp{{"Q1", 1}, {"L1", 1}})).exps ==
          VarExp{{"Q1", 1}, {"L1", -1}});
    CHECK_THROWS_AS(adams(0, m), arith_error);
}

TEST_CASE("level twists") {
    NovikovSeries s = build_series(SeriesKind(SeriesTag::J_pt), GrassmannianCtx(1, 1), 3);
    NovikovSeries t = level_apply(1, s);
    CHECK(t.coeffs.at({3}).prefactor() == Mono(BigRat(1), VarExp{{"P1", 3}, {"q", 3}}));
    CHECK(t.coeffs.at({2}).prefactor() == Mono(BigRat(1), VarExp{{"P1", 2}, {"q", 1}}));
    CHECK(level_apply(0, s).coeffs == s.coeffs);
    NovikovSeries raw = level_apply(1, s, true);
    CHECK(raw.coeffs.at({3}).prefactor() == Mono(BigRat(-1), VarExp{{"P1", 3}, {"q", 3}}));
}

TEST_CASE("Eulerian twist reproduces the dual-tautological series") {
    const Mono Y = Mono::var("Y");
    for (const auto& ctx : {GrassmannianCtx(1, 2), GrassmannianCtx(2, 2), GrassmannianCtx(2, 3)}) {
        NovikovSeries jt = build_series(SeriesKind(SeriesTag::JT), ctx, 3);
        NovikovSeries tw = lefschetz_apply(Y, jt);
        for (const auto& [d, c] : tw.coeffs)
            CHECK(c == series_coeff(SeriesKind(SeriesTag::I_PiE_dualtaut), ctx, d));
    }
    NovikovSeries s = build_series(SeriesKind(SeriesTag::JT), GrassmannianCtx(1, 2), 2);
    CHECK(lefschetz_apply(Mono(BigRat(0)), s).coeffs == s.coeffs);
    FactoredCoeff c2 = lefschetz_apply(Y, s).coeffs.at({2});
    FactoredCoeff want = s.coeffs.at({2});
    want.mul_factor(1, VarExp{{"Y", 1}, {"P1", 1}}, 1);
    want.mul_factor(2, VarExp{{"Y", 1}, {"P1", 1}}, 1);
    CHECK(c2 == want);
}

TEST_CASE("restoration of the shifted balanced series") {
    const Mono Y = Mono::var("Y");
    for (const auto& ctx : {GrassmannianCtx(1, 2), GrassmannianCtx(2, 2), GrassmannianCtx(2, 3)}) {
        NovikovSeries tilde = build_series(SeriesKind(SeriesTag::IT_tilde), ctx, 3);
        NovikovSeries restored = restore_apply(Y, tilde);
        FactoredCoeff eu = tangent_euler_cx(ctx, Y);
        // the d = 0 multiplier is exactly the C*-equivariant tangent Euler class
        CHECK(restored.coeffs.at(std::vector<int>(static_cast<std::size_t>(ctx.n), 0)) == eu);
        for (const auto& [d, c] : restored.coeffs)
            CHECK(c == eu * series_coeff(SeriesKind(SeriesTag::IT), ctx, d));
    }
    NovikovSeries s = build_series(SeriesKind(SeriesTag::IT_tilde), GrassmannianCtx(1, 2), 2);
    CHECK(restore_apply(Mono(BigRat(0)), s).coeffs == s.coeffs);
}

TEST_CASE("specialization sums to the symmetrized series") {
    GrassmannianCtx ctx(2, 2);
    NovikovSeries pigt = build_series(SeriesKind(SeriesTag::J_PiGT), ctx, 3);
    auto spec = specialize_nonabelian(pigt, true);
    CHECK(spec.at(0).num == LaurentPoly(BigRat(1)));
    for (int t = 0; t <= 3; ++t)
        CHECK(spec.at(t).equals(symmetrized_total_coeff(SeriesKind(SeriesTag::JT), ctx, t)));

    // single axis: nothing to symmetrize
    GrassmannianCtx line(1, 2);
    NovikovSeries j = build_series(SeriesKind(SeriesTag::J_PiGT), line, 2);
    auto sp = specialize_nonabelian(j, true);
    std::map<std::string, BigRat> vals{
        {lvar(1), BigRat(3)}, {lvar(2), BigRat(5)}, {pvar(1), BigRat(7)}};
    for (int t = 0; t <= 2; ++t) {
        BigRat q(11);
        CHECK(sp.at(t).expand(vals).evaluate(q) ==
              series_coeff(SeriesKind(SeriesTag::JT), line, {t}).expand(vals).evaluate(q));
    }
}
