#include <doctest.h>

#include <random>

#include "qkgr/qfactor.hpp"
#include "qkgr/series.hpp"

using namespace qkgr;

namespace {

int binom2(int a) { return a * (a - 1) / 2; }

FactoredCoeff ratio_pair(int a, const VarExp& m) {
    FactoredCoeff c;
    c.mul_ratio(a, m);
    c.mul_ratio(-a, exp_inv(m));
    return c;
}

}  // namespace

TEST_CASE("canonical orientation of factors") {
    // (1 - q^{-2} M) = -q^{-2} M (1 - q^2 M^{-1})
    FactoredCoeff a;
    a.mul_factor(-2, VarExp{{"P1", 1}});
    FactoredCoeff b(Mono(BigRat(-1), VarExp{{"q", -2}, {"P1", 1}}));
    b.mul_factor(2, VarExp{{"P1", -1}});
    CHECK(a == b);

    // q^0 factors orient by the first variable's sign
    FactoredCoeff c;
    c.mul_factor(0, VarExp{{"P1", -1}, {"P2", 1}});
    CHECK(c.factors().begin()->first.mono == VarExp{{"P1", 1}, {"P2", -1}});

    CHECK_THROWS_AS(a.mul_factor(0, VarExp{}), arith_error);
}

TEST_CASE("finitized product rearrangement") {
    // prod ratio R_a(M) R_{-a}(M^{-1}) telescopes to (-M)^a q^{C(a,2)} (1-q^a M)/(1-M)
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> expo(-2, 2);
    for (int a = -6; a <= 6; ++a) {
        for (int rep = 0; rep < 4; ++rep) {
            VarExp m;
            for (const char* v : {"P1", "P2", "L1"}) {
                int k = expo(rng);
                if (k != 0) m[v] = k;
            }
            if (m.empty()) m["P1"] = 1;
            FactoredCoeff lhs = ratio_pair(a, m);
            FactoredCoeff rhs(Mono(a % 2 == 0 ? BigRat(1) : BigRat(-1),
                                   exp_mul(exp_pow(m, a), VarExp{{"q", binom2(a)}})));
            if (a != 0) {
                rhs.mul_factor(a, m);
                rhs.mul_factor(0, m, -1);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("degree-pair rearrangement matches the closed form") {
    for (int d1 = 0; d1 <= 3; ++d1) {
        for (int d2 = 0; d2 <= 3; ++d2) {
            int a = d1 - d2;
            VarExp m{{"P1", 1}, {"P2", -1}};
            FactoredCoeff lhs;
            lhs.mul_ratio(a, m);
            lhs.mul_ratio(-a, exp_inv(m));
            FactoredCoeff rhs(Mono(a % 2 == 0 ? BigRat(1) : BigRat(-1),
                                   exp_mul(exp_pow(m, a), VarExp{{"q", binom2(a)}})));
            if (a != 0) {
                rhs.mul_factor(a, m);
                rhs.mul_factor(0, m, -1);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("expansion to rational functions of q") {
    FactoredCoeff a;
    a.mul_factor(1, VarExp{{"P1", 1}, {"L1", -1}}, -1);
    RatFuncQ f = a.expand({{"P1", BigRat(1)}, {"L1", BigRat(2)}});
    CHECK(f.evaluate(BigRat(0)) == 1);
    CHECK(f.den().at(1) == BigRat(-1, 2));

    FactoredCoeff b(Mono(BigRat(1), VarExp{{"P1", 2}, {"q", 1}}));
    RatFuncQ g = b.expand({{"P1", BigRat(3)}});
    CHECK(g.num().at(1) == 9);

    // full coefficient: 1/((1-q)(1-q/4))
    FactoredCoeff c = series_coeff(SeriesKind(SeriesTag::JT), GrassmannianCtx(1, 2), {1});
    RatFuncQ h = c.expand({{"P1", BigRat(1)}, {"L1", BigRat(1)}, {"L2", BigRat(4)}});
    CHECK(h.evaluate(BigRat(2)) == BigRat(1) / (BigRat(-1) * BigRat(1, 2)));
}

TEST_CASE("evaluation and zero denominators") {
    FactoredCoeff a;
    a.mul_factor(1, VarExp{{"P1", 1}}, -1);
    CHECK(a.evaluate({{"P1", BigRat(3)}, {"q", BigRat(2)}}) == BigRat(-1, 5));
    CHECK_THROWS_AS(a.expand({{"P1", BigRat(0)}}), arith_error);
}

TEST_CASE("pole classification") {
    FactoredCoeff a;
    a.mul_factor(2, VarExp{}, -1);  // 1/(1-q^2)
    auto cls = classify_poles(a);
    CHECK(cls.roots_of_unity.size() == 1);
    CHECK(cls.other.empty());

    FactoredCoeff b;
    b.mul_factor(1, VarExp{{"L1", 1}, {"L2", -1}}, -1);
    cls = classify_poles(b);
    CHECK(cls.roots_of_unity.empty());
    CHECK(cls.other.size() == 1);

    // localized coefficient: the i = j factors sit at roots of unity
    GrassmannianCtx ctx(2, 3);
    FactoredCoeff c = series_coeff(SeriesKind(SeriesTag::JT), ctx, {2, 1});
    std::map<std::string, Mono> repl{{"P1", Mono::var("L1")}, {"P2", Mono::var("L2")}};
    cls = classify_poles(c.substitute_mono(repl));
    CHECK(cls.roots_of_unity.size() == 3);  // m=1,2 from d1, m=1 from d2
    for (const auto& f : cls.other) CHECK_FALSE(f.mono.empty());
}

TEST_CASE("q-degree gaps") {
    GrassmannianCtx p2(1, 3);
    CHECK(q_degree_gap(SeriesKind(SeriesTag::JT), p2, {1}) == 3);
    CHECK(q_degree_gap(SeriesKind(SeriesTag::JT), GrassmannianCtx(2, 2), {1, 0}) == 1);
    // level twist shifts the gap by -l*C(d,2) per axis
    for (int l : {-1, 1, 2}) {
        SeriesKind lev(SeriesTag::IT_level, l);
        CHECK(q_degree_gap(lev, p2, {3}) ==
              q_degree_gap(SeriesKind(SeriesTag::JT), p2, {3}) - l * 3);
    }
}

TEST_CASE("canonical JSON round trip is bit-exact") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<int> mm(-3, 3);
    for (int rep = 0; rep < 25; ++rep) {
        FactoredCoeff c(Mono(BigRat(mm(rng), 3), VarExp{{"q", expo(rng)}, {"P1", expo(rng)}}));
        if (c.is_zero()) c = FactoredCoeff::one();
        for (int f = 0; f < 4; ++f) {
            VarExp m;
            for (const char* v : {"P1", "L1", "Y"}) {
                int k = expo(rng);
                if (k != 0) m[v] = k;
            }
            int mp = mm(rng);
            if (m.empty() && mp == 0) continue;
            c.mul_factor(mp, m, expo(rng) >= 0 ? 1 : -1);
        }
        std::string text = factored_to_json(c);
        FactoredCoeff back = factored_from_json(text);
        CHECK(back == c);
        CHECK(factored_to_json(back) == text);
    }
}
