#include <doctest.h>

#include "qkgr/classparse.hpp"

using namespace qkgr;

TEST_CASE("class expression grammar") {
    CHECK(parse_class_expr("1", 2) == LaurentPoly(BigRat(1)));
    CHECK(parse_class_expr("P1^-1", 1) == LaurentPoly::var("P1", -1));
    CHECK(parse_class_expr("P1*P2", 2) ==
          LaurentPoly::var("P1") * LaurentPoly::var("P2"));
    CHECK(parse_class_expr("(P1+P2)^2", 2) ==
          (LaurentPoly::var("P1") + LaurentPoly::var("P2")).pow(2));
    CHECK(parse_class_expr("-P1 + 2", 1) ==
          LaurentPoly(BigRat(2)) - LaurentPoly::var("P1"));
    CHECK(parse_class_expr(" 3 * P1 ^ 2 - P1 ", 1) ==
          LaurentPoly::var("P1", 2) * BigRat(3) - LaurentPoly::var("P1"));
}

TEST_CASE("class expression errors carry positions") {
    CHECK_THROWS_AS(parse_class_expr("P3", 2), parse_error);
    CHECK_THROWS_AS(parse_class_expr("P1 +", 1), parse_error);
    CHECK_THROWS_AS(parse_class_expr("P1 P2", 2), parse_error);  // no implicit product
    CHECK_THROWS_AS(parse_class_expr("(P1+1", 1), parse_error);
    CHECK_THROWS_AS(parse_class_expr("(P1+1)^-1", 1), parse_error);  // non-monomial inverse
    CHECK_THROWS_AS(parse_class_expr("P", 1), parse_error);
    try {
        parse_class_expr("P1 + @", 1);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}
