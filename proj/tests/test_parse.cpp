#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isoder/parse.hpp"
#include "test_support.hpp"

#include <random>

using namespace isoder;
using namespace isoder::testsupport;

namespace {
const BPoly X = BPoly::x();
const BPoly Y = BPoly::y();

int error_column(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}
} // namespace

TEST_CASE("polynomial grammar accepts the standard forms") {
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("x") == X);
    CHECK(parse_poly("-y") == -Y);
    CHECK(parse_poly("x^5+x^4+x^3+x^2-2*x-1") ==
          X.pow(5) + X.pow(4) + X.pow(3) + X.pow(2) - Rat(2) * X - BPoly(Rat(1)));
    CHECK(parse_poly("2*x*y + x^3") == Rat(2) * X * Y + X.pow(3));
    CHECK(parse_poly("(1/2)*x^2 + 1/2") == rat(1, 2) * X * X + BPoly(rat(1, 2)));
    CHECK(parse_poly("1/2*x") == rat(1, 2) * X);
    CHECK(parse_poly("-(x - y)^2") == -((X - Y) * (X - Y)));
    CHECK(parse_poly("x^0") == BPoly(Rat(1)));
    CHECK(parse_poly("  x\n + y ") == X + Y); // whitespace including newlines
    // A leading '-' negates the first term only; '-' after an operator is a
    // syntax error rather than a unary minus.
    CHECK(parse_poly("-x + y") == -X + Y);
    CHECK_THROWS_AS(parse_poly("3 - -2"), ParseError);
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("5") == rat(5));
    CHECK(parse_rational("-7/2") == rat(-7, 2));
    CHECK(parse_rational("  4/6") == rat(2, 3)); // canonicalized
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument); // zero denominator
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("3 4"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("implicit multiplication is rejected with a clear message") {
    for (const char* bad : {"2x", "x y", "2(x+1)", "(x+1)(x-1)", "x(y)"}) {
        CHECK_THROWS_WITH_AS(parse_poly(bad), doctest::Contains("implicit multiplication"),
                             ParseError);
    }
}

TEST_CASE("syntax errors carry 1-based line and column") {
    // "x^" fails right after the caret: column 3.
    CHECK(error_column("x^") == 3);
    // The offending '@' sits at column 5.
    CHECK(error_column("x + @") == 5);
    try {
        parse_poly("x +\n y^");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // Unbalanced parenthesis and empty input are syntax errors, not crashes.
    CHECK_THROWS_AS(parse_poly("(x + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x + "), ParseError);
}

TEST_CASE("the exponent cap bounds every parsed power") {
    ParseOptions opts;
    opts.max_degree = 8;
    CHECK(parse_poly("x^8", opts) == X.pow(8));
    CHECK_THROWS_WITH_AS(parse_poly("x^9", opts), doctest::Contains("degree"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^100000", opts), ParseError);
    // A huge exponent must be rejected without evaluating anything.
    CHECK_THROWS_AS(parse_poly("x^99999999999999999999", opts), ParseError);
    CHECK(parse_poly("x^64") == X.pow(64)); // default cap admits 64
    CHECK_THROWS_AS(parse_poly("x^65"), ParseError);
}

TEST_CASE("univariate parsers reject the other variable") {
    CHECK(parse_upoly_x("x^2 - 2*x") == UPoly({0, -2, 1}));
    CHECK(parse_upoly_y("y^3 + 1") == UPoly({1, 0, 0, 1}));
    CHECK_THROWS_AS(parse_upoly_x("y"), ParseError);
    CHECK_THROWS_AS(parse_upoly_x("x + y"), ParseError);
    CHECK_THROWS_AS(parse_upoly_y("x"), ParseError);
}

TEST_CASE("printing and reparsing round-trips") {
    const std::vector<BPoly> fixtures = {
        BPoly(),
        BPoly(Rat(1)),
        BPoly(rat(-3, 7)),
        X.pow(5) + X.pow(4) + X.pow(3) + X.pow(2) - Rat(2) * X - BPoly(Rat(1)),
        Rat(2) * X * Y + X.pow(3),
        Rat(2) * Y + X * X + BPoly(Rat(1)),
        BPoly(Rat(1)) + X * Y + X.pow(3),
        rat(-1, 2) * X * X - BPoly(rat(1, 2)),
    };
    for (const BPoly& f : fixtures) CHECK(parse_poly(print_poly(f)) == f);

    std::mt19937_64 rng(20240870);
    for (int iter = 0; iter < 60; ++iter) {
        const BPoly f = random_bpoly(rng, 4, 3);
        CHECK(parse_poly(print_poly(f)) == f);
    }
    for (int iter = 0; iter < 30; ++iter) {
        const UPoly u = random_upoly(rng, 6);
        CHECK(parse_upoly_x(print_upoly(u)) == u);
        CHECK(parse_upoly_y(print_upoly(u, "y")) == u);
    }
}

TEST_CASE("automorphism words parse letter by letter") {
    const Automorphism id = parse_automorphism("id");
    CHECK(id.is_identity_word());

    const Automorphism t = parse_automorphism("elemY(x^2+1; 3)");
    REQUIRE(t.word().size() == 1);
    const auto* ey = std::get_if<ElemY>(&t.word()[0]);
    REQUIRE(ey != nullptr);
    CHECK(ey->p == UPoly({1, 0, 1}));
    CHECK(ey->beta == rat(3));

    const Automorphism s = parse_automorphism("elemX(y^3 - y; -1/2)");
    REQUIRE(s.word().size() == 1);
    const auto* ex = std::get_if<ElemX>(&s.word()[0]);
    REQUIRE(ex != nullptr);
    CHECK(ex->q == UPoly({0, -1, 0, 1}));
    CHECK(ex->alpha == rat(-1, 2));

    const Automorphism a = parse_automorphism("affine(1, 2, 3, 4; 5, -6)");
    REQUIRE(a.word().size() == 1);
    const auto* af = std::get_if<Affine>(&a.word()[0]);
    REQUIRE(af != nullptr);
    CHECK(af->m == std::array<Rat, 4>{rat(1), rat(2), rat(3), rat(4)});
    CHECK(af->v == std::array<Rat, 2>{rat(5), rat(-6)});

    // Multi-letter word, leftmost outermost; nested commas inside parentheses
    // do not split the letter.
    const Automorphism w =
        parse_automorphism("elemY((1/2)*x; 1) affine(0,1,1,0; 0,0) elemX(y^2; 2)");
    REQUIRE(w.word().size() == 3);
    CHECK(std::holds_alternative<ElemY>(w.word()[0]));
    CHECK(std::holds_alternative<Affine>(w.word()[1]));
    CHECK(std::holds_alternative<ElemX>(w.word()[2]));
}

TEST_CASE("invalid automorphism words are rejected") {
    CHECK(parse_automorphism("").is_identity_word()); // empty word is the identity
    CHECK_THROWS_AS(parse_automorphism("rotate(1)"), ParseError);
    CHECK_THROWS_AS(parse_automorphism("elemY(x^2)"), ParseError);         // missing scale
    CHECK_THROWS_AS(parse_automorphism("elemY(y; 2)"), ParseError);        // p must be in x
    CHECK_THROWS_AS(parse_automorphism("elemX(x; 2)"), ParseError);        // q must be in y
    CHECK_THROWS_AS(parse_automorphism("affine(1,0,0; 0,0)"), ParseError); // arity
    CHECK_THROWS_AS(parse_automorphism("elemY(x^2; 3"), ParseError);       // unbalanced
    // Zero scales/singular matrices are domain errors caught at validation.
    CHECK_THROWS_AS(parse_automorphism("elemY(x; 0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_automorphism("affine(1,2,2,4; 0,0)"), std::invalid_argument);
}
