#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "macpoly/macdonald.hpp"
#include "macpoly/serialize.hpp"

using namespace macpoly;

TEST_CASE("json shape for the two-row value") {
    Polynomial p = macdonald_P({3, 1}, 2);
    auto j = poly_to_json(p);
    CHECK(j.dump() ==
          R"j({"n":2,"params":["q","t"],"terms":[)j"
          R"j({"exp":[3,1],"coeff":"1"},)j"
          R"j({"exp":[2,2],"coeff":"(1 - t + q - q*t)/(1 - q*t)"},)j"
          R"j({"exp":[1,3],"coeff":"1"}]})j");
}

TEST_CASE("json of the zero polynomial keeps the envelope") {
    Polynomial z(3, ctx_qt());
    auto j = poly_to_json(z);
    CHECK(j.dump() == R"({"n":3,"params":["q","t"],"terms":[]})");
}

TEST_CASE("json is byte-stable across recomputation") {
    auto a = poly_to_json(macdonald_P({2, 1, 0}, 3)).dump();
    auto b = poly_to_json(macdonald_P({2, 1, 0}, 3, {false, 2})).dump();
    CHECK(a == b);
}

TEST_CASE("latex for the two-row value") {
    Polynomial p = macdonald_P({3, 1}, 2);
    CHECK(poly_to_latex(p) ==
          "x_1^3 x_2 + \\frac{1 - t + q - q t}{1 - q t} x_1^2 x_2^2 + x_1 x_2^3");
}

TEST_CASE("latex maps alpha") {
    Polynomial p = jack_P({2, 0}, 2);
    CHECK(poly_to_latex(p) == "x_1^2 + \\frac{2}{1 + \\alpha} x_1 x_2 + x_2^2");
}

TEST_CASE("latex braces wide exponents") {
    Polynomial p = Polynomial::x(2, ctx_q(), 1, 12);
    CHECK(poly_to_latex(p) == "x_1^{12}");
    Polynomial s = p.scale(RationalFunction::variable(ctx_q(), "q", 10));
    CHECK(poly_to_latex(s) == "q^{10} x_1^{12}");
}

TEST_CASE("latex constants and signs") {
    CHECK(poly_to_latex(Polynomial(2, ctx_none())) == "0");
    CHECK(poly_to_latex(Polynomial::one(2, ctx_none())) == "1");
    Polynomial c = Polynomial::constant(2, ctx_none(),
                                        RationalFunction::constant(ctx_none(), -3));
    CHECK(poly_to_latex(c) == "-3");
    Polynomial m = Polynomial::x(2, ctx_t(), 2).scale(
        RationalFunction::variable(ctx_t(), "t") * RationalFunction::constant(ctx_t(), -2));
    CHECK(poly_to_latex(m) == "-2 t x_2");
}

TEST_CASE("latex parenthesizes polynomial coefficients without denominator") {
    Polynomial m = Polynomial::x(2, ctx_t(), 1).scale(RationalFunction(
        ParamPolynomial::constant(ctx_t(), 1) - ParamPolynomial::variable(ctx_t(), "t")));
    CHECK(poly_to_latex(m) == "(1 - t) x_1");
}

TEST_CASE("hall-littlewood latex spot value") {
    Polynomial p = hall_littlewood({1, 1}, 2, HallLittlewoodMode::standard_sum);
    CHECK(poly_to_latex(p) == "x_1 x_2");
}
