#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macpoly/polyring.hpp"

using namespace macpoly;

namespace {

Polynomial xv(int n, int i, int power = 1) { return Polynomial::x(n, ctx_qt(), i, power); }

RationalFunction rf(const char* num_sym) {
    return RationalFunction::variable(ctx_qt(), num_sym);
}

Polynomial random_poly(std::mt19937_64& rng, int n, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4), nterms(1, 6);
    Polynomial f(n, ctx_qt());
    const int k = nterms(rng);
    for (int j = 0; j < k; ++j) {
        Monomial e(static_cast<size_t>(n));
        for (auto& x : e) x = deg(rng);
        f.add_term(e, RationalFunction::constant(ctx_qt(), static_cast<long>(coeff(rng))));
    }
    return f;
}

}  // namespace

TEST_CASE("monomial order is descending graded-lex") {
    MonomialOrder less;
    CHECK(less({3, 1}, {2, 2}));
    CHECK(less({2, 2}, {1, 3}));
    CHECK(less({1, 1}, {1, 0}));  // higher degree first
    CHECK(less({1, 0}, {0, 1}));
    CHECK_FALSE(less({0, 1}, {1, 0}));
}

TEST_CASE("ring arithmetic") {
    CHECK(xv(2, 1) * (xv(2, 1) * xv(2, 2)) == xv(2, 1, 2) * xv(2, 2));
    Polynomial f = xv(2, 1, 3) * xv(2, 2) + xv(2, 1) * xv(2, 2, 3);
    CHECK(f.term_count() == 2);
    CHECK((f - f).is_zero());
    RationalFunction c = rf("q") / (RationalFunction::one(ctx_qt()) - rf("t"));
    Polynomial g = xv(2, 2).scale(c);
    CHECK(g.coeff({0, 1}) == c);
    CHECK(g.scale(RationalFunction::zero(ctx_qt())).is_zero());
    CHECK(f.total_degree() == 4);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + Polynomial::one(2, ctx_qt())).is_homogeneous());
    CHECK_THROWS_AS(xv(2, 1) + Polynomial::x(3, ctx_qt(), 1), std::invalid_argument);
    CHECK_THROWS_AS(xv(2, 1) + Polynomial::x(2, ctx_q(), 1), std::invalid_argument);
}

TEST_CASE("variable transposition") {
    CHECK(transpose_vars(1, xv(2, 1, 2) * xv(2, 2)) == xv(2, 1) * xv(2, 2, 2));
    Polynomial sym = xv(2, 1) * xv(2, 2);
    CHECK(transpose_vars(1, sym) == sym);
    CHECK_THROWS_AS(transpose_vars(0, sym), std::invalid_argument);
    CHECK_THROWS_AS(transpose_vars(2, sym), std::invalid_argument);
    CHECK_THROWS_AS(transpose_vars(1, Polynomial::one(1, ctx_qt())), std::invalid_argument);
}

TEST_CASE("transposition involution and distant commutation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(rng, 4, 5);
        CHECK(transpose_vars(2, transpose_vars(2, f)) == f);
        CHECK(transpose_vars(1, transpose_vars(3, f)) ==
              transpose_vars(3, transpose_vars(1, f)));
    }
}

TEST_CASE("divided difference quotient") {
    CHECK(divide_difference_quotient(1, xv(2, 1, 2)) == xv(2, 1) + xv(2, 2));
    CHECK(divide_difference_quotient(1, xv(2, 1) * xv(2, 2)).is_zero());
    CHECK(divide_difference_quotient(1, xv(2, 1, 3) * xv(2, 2)) ==
          xv(2, 1, 2) * xv(2, 2) + xv(2, 1) * xv(2, 2, 2));
    CHECK_THROWS_AS(divide_difference_quotient(1, Polynomial::one(1, ctx_qt())),
                    std::invalid_argument);
}

TEST_CASE("divided difference re-multiplication identity") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(trial % 3);
        Polynomial f = random_poly(rng, n, 6);
        const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        Polynomial g = divide_difference_quotient(i, f);
        CHECK(g * (Polynomial::x(n, ctx_qt(), i) - Polynomial::x(n, ctx_qt(), i + 1)) ==
              f - transpose_vars(i, f));
    }
}

TEST_CASE("parameter specialization") {
    // (1 - t + q - q*t)/(1 - q*t) * x1^2*x2^2
    ParamPolynomial one = ParamPolynomial::constant(ctx_qt(), 1);
    ParamPolynomial q = ParamPolynomial::variable(ctx_qt(), "q");
    ParamPolynomial t = ParamPolynomial::variable(ctx_qt(), "t");
    RationalFunction c(one - t + q - q * t, one - q * t);
    Polynomial f = (xv(2, 1, 2) * xv(2, 2, 2)).scale(c);

    Polynomial at_t1 = specialize_params(f, {{"t", RationalFunction::one(ctx_q())}}, ctx_q());
    CHECK(at_t1.is_zero());

    Polynomial at_q0 = specialize_params(f, {{"q", RationalFunction::zero(ctx_t())}}, ctx_t());
    RationalFunction expect(ParamPolynomial::constant(ctx_t(), 1) -
                            ParamPolynomial::variable(ctx_t(), "t"));
    CHECK(at_q0 == Polynomial::x(2, ctx_t(), 1, 2) * Polynomial::x(2, ctx_t(), 2, 2).scale(expect));

    Polynomial idty = specialize_params(f, {}, ctx_qt());
    CHECK(idty == f);

    // composing single substitutions equals the joint substitution
    Polynomial g = f + xv(2, 1).scale(RationalFunction(q, one - t));
    Polynomial joint = specialize_params(
        g, {{"q", RationalFunction::zero(ctx_none())}, {"t", RationalFunction::zero(ctx_none())}},
        ctx_none());
    Polynomial steps = specialize_params(
        specialize_params(g, {{"q", RationalFunction::zero(ctx_t())}}, ctx_t()),
        {{"t", RationalFunction::zero(ctx_none())}}, ctx_none());
    CHECK(joint == steps);

    // 1/(1-t) at t=1 vanishes identically
    Polynomial bad = xv(2, 1).scale(RationalFunction(one, one - t));
    CHECK_THROWS_AS(specialize_params(bad, {{"t", RationalFunction::one(ctx_q())}}, ctx_q()),
                    std::domain_error);
}

TEST_CASE("variable shift") {
    RationalFunction q2 = RationalFunction::variable(ctx_qt(), "q", 2);
    CHECK(shift_var(xv(2, 1, 2) * xv(2, 2), 1) == (xv(2, 1, 2) * xv(2, 2)).scale(q2));
    CHECK(shift_var(Polynomial::one(2, ctx_qt()), 1) == Polynomial::one(2, ctx_qt()));
    CHECK(shift_var(xv(2, 1) + xv(2, 2), 2) == xv(2, 1) + xv(2, 2).scale(rf("q")));
}

TEST_CASE("symmetry test") {
    CHECK(is_symmetric(xv(2, 1) * xv(2, 2)));
    CHECK_FALSE(is_symmetric(xv(2, 1, 2) * xv(2, 2)));
    CHECK(is_symmetric(xv(3, 1) + xv(3, 2) + xv(3, 3)));
    CHECK(is_symmetric(Polynomial::one(4, ctx_qt())));
}

TEST_CASE("context embedding and variable restriction") {
    Polynomial f = Polynomial::x(2, ctx_t(), 1).scale(
        RationalFunction::variable(ctx_t(), "t"));
    Polynomial g = embed_params(f, ctx_qt());
    CHECK(g.params() == ctx_qt());
    CHECK(g == xv(2, 1).scale(rf("t")));
    CHECK_THROWS_AS(embed_params(g, ctx_t()), std::invalid_argument);

    Polynomial h = xv(3, 1) * xv(3, 2) + Polynomial::x(3, ctx_qt(), 3);
    Polynomial r = restrict_vars(h, 2);
    CHECK(r.n() == 2);
    CHECK(r == xv(2, 1) * xv(2, 2));
}

TEST_CASE("display string") {
    ParamPolynomial one = ParamPolynomial::constant(ctx_qt(), 1);
    ParamPolynomial q = ParamPolynomial::variable(ctx_qt(), "q");
    ParamPolynomial t = ParamPolynomial::variable(ctx_qt(), "t");
    Polynomial p = xv(2, 1, 3) * xv(2, 2) + xv(2, 1) * xv(2, 2, 3) +
                   (xv(2, 1, 2) * xv(2, 2, 2)).scale(RationalFunction(one - t + q - q * t, one - q * t));
    CHECK(p.str() ==
          "x1^3*x2 + ((1 - t + q - q*t)/(1 - q*t))*x1^2*x2^2 + x1*x2^3");
    CHECK((xv(2, 1) + xv(2, 2)).str() == "x1 + x2");
    CHECK(Polynomial(2, ctx_qt()).str() == "0");
    CHECK(xv(2, 2).scale(rf("q")).str() == "q*x2");
    CHECK(Polynomial::constant(2, ctx_qt(), RationalFunction::constant(ctx_qt(), -3L)).str() == "-3");
}

TEST_CASE("numeric evaluation") {
    ParamPolynomial one = ParamPolynomial::constant(ctx_qt(), 1);
    ParamPolynomial q = ParamPolynomial::variable(ctx_qt(), "q");
    ParamPolynomial t = ParamPolynomial::variable(ctx_qt(), "t");
    Polynomial p = xv(2, 1, 2).scale(RationalFunction(q, one - t));
    std::map<std::string, mpq_class> pt{{"q", mpq_class(1, 2)}, {"t", mpq_class(1, 3)}};
    CHECK(p.eval(pt, {mpq_class(2), mpq_class(5)}) == mpq_class(3));
    std::map<std::string, double> ptd{{"q", 0.5}, {"t", 0.25}};
    CHECK(p.eval(ptd, {3.0, 1.0}) == doctest::Approx(6.0));
}
