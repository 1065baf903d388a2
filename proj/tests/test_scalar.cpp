#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/scalar.hpp"

using namespace padic;

TEST_CASE("context validation and p~") {
    CHECK(PrimeContext(2, 8).p_tilde() == 4);
    CHECK(PrimeContext(3, 8).p_tilde() == 3);
    CHECK(PrimeContext(7, 8).p_tilde() == 7);
    CHECK_THROWS_AS(PrimeContext(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(1, 8), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(5, 0), std::invalid_argument);
}

TEST_CASE("valuation helpers") {
    CHECK(int_valuation(48, 2) == 4);
    CHECK(int_valuation(-9, 3) == 2);
    CHECK(factorial_valuation(10, 2) == 8);
    CHECK(factorial_valuation(100, 5) == 24);
    CHECK(rational_valuation(cpp_rational(9, 2), 3) == 2);
    CHECK(rational_valuation(cpp_rational(1, 9), 3) == -2);
}

TEST_CASE("rational embedding residues") {
    PrimeContext ctx(3, 5);
    CHECK(congruent(Scalar::from_rational(ctx, cpp_rational(1, 2)),
                    Scalar::from_integer(ctx, 122), 5));
    CHECK(congruent(Scalar::from_rational(ctx, cpp_rational(-1, 8)),
                    Scalar::from_integer(ctx, 91), 5));
    CHECK(mod_inverse(2, 243) == 122);
}

TEST_CASE("states and valuation accessors") {
    PrimeContext ctx(5, 6);
    Scalar z = Scalar::zero(ctx);
    CHECK(z.is_exact_zero());
    CHECK(z.valuation() == kValInf);
    Scalar t = Scalar::zero_to_precision(ctx, 4);
    CHECK(t.is_zero_to_precision());
    CHECK(t.valuation_lower_bound() == 4);
    CHECK_THROWS_AS(t.valuation(), std::domain_error);
    Scalar r = Scalar::from_integer(ctx, 50);
    CHECK(r.valuation() == 2);
    CHECK(r.unit() == 2);
}

TEST_CASE("precision propagation rules") {
    PrimeContext ctx(3, 10);
    // add keeps the minimum absolute precision
    Scalar a = Scalar::from_residue(ctx, 7, 5);
    Scalar b = Scalar::from_residue(ctx, 4, 8);
    CHECK((a + b).precision() == 5);
    // mul keeps the minimum relative precision
    Scalar c = Scalar::from_unit(ctx, 1, 0, 5);   // rel 5
    Scalar d = Scalar::from_unit(ctx, 1, 2, 8);   // rel 6
    Scalar cd = c * d;
    CHECK(cd.valuation() == 2);
    CHECK(cd.precision() == 7);
    // zero-to-precision absorbs into a sum at its own precision
    Scalar s = Scalar::zero_to_precision(ctx, 5) + Scalar::from_integer(ctx, 1);
    CHECK(s.is_regular());
    CHECK(s.precision() == 5);
    // division by an indeterminate zero is an error
    CHECK_THROWS_AS(a / Scalar::zero_to_precision(ctx, 5), std::domain_error);
    CHECK_THROWS_AS(a / Scalar::zero(ctx), std::domain_error);
}

TEST_CASE("exact embeddings carry guard digits") {
    PrimeContext ctx(3, 10, 20);
    Scalar n = Scalar::from_integer(ctx, 2);
    CHECK(n.precision() == 30);
    cpp_int fact = 1;
    for (int i = 2; i <= 15; ++i) fact *= i;  // v_3(15!) = 6
    Scalar q = Scalar::from_integer(ctx, fact) / Scalar::from_integer(ctx, fact);
    CHECK(congruent(q, Scalar::from_integer(ctx, 1), 10));
}

TEST_CASE("binomials and falling factorials") {
    PrimeContext ctx(3, 8);
    CHECK(binom_int(5, 3) == 10);
    CHECK(binom_int(-1, 3) == -1);
    CHECK(binom_int(-2, 2) == 3);
    CHECK(congruent(falling_factorial(Scalar::from_integer(ctx, 5), 3),
                    Scalar::from_integer(ctx, 60), 8));
    CHECK(congruent(binom(Scalar::from_integer(ctx, 5), 2),
                    Scalar::from_integer(ctx, 10), 8));
    CHECK(congruent(binom(Scalar::from_rational(ctx, cpp_rational(1, 2)), 2),
                    Scalar::from_rational(ctx, cpp_rational(-1, 8)), 8));
}

TEST_CASE("p-adic exponential against rational partial sums") {
    CHECK(congruent(exp_padic(Scalar::from_integer(PrimeContext(5, 3), 5)),
                    Scalar::from_integer(PrimeContext(5, 3), 81), 3));
    CHECK(congruent(exp_padic(Scalar::from_integer(PrimeContext(3, 6), 3)),
                    Scalar::from_integer(PrimeContext(3, 6), 229), 6));
    CHECK(congruent(exp_padic(Scalar::from_integer(PrimeContext(3, 8), 9)),
                    Scalar::from_integer(PrimeContext(3, 8), 4546), 8));
    CHECK(congruent(exp_padic(Scalar::from_integer(PrimeContext(2, 8), 4)),
                    Scalar::from_integer(PrimeContext(2, 8), 77), 8));
    CHECK_THROWS_AS(exp_padic(Scalar::from_integer(PrimeContext(2, 8), 2)),
                    std::domain_error);
    CHECK_THROWS_AS(exp_padic(Scalar::from_integer(PrimeContext(3, 8), 1)),
                    std::domain_error);
}

TEST_CASE("one-unit powers interpolate integer exponents") {
    PrimeContext ctx(3, 10);
    Scalar four = Scalar::from_integer(ctx, 4);
    CHECK(congruent(pow_one_unit(four, Scalar::from_integer(ctx, 3)),
                    Scalar::from_integer(ctx, 64), 10));
    Scalar half = Scalar::from_rational(ctx, cpp_rational(1, 2));
    Scalar s = pow_one_unit(four, half);
    CHECK(congruent(s * s, four, 10));
    CHECK_THROWS_AS(pow_one_unit(Scalar::from_integer(ctx, 2), four),
                    std::domain_error);
}

TEST_CASE("negation and residues") {
    PrimeContext ctx(7, 4);
    Scalar a = Scalar::from_integer(ctx, 3);
    CHECK(congruent(a + (-a), Scalar::zero(ctx), 4));
    CHECK(Scalar::from_rational(ctx, cpp_rational(1, 2)).integer_residue() %
              7 != 0);
}
