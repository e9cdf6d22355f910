#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metallic/polynomial.hpp"

using namespace metallic;

namespace {

IntPolynomial make(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    for (long long v : ascending) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

}  // namespace

TEST_CASE("construction trims trailing zero coefficients") {
    CHECK(make({1, 0, 0}).degree() == 0);
    CHECK(make({0, 0, 0}).is_zero());
    CHECK(make({}).degree() == -1);
    CHECK(make({0, 1}).degree() == 1);
}

TEST_CASE("coeff is total, leading is partial") {
    IntPolynomial p = make({-1, -1, 1});
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.leading() == 1);
    CHECK_THROWS_AS(IntPolynomial::zero().leading(), std::logic_error);
}

TEST_CASE("monomial and constant") {
    CHECK(IntPolynomial::monomial(3, 2) == make({0, 0, 3}));
    CHECK(IntPolynomial::monomial(0, 5).is_zero());
    CHECK(IntPolynomial::constant(-4) == make({-4}));
    CHECK_THROWS_AS(IntPolynomial::monomial(1, -1), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
    IntPolynomial xm1 = make({-1, 1});
    IntPolynomial xp1 = make({1, 1});
    CHECK(xm1 * xp1 == make({-1, 0, 1}));
    CHECK(xm1 + xp1 == make({0, 2}));
    CHECK(xp1 - xp1 == IntPolynomial::zero());
    CHECK(-xm1 == make({1, -1}));
    CHECK(xm1 * IntPolynomial::zero() == IntPolynomial::zero());

    IntPolynomial fib = make({-1, -1, 1});
    CHECK(xm1 * fib == make({1, 0, -2, 1}));
}

TEST_CASE("derivative") {
    CHECK(derivative(make({1, 0, -2, 1})) == make({0, -4, 3}));
    CHECK(derivative(make({7})) == IntPolynomial::zero());
    CHECK(derivative(IntPolynomial::zero()) == IntPolynomial::zero());
}

TEST_CASE("eval_exact") {
    IntPolynomial fib = make({-1, -1, 1});
    CHECK(eval_exact(fib, Rational{2}) == Rational{1});
    CHECK(eval_exact(fib, Rational{1, 2}) == Rational{-5, 4});
    CHECK(eval_exact(IntPolynomial::zero(), Rational{9}) == Rational{0});
    IntPolynomial cubic = make({-1, -1, -2, 1});
    CHECK(eval_exact(cubic, Rational{-3}) == Rational{-43});
    CHECK(eval_exact(cubic, Rational{3}) == Rational{5});
}

TEST_CASE("descartes_sign_changes") {
    CHECK(descartes_sign_changes(make({-1, -1, 1})) == 1);
    CHECK(descartes_sign_changes(make({1, -3, 3, -1})) == 3);
    CHECK(descartes_sign_changes(make({1, 1, 1})) == 0);
    CHECK(descartes_sign_changes(make({-1, 0, 1})) == 1);
}

TEST_CASE("content and primitive part") {
    CHECK(content(make({6, -9, 3})) == 3);
    CHECK(content(IntPolynomial::zero()) == 0);
    CHECK(primitive_part(make({6, -9, 3})) == make({2, -3, 1}));
    CHECK(primitive_part(make({-2, -4})) == make({1, 2}));
}

TEST_CASE("poly_gcd finds the common factor") {
    IntPolynomial xm1 = make({-1, 1});
    IntPolynomial a = xm1 * make({1, 0, 1});
    IntPolynomial b = xm1 * make({2, 1});
    CHECK(poly_gcd(a, b) == xm1);

    CHECK(poly_gcd(make({-1, -1, 1}), make({1, 1, 1})).degree() == 0);
    CHECK(poly_gcd(a, IntPolynomial::zero()) == primitive_part(a));
}

TEST_CASE("poly_gcd survives coefficient growth") {
    IntPolynomial common = make({3, 0, -7, 1, 5});
    IntPolynomial a = common * make({11, -4, 9, 1});
    IntPolynomial b = common * make({-5, 13, 2});
    CHECK(poly_gcd(a, b) == primitive_part(common));
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(make({-1, -1, 1})));
    IntPolynomial xm1 = make({-1, 1});
    CHECK_FALSE(is_squarefree(xm1 * xm1));
    CHECK_FALSE(is_squarefree(xm1 * xm1 * make({1, 1})));
    CHECK(is_squarefree(xm1 * make({1, 1})));
    CHECK_THROWS_AS(is_squarefree(IntPolynomial::constant(2)), std::invalid_argument);
    CHECK_THROWS_AS(is_squarefree(IntPolynomial::zero()), std::invalid_argument);
}
