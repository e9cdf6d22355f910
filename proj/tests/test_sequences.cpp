#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metallic/sequences.hpp"

using namespace metallic;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((SequenceSpec{1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SequenceSpec{2, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SequenceSpec{3, -2}.validate()), std::invalid_argument);
    CHECK_NOTHROW((SequenceSpec{2, 1}.validate()));
}

TEST_CASE("recurrence_terms argument checks") {
    CHECK_THROWS_AS(recurrence_terms(SequenceSpec{2, 1}, 1), std::invalid_argument);
    CHECK(recurrence_terms(SequenceSpec{2, 1}, 2).terms == ints({0, 1}));
}

TEST_CASE("quadratic level 1 is Fibonacci") {
    TermVector g = recurrence_terms(SequenceSpec{2, 1}, 12);
    CHECK(g.terms == ints({0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
    CHECK(g.spec == SequenceSpec{2, 1});
}

TEST_CASE("quadratic level 2 is Pell") {
    CHECK(recurrence_terms(SequenceSpec{2, 2}, 9).terms ==
          ints({0, 1, 2, 5, 12, 29, 70, 169, 408}));
}

TEST_CASE("quadratic level 3 is the bronze sequence") {
    CHECK(recurrence_terms(SequenceSpec{2, 3}, 8).terms ==
          ints({0, 1, 3, 10, 33, 109, 360, 1189}));
}

TEST_CASE("cubic level 1 is tribonacci") {
    CHECK(recurrence_terms(SequenceSpec{3, 1}, 11).terms ==
          ints({0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149}));
}

TEST_CASE("cubic level 2") {
    CHECK(recurrence_terms(SequenceSpec{3, 2}, 14).terms ==
          ints({0, 1, 2, 5, 13, 33, 84, 214, 545, 1388, 3535, 9003, 22929, 58396}));
}

TEST_CASE("quartic level 1 is tetranacci") {
    CHECK(recurrence_terms(SequenceSpec{4, 1}, 11).terms ==
          ints({0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208}));
}

TEST_CASE("level 1 terms double while the truncated sum is geometric") {
    TermVector g = recurrence_terms(SequenceSpec{6, 1}, 9);
    CHECK(g.terms == ints({0, 1, 1, 2, 4, 8, 16, 32, 63}));
}

TEST_CASE("second term equals the level") {
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 6; ++m) CHECK(recurrence_terms(SequenceSpec{k, m}, 3)[2] == m);
}

TEST_CASE("terms stay positive and strictly increase from n = 2") {
    TermVector g = recurrence_terms(SequenceSpec{5, 4}, 30);
    for (int n = 2; n < 29; ++n) CHECK(g[n + 1] > g[n]);
}

TEST_CASE("gf_terms expands a rational generating function") {
    IntPolynomial x = IntPolynomial::monomial(1, 1);
    TermVector t = gf_terms(x, IntPolynomial{{BigInt(1), BigInt(-2), BigInt(-1), BigInt(-1)}}, 6);
    CHECK(t.terms == ints({0, 1, 2, 5, 13, 33}));

    // 1/(1-x) and a constant denominator that divides out
    CHECK(gf_terms(IntPolynomial::constant(1), IntPolynomial{{BigInt(1), BigInt(-1)}}, 4).terms ==
          ints({1, 1, 1, 1}));
    CHECK(gf_terms(IntPolynomial::monomial(2, 1), IntPolynomial::constant(2), 3).terms ==
          ints({0, 1, 0}));
}

TEST_CASE("gf_terms matches the recurrence on a grid") {
    IntPolynomial x = IntPolynomial::monomial(1, 1);
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m) {
            SequenceSpec spec{k, m};
            CHECK(gf_terms(x, gf_denominator(spec), 30).terms ==
                  recurrence_terms(spec, 30).terms);
        }
}

TEST_CASE("gf_terms rejects bad input") {
    IntPolynomial one = IntPolynomial::constant(1);
    CHECK_THROWS_AS(gf_terms(one, IntPolynomial::monomial(1, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(gf_terms(one, IntPolynomial{{BigInt(2), BigInt(1)}}, 3), std::domain_error);
    CHECK_THROWS_AS(gf_terms(one, one, -1), std::invalid_argument);
}

TEST_CASE("gf_denominator") {
    CHECK(gf_denominator(SequenceSpec{2, 3}) == IntPolynomial{{BigInt(1), BigInt(-3), BigInt(-1)}});
    CHECK(gf_denominator(SequenceSpec{4, 1}) ==
          IntPolynomial{{BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1), BigInt(-1)}});
}
