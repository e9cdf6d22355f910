#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metallic/charpoly.hpp"
#include "metallic/formats.hpp"

using namespace metallic;

namespace {

TermVector seq(std::initializer_list<long long> values) {
    TermVector v;
    v.terms.assign(values.begin(), values.end());
    return v;
}

IntPolynomial make(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    for (long long v : ascending) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

}  // namespace

TEST_CASE("parse_output_format") {
    CHECK(parse_output_format("plain") == OutputFormat::Plain);
    CHECK(parse_output_format("json") == OutputFormat::Json);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK(parse_output_format("bfile") == OutputFormat::Bfile);
    CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_output_format("Plain"), std::invalid_argument);
}

TEST_CASE("plain rendering") {
    CHECK(to_plain(seq({0, 1, 1, 2})) == "0 1 1 2\n");
    CHECK(to_plain(seq({-7})) == "-7\n");
}

TEST_CASE("bfile rendering skips the zeroth term") {
    CHECK(to_bfile(seq({0, 1, 2, 5})) == "1 1\n2 2\n3 5\n");
    CHECK(to_bfile(seq({0})).empty());
}

TEST_CASE("csv rendering") {
    CHECK(to_csv(seq({0, 1, 3})) == "n,value\n0,0\n1,1\n2,3\n");
}

TEST_CASE("json terms are decimal strings") {
    CHECK(to_json_terms(seq({0, 1, -2})) == "[\"0\",\"1\",\"-2\"]\n");
    TermVector big;
    big.terms.push_back(pow_int(10, 30));
    CHECK(to_json_terms(big) == "[\"1000000000000000000000000000000\"]\n");
}

TEST_CASE("render_terms dispatches on the format") {
    TermVector v = seq({0, 1, 1});
    CHECK(render_terms(v, OutputFormat::Plain) == to_plain(v));
    CHECK(render_terms(v, OutputFormat::Json) == to_json_terms(v));
    CHECK(render_terms(v, OutputFormat::Csv) == to_csv(v));
    CHECK(render_terms(v, OutputFormat::Bfile) == to_bfile(v));
}

TEST_CASE("polynomial rendering, descending powers") {
    CHECK(to_string(metallic_charpoly(SequenceSpec{3, 2})) == "x^3 - 2*x^2 - x - 1");
    CHECK(to_string(q_poly(SequenceSpec{3, 2})) == "x^4 - 3*x^3 + x^2 + 1");
    CHECK(to_string(make({0, 1})) == "x");
    CHECK(to_string(make({0, -1})) == "-x");
    CHECK(to_string(make({0, 2})) == "2*x");
    CHECK(to_string(make({-3})) == "-3");
    CHECK(to_string(IntPolynomial::zero()) == "0");
    CHECK(to_string(make({5, 0, 0, -1})) == "-x^3 + 5");
}

TEST_CASE("json coefficients stay ascending") {
    CHECK(to_json_coeffs(metallic_charpoly(SequenceSpec{2, 1})) == "[\"-1\",\"-1\",\"1\"]");
    CHECK(to_json_coeffs(IntPolynomial::zero()) == "[]");
}

TEST_CASE("fraction rendering") {
    CHECK(to_fraction_string(Rational{89, 55}) == "89/55");
    CHECK(to_fraction_string(Rational{-3}) == "-3");
    CHECK(to_fraction_string(Rational{-1, 2}) == "-1/2");
    CHECK(to_fraction_string(Rational{0}) == "0");
}
