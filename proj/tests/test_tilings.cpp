#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "metallic/tilings.hpp"

using namespace metallic;

namespace {

// independent counter: walk every composition, multiply out unit colors
BigInt brute_count(int length, int k, int m) {
    if (length == 0) return 1;
    BigInt total = 0;
    for (int s = 1; s <= k && s <= length; ++s)
        total += (s == 1 ? BigInt(m) : BigInt(1)) * brute_count(length - s, k, m);
    return total;
}

}  // namespace

TEST_CASE("validation") {
    CHECK_THROWS_AS((TilingProblem{-1, 2, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((TilingProblem{0, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((TilingProblem{0, 2, 0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((TilingProblem{0, 2, 1}.validate()));
}

TEST_CASE("known counts") {
    CHECK(count_tilings_dp(TilingProblem{0, 3, 2}) == 1);
    CHECK(count_tilings_dp(TilingProblem{1, 3, 2}) == 2);
    CHECK(count_tilings_dp(TilingProblem{2, 3, 2}) == 5);
    CHECK(count_tilings_dp(TilingProblem{3, 3, 2}) == 13);
    CHECK(count_tilings_dp(TilingProblem{4, 3, 2}) == 33);
    CHECK(count_tilings_dp(TilingProblem{10, 2, 1}) == 89);
}

TEST_CASE("dp count agrees with a brute-force walk") {
    for (int k = 2; k <= 5; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int length = 0; length <= 10; ++length)
                CHECK(count_tilings_dp(TilingProblem{length, k, m}) == brute_count(length, k, m));
}

TEST_CASE("enumeration produces the thirteen boards in order") {
    std::vector<Tiling> all = enumerate_tilings(TilingProblem{3, 3, 2});
    REQUIRE(all.size() == 13);
    const char* expected[] = {
        "1(c1),1(c1),1(c1)", "1(c1),1(c1),1(c2)", "1(c1),1(c2),1(c1)", "1(c1),1(c2),1(c2)",
        "1(c2),1(c1),1(c1)", "1(c2),1(c1),1(c2)", "1(c2),1(c2),1(c1)", "1(c2),1(c2),1(c2)",
        "1(c1),2",            "1(c2),2",           "2,1(c1)",           "2,1(c2)",
        "3"};
    for (size_t i = 0; i < all.size(); ++i) CHECK(to_string(all[i]) == expected[i]);
}

TEST_CASE("a length-two board splits into squares or one domino") {
    std::vector<Tiling> all = enumerate_tilings(TilingProblem{2, 2, 1});
    REQUIRE(all.size() == 2);
    CHECK(to_string(all[0]) == "1(c1),1(c1)");
    CHECK(to_string(all[1]) == "2");
}

TEST_CASE("enumeration matches the dp count and covers the board") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 1; m <= 3; ++m)
            for (int length = 0; length <= 7; ++length) {
                TilingProblem p{length, k, m};
                std::vector<Tiling> all = enumerate_tilings(p);
                CHECK(BigInt(all.size()) == count_tilings_dp(p));
                for (const auto& t : all) {
                    int covered = 0;
                    for (const auto& piece : t.pieces) {
                        covered += piece.size;
                        CHECK(piece.size >= 1);
                        CHECK(piece.size <= k);
                        if (piece.size == 1) {
                            CHECK(piece.color >= 1);
                            CHECK(piece.color <= m);
                        } else {
                            CHECK(piece.color == 0);
                        }
                    }
                    CHECK(covered == length);
                }
            }
}

TEST_CASE("the empty board has one empty tiling") {
    std::vector<Tiling> all = enumerate_tilings(TilingProblem{0, 2, 1});
    REQUIRE(all.size() == 1);
    CHECK(all[0].pieces.empty());
    CHECK(to_string(all[0]).empty());
}

TEST_CASE("enumeration refuses oversized jobs up front") {
    try {
        enumerate_tilings(TilingProblem{3, 3, 2}, BigInt(5));
        FAIL("expected EnumerationCapError");
    } catch (const EnumerationCapError& e) {
        CHECK(e.count == 13);
        CHECK(e.cap == 5);
    }
}

TEST_CASE("tiling counts reproduce the sequence with index shift one") {
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m) {
            OracleReport rep = oracle_agreement(SequenceSpec{k, m}, 12);
            CHECK(rep.agrees);
            CHECK(rep.first_mismatch == -1);
            CHECK(static_cast<bool>(rep));
        }
    CHECK_THROWS_AS(oracle_agreement(SequenceSpec{2, 1}, 0), std::invalid_argument);
}

TEST_CASE("piece rendering") {
    CHECK(to_string(Tiling{{Piece{1, 2}, Piece{3, 0}}}) == "1(c2),3");
    CHECK(to_string(Tiling{{Piece{2, 0}}}) == "2");
}
