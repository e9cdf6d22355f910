#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "metallic/sequences.hpp"

namespace metallic {

/// 1 x L board tiled by 1x1 tiles in m colors and plain tiles of sizes
/// 2..k. Board length L corresponds to sequence index n = L + 1 (the terms
/// count tilings of an (n-1) x 1 board); the empty tiling of L = 0 is the
/// single tiling behind g_1 = 1. Off-by-one lives here, nowhere else.
struct TilingProblem {
    int length = 0;  // L >= 0
    int k = 2;       // max tile size >= 2
    int m = 1;       // colors for 1x1 tiles >= 1

    void validate() const;
};

/// One piece of a tiling: size in 1..k, and for size 1 a color in 1..m
/// (color is 0 for larger tiles, which come in one variant).
struct Piece {
    int size = 1;
    int color = 0;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Left-to-right list of pieces whose sizes sum to the board length.
struct Tiling {
    std::vector<Piece> pieces;

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Exact tiling count by dynamic programming:
///   c(0) = 1,  c(L) = m*c(L-1) + sum_{s=2}^{min(k,L)} c(L-s).
BigInt count_tilings_dp(const TilingProblem& p);

struct EnumerationCapError : std::runtime_error {
    BigInt count;
    BigInt cap;
    EnumerationCapError(BigInt count_, BigInt cap_);
};

/// Explicit list of all tilings, ordered lexicographically by piece sizes
/// and then colors. Refuses to start if the count exceeds `cap`, so callers
/// never see partial output.
std::vector<Tiling> enumerate_tilings(const TilingProblem& p,
                                      const BigInt& cap = BigInt(1000000));

/// Comma-separated piece rendering: "1(c2),3" is a color-2 unit square
/// followed by a 3 x 1 tile.
std::string to_string(const Tiling& t);

struct OracleReport {
    bool agrees = false;
    int first_mismatch = -1;  // board length of the first failure, -1 if none

    explicit operator bool() const { return agrees; }
};

/// Checks count_tilings_dp(L, k, m) == g^(m)_{L+1} for 0 <= L <= maxL,
/// pitting the combinatorial count against the recurrence.
OracleReport oracle_agreement(const SequenceSpec& spec, int maxL);

}  // namespace metallic
