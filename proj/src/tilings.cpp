#include "metallic/tilings.hpp"

namespace metallic {

void TilingProblem::validate() const {
    if (length < 0) throw std::invalid_argument("TilingProblem: length must be >= 0");
    if (k < 2) throw std::invalid_argument("TilingProblem: k must be >= 2");
    if (m < 1) throw std::invalid_argument("TilingProblem: m must be >= 1");
}

BigInt count_tilings_dp(const TilingProblem& p) {
    p.validate();
    std::vector<BigInt> c(p.length + 1);
    c[0] = 1;
    for (int len = 1; len <= p.length; ++len) {
        BigInt acc = p.m * c[len - 1];
        for (int s = 2; s <= p.k && s <= len; ++s) acc += c[len - s];
        c[len] = std::move(acc);
    }
    return c[p.length];
}

EnumerationCapError::EnumerationCapError(BigInt count_, BigInt cap_)
    : std::runtime_error("enumerate_tilings: " + count_.str() + " tilings exceed the cap of " +
                         cap_.str()),
      count(std::move(count_)),
      cap(std::move(cap_)) {}

namespace {

// all colorings of one size composition, unit tiles cycling through colors
// like an odometer with the rightmost wheel fastest
void emit_colorings(const TilingProblem& p, const std::vector<int>& sizes, size_t i,
                    std::vector<Piece>& prefix, std::vector<Tiling>& out) {
    if (i == sizes.size()) {
        out.push_back(Tiling{prefix});
        return;
    }
    if (sizes[i] == 1) {
        for (int color = 1; color <= p.m; ++color) {
            prefix.push_back(Piece{1, color});
            emit_colorings(p, sizes, i + 1, prefix, out);
            prefix.pop_back();
        }
    } else {
        prefix.push_back(Piece{sizes[i], 0});
        emit_colorings(p, sizes, i + 1, prefix, out);
        prefix.pop_back();
    }
}

// size compositions of the board length in lexicographic order; sizes are
// the primary sort key of the output, colors the secondary
void compositions(const TilingProblem& p, int remaining, std::vector<int>& sizes,
                  std::vector<Tiling>& out) {
    if (remaining == 0) {
        std::vector<Piece> prefix;
        emit_colorings(p, sizes, 0, prefix, out);
        return;
    }
    for (int s = 1; s <= p.k && s <= remaining; ++s) {
        sizes.push_back(s);
        compositions(p, remaining - s, sizes, out);
        sizes.pop_back();
    }
}

}  // namespace

std::vector<Tiling> enumerate_tilings(const TilingProblem& p, const BigInt& cap) {
    p.validate();
    BigInt total = count_tilings_dp(p);
    if (total > cap) throw EnumerationCapError(total, cap);

    std::vector<Tiling> out;
    out.reserve(total.convert_to<size_t>());
    std::vector<int> sizes;
    compositions(p, p.length, sizes, out);
    return out;
}

std::string to_string(const Tiling& t) {
    std::string out;
    for (size_t i = 0; i < t.pieces.size(); ++i) {
        if (i > 0) out += ',';
        const Piece& piece = t.pieces[i];
        out += std::to_string(piece.size);
        if (piece.size == 1) out += "(c" + std::to_string(piece.color) + ")";
    }
    return out;
}

OracleReport oracle_agreement(const SequenceSpec& spec, int maxL) {
    spec.validate();
    if (maxL < 1) throw std::invalid_argument("oracle_agreement: maxL must be >= 1");

    TermVector g = recurrence_terms(spec, maxL + 2);
    for (int len = 0; len <= maxL; ++len) {
        TilingProblem p{len, spec.k, spec.m};
        if (count_tilings_dp(p) != g[len + 1]) return OracleReport{false, len};
    }
    return OracleReport{true, -1};
}

}  // namespace metallic
