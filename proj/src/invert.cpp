#include "metallic/invert.hpp"

#include <stdexcept>

namespace metallic {

namespace {

void require_leading_zero(const TermVector& v, const char* who) {
    if (v.terms.empty() || v.terms[0] != 0)
        throw std::invalid_argument(std::string(who) + ": sequence must start with a 0 term");
}

}  // namespace

TermVector invert_once(const TermVector& a) {
    require_leading_zero(a, "invert_once");
    const size_t n = a.size();
    std::vector<BigInt> b(n);
    for (size_t i = 1; i < n; ++i) {
        BigInt acc = a.terms[i];
        for (size_t j = 1; j < i; ++j) acc += a.terms[j] * b[i - j];
        b[i] = std::move(acc);
    }
    return TermVector{std::nullopt, std::move(b)};
}

TermVector invert_iterate(const TermVector& a, int times) {
    if (times < 0) throw std::invalid_argument("invert_iterate: times must be >= 0");
    require_leading_zero(a, "invert_iterate");
    TermVector out = a;
    for (int t = 0; t < times; ++t) out = invert_once(out);
    return out;
}

TermVector deinvert(const TermVector& b) {
    require_leading_zero(b, "deinvert");
    const size_t n = b.size();
    std::vector<BigInt> a(n);
    for (size_t i = 1; i < n; ++i) {
        BigInt acc = b.terms[i];
        for (size_t j = 1; j < i; ++j) acc -= a[j] * b.terms[i - j];
        a[i] = std::move(acc);
    }
    return TermVector{std::nullopt, std::move(a)};
}

}  // namespace metallic
