#include "hrns/cycpres.hpp"

#include <stdexcept>

namespace hrns {

void validate(const HParams& p) {
    if (!p.valid())
        throw std::invalid_argument("HParams: need r >= 1, s >= 1, n >= 2");
}

namespace {

CyclicWord h_word_raw(long long r, long long n, long long s) {
    CyclicWord w;
    w.n = static_cast<std::size_t>(n);
    w.letters.reserve(static_cast<std::size_t>(r + s));
    for (long long j = 0; j < r; ++j)
        w.letters.push_back({static_cast<std::size_t>(j % n), +1});
    for (long long j = r + s - 1; j >= r; --j)
        w.letters.push_back({static_cast<std::size_t>(j % n), -1});
    return w;
}

} // namespace

CyclicWord h_word(const HParams& p) {
    validate(p);
    return h_word_raw(p.r, p.n, p.s);
}

ExponentVector exponent_vector(const CyclicWord& w) {
    ExponentVector v;
    v.entries.assign(w.n, 0);
    for (const Letter& l : w.letters) v.entries[l.index] += l.sign;
    return v;
}

AbelianGroup abelianization(const CyclicWord& w) {
    return abelian_invariants(exponent_vector(w));
}

Int ab_order(const HParams& p) {
    validate(p);
    return detail::h_ab_order(p.r, p.n, p.s);
}

namespace detail {

ExponentVector h_exponent_vector(long long r, long long n, long long s) {
    if (r < 1 || s < 1 || n < 1)
        throw std::invalid_argument("h_exponent_vector: need r,s >= 1, n >= 1");
    return exponent_vector(h_word_raw(r, n, s));
}

Int h_ab_order(long long r, long long n, long long s) {
    return circulant_det_abs(h_exponent_vector(r, n, s));
}

} // namespace detail

} // namespace hrns
