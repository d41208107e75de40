#ifndef HRNS_CYCPRES_HPP
#define HRNS_CYCPRES_HPP

#include "hrns/circulant.hpp"

#include <cstddef>
#include <vector>

namespace hrns {

// One letter of a word in the free group on x_0, ..., x_{n-1}.
struct Letter {
    std::size_t index; // generator index, < n
    int sign;          // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Defining word w of a cyclic presentation G_n(w); the n relators are the
// cyclic index shifts of w.
struct CyclicWord {
    std::size_t n = 0;
    std::vector<Letter> letters;

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

// Parameters of the generalized Fibonacci group H(r,n,s):
//   x_i x_{i+1} ... x_{i+r-1} = x_{i+r} ... x_{i+r+s-1}   (indices mod n).
struct HParams {
    long long r = 1;
    long long n = 2;
    long long s = 1;

    bool valid() const noexcept { return r >= 1 && s >= 1 && n >= 2; }
    friend bool operator==(const HParams&, const HParams&) = default;
    friend auto operator<=>(const HParams&, const HParams&) = default;
};

// Throws std::invalid_argument unless r,s >= 1 and n >= 2.
void validate(const HParams& p);

// The H(r,n,s) relator as a single word: x_0 ... x_{r-1} followed by the
// inverses x_{r+s-1}^-1 ... x_r^-1, indices mod n.  Length r+s.
CyclicWord h_word(const HParams& p);

// Exponent sums per generator index.
ExponentVector exponent_vector(const CyclicWord& w);

// Abelianization of G_n(w), read off the circulant relation matrix.
AbelianGroup abelianization(const CyclicWord& w);

// |H(r,n,s)^ab|; 0 encodes infinite.
Int ab_order(const HParams& p);

namespace detail {

// The machinery is meaningful for n >= 1; public entry points enforce
// n >= 2, but derived half-parameter triples can have n = 1.
ExponentVector h_exponent_vector(long long r, long long n, long long s);
Int h_ab_order(long long r, long long n, long long s);

} // namespace detail

} // namespace hrns

#endif
