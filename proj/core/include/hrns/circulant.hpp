#ifndef HRNS_CIRCULANT_HPP
#define HRNS_CIRCULANT_HPP

#include "hrns/intpoly.hpp"

#include <cstddef>
#include <vector>

namespace hrns {

// First row (a_0, ..., a_{n-1}) of the circulant relation matrix of a
// cyclically presented group on n generators: entry i is the exponent sum of
// generator i in the defining word.
struct ExponentVector {
    std::vector<Int> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Int> e) : entries(std::move(e)) {}
    ExponentVector(std::initializer_list<Int> e) : entries(e) {}

    std::size_t size() const noexcept { return entries.size(); }
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Finitely generated abelian group A_0 + Z^betti with A_0 encoded by its
// invariant factor chain d_1 | d_2 | ... | d_k, each d_i >= 2.
struct AbelianGroup {
    long betti = 0;
    std::vector<Int> invariant_factors;

    bool is_finite() const noexcept { return betti == 0; }
    // Group order; 0 encodes infinite.
    Int order() const;
    // Minimum number of generators.
    long min_generators() const noexcept {
        return betti + static_cast<long>(invariant_factors.size());
    }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

using IntMatrix = std::vector<std::vector<Int>>;

// n x n matrix whose row i is the first row cyclically shifted right i times.
IntMatrix circulant_matrix(const ExponentVector& v);

// f(t) = sum a_i t^i.
IntPolynomial representer_polynomial(const ExponentVector& v);

// rank(circ(v)) = n - deg(gcd(f, t^n - 1)); 0 for the zero vector.
long circulant_rank(const ExponentVector& v);

// |det(circ(v))| = |Res(t^n - 1, f)|, computed exactly; 0 iff rank-deficient.
Int circulant_det_abs(const ExponentVector& v);

// Diagonal of the Smith normal form of an arbitrary integer matrix:
// min(rows, cols) nonnegative entries, each dividing the next, zeros last.
std::vector<Int> smith_diagonal(IntMatrix a);

// Smith normal form diagonal of circ(v): n entries.
std::vector<Int> smith_normal_form(const ExponentVector& v);

// Rank over Q by fraction-free (Bareiss) elimination.  Independent of the
// polynomial route above.
long matrix_rank(IntMatrix a);

// Betti number (count of zero SNF entries) and invariant factors (SNF
// entries > 1) of the abelianization presented by circ(v).
AbelianGroup abelian_invariants(const ExponentVector& v);

} // namespace hrns

#endif
