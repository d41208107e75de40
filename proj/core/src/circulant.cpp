#include "hrns/circulant.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace hrns {

namespace {

using boost::multiprecision::abs;

void subtract_row(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    const std::size_t cols = a[dst].size();
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] -= q * a[src][j];
}

void subtract_col(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (auto& row : a) row[dst] -= q * row[src];
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
}

bool find_min_nonzero(const IntMatrix& a, std::size_t from, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = from; i < a.size(); ++i) {
        for (std::size_t j = from; j < a[i].size(); ++j) {
            if (a[i][j] == 0) continue;
            Int mag = abs(a[i][j]);
            if (!found || mag < best) {
                best = std::move(mag);
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

} // namespace

Int AbelianGroup::order() const {
    if (betti > 0) return 0;
    Int prod = 1;
    for (const Int& d : invariant_factors) prod *= d;
    return prod;
}

IntMatrix circulant_matrix(const ExponentVector& v) {
    const std::size_t n = v.size();
    IntMatrix a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = v.entries[(j + n - i) % n];
    return a;
}

IntPolynomial representer_polynomial(const ExponentVector& v) {
    return IntPolynomial(v.entries);
}

long circulant_rank(const ExponentVector& v) {
    IntPolynomial f = representer_polynomial(v);
    if (f.is_zero()) return 0;
    const std::size_t n = v.size();
    IntPolynomial g = IntPolynomial::power_minus_one(n);
    return static_cast<long>(n) - poly_gcd(f, g).degree();
}

Int circulant_det_abs(const ExponentVector& v) {
    IntPolynomial f = representer_polynomial(v);
    IntPolynomial g = IntPolynomial::power_minus_one(v.size());
    return abs(resultant(g, f));
}

std::vector<Int> smith_diagonal(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t dim = std::min(rows, cols);
    std::vector<Int> diag(dim, 0);

    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_min_nonzero(a, k, pi, pj)) break; // remaining block is zero
        std::swap(a[k], a[pi]);
        swap_cols(a, k, pj);

        for (;;) {
            // Euclidean sweeps; each swap strictly shrinks |pivot|.
            for (std::size_t i = k + 1; i < rows; ++i) {
                while (a[i][k] != 0) {
                    subtract_row(a, i, k, a[i][k] / a[k][k]);
                    if (a[i][k] != 0) std::swap(a[i], a[k]);
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                while (a[k][j] != 0) {
                    subtract_col(a, j, k, a[k][j] / a[k][k]);
                    if (a[k][j] != 0) swap_cols(a, j, k);
                }
            }
            bool column_dirty = false;
            for (std::size_t i = k + 1; i < rows && !column_dirty; ++i)
                if (a[i][k] != 0) column_dirty = true;
            if (column_dirty) continue;

            // Divisibility fix: the pivot must divide the whole trailing block.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = k + 1; i < rows && !bad_row; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            for (std::size_t j = 0; j < cols; ++j) a[k][j] += a[*bad_row][j];
        }
        diag[k] = abs(a[k][k]);
    }
    return diag;
}

std::vector<Int> smith_normal_form(const ExponentVector& v) {
    return smith_diagonal(circulant_matrix(v));
}

long matrix_rank(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t dim = std::min(rows, cols);

    Int prev = 1;
    std::size_t r = 0;
    while (r < dim) {
        std::size_t pi = r, pj = r;
        bool found = false;
        for (std::size_t i = r; i < rows && !found; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        std::swap(a[r], a[pi]);
        swap_cols(a, r, pj);

        // Bareiss condensation step; divisions are exact.
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][r] - a[i][r] * a[r][j]) / prev;
            a[i][r] = 0;
        }
        prev = a[r][r];
        ++r;
    }
    return static_cast<long>(r);
}

AbelianGroup abelian_invariants(const ExponentVector& v) {
    AbelianGroup g;
    for (Int& d : smith_normal_form(v)) {
        if (d == 0)
            ++g.betti;
        else if (d > 1)
            g.invariant_factors.push_back(std::move(d));
    }
    return g;
}

} // namespace hrns
