#ifndef HRNS_INTPOLY_HPP
#define HRNS_INTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hrns {

using Int = boost::multiprecision::cpp_int;

// Dense univariate polynomial over Z with arbitrary-precision coefficients.
// coeff(i) is the coefficient of t^i.  Canonical form: no trailing zero
// coefficients are stored; the zero polynomial is the empty sequence and has
// degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<Int> coeffs);

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, std::size_t k); // c * t^k
    static IntPolynomial power_minus_one(std::size_t n); // t^n - 1

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    const Int& coeff(std::size_t i) const; // 0 beyond the degree
    const Int& leading_coefficient() const; // 0 for the zero polynomial

    Int evaluate(const Int& x) const;
    Int content() const;                   // gcd of coefficients, >= 0
    IntPolynomial primitive_part() const;  // coefficients divided by content

    IntPolynomial operator-() const;
    IntPolynomial& operator*=(const Int& c);

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // "t^2 - t + 1" style rendering, highest power first.
    std::string str() const;

  private:
    std::vector<Int> coeffs_;
    void trim();
};

// lc(q)^(deg p - deg q + 1) * p = quotient * q + remainder, deg rem < deg q.
// Requires q nonzero and deg p >= deg q.
struct PseudoDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};
PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& q);

// Quotient p/q when q divides p exactly in Z[t]; throws std::domain_error
// otherwise.  q must be nonzero.
IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q);

// True iff q divides p in Z[t] (q nonzero).  The zero polynomial is divisible
// by everything.
bool divides(const IntPolynomial& q, const IntPolynomial& p);

// Gcd of p and q in Q[t], returned primitive (content 1) with positive
// leading coefficient.  Throws std::invalid_argument when both inputs are
// zero.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

// Exact signed resultant Res(p, q).  For monic p, |Res(p, q)| is the product
// of |q(lambda)| over the roots lambda of p.  Zero iff p and q share a
// nonconstant factor.  Res(p, 0) = 0; two nonzero constants give 1.
Int resultant(const IntPolynomial& p, const IntPolynomial& q);

unsigned long euler_phi(unsigned long m);

// m-th cyclotomic polynomial, monic of degree phi(m).  m >= 1.
IntPolynomial cyclotomic(unsigned long m);

// Least m such that cyclotomic(m) divides p in Z[t], if any.  p must be
// nonzero.  Only m with phi(m) <= deg(p) can divide, and every such m is
// at most 2*deg(p)^2, which bounds the scan.
std::optional<unsigned long> find_cyclotomic_factor(const IntPolynomial& p);

} // namespace hrns

#endif
