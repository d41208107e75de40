#include "hrns/intpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hrns {

namespace {

const Int kZero = 0;

std::vector<unsigned long> divisors_of(unsigned long m) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        divs.push_back(d);
        if (d != m / d) divs.push_back(m / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, 0);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

IntPolynomial IntPolynomial::power_minus_one(std::size_t n) {
    IntPolynomial p;
    p.coeffs_.assign(n + 1, 0);
    p.coeffs_[n] = 1;
    p.coeffs_[0] -= 1; // n == 0 gives the zero polynomial
    p.trim();
    return p;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Int c = content();
    IntPolynomial out = *this;
    if (c != 1)
        for (Int& a : out.coeffs_) a /= c;
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (Int& a : out.coeffs_) a = -a;
    return out;
}

IntPolynomial& IntPolynomial::operator*=(const Int& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Int& a : coeffs_) a *= c;
    return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    out.trim();
    return out;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    out.trim();
    return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    out.trim();
    return out;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("pseudo_divide: zero divisor");
    if (p.degree() < q.degree())
        throw std::invalid_argument("pseudo_divide: deg p < deg q");

    const Int& lead = q.leading_coefficient();
    const long d = q.degree();
    const long excess = p.degree() - d;

    IntPolynomial rem = p;
    IntPolynomial quot;
    long steps = 0;
    while (!rem.is_zero() && rem.degree() >= d) {
        const long k = rem.degree() - d;
        IntPolynomial term = IntPolynomial::monomial(rem.leading_coefficient(), static_cast<std::size_t>(k));
        quot *= lead;
        quot = quot + term;
        rem *= lead;
        rem = rem - term * q;
        ++steps;
    }
    // prem is defined with exactly deg p - deg q + 1 scalings of lc(q)
    for (long i = steps; i <= excess; ++i) {
        Int scale = lead;
        quot *= scale;
        rem *= scale;
    }
    return {std::move(quot), std::move(rem)};
}

IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree()) throw std::domain_error("divide_exact: not divisible");

    const Int& lead = q.leading_coefficient();
    IntPolynomial rem = p;
    std::vector<Int> qc(static_cast<std::size_t>(p.degree() - q.degree()) + 1, 0);
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        if (rem.leading_coefficient() % lead != 0)
            throw std::domain_error("divide_exact: not divisible");
        Int c = rem.leading_coefficient() / lead;
        std::size_t k = static_cast<std::size_t>(rem.degree() - q.degree());
        qc[k] = c;
        rem = rem - IntPolynomial::monomial(std::move(c), k) * q;
    }
    if (!rem.is_zero()) throw std::domain_error("divide_exact: not divisible");
    return IntPolynomial(std::move(qc));
}

bool divides(const IntPolynomial& q, const IntPolynomial& p) {
    if (q.is_zero()) throw std::invalid_argument("divides: zero divisor");
    if (p.is_zero()) return true;
    if (p.degree() < q.degree()) return false;

    const Int& lead = q.leading_coefficient();
    IntPolynomial rem = p;
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        if (rem.leading_coefficient() % lead != 0) return false;
        Int c = rem.leading_coefficient() / lead;
        std::size_t k = static_cast<std::size_t>(rem.degree() - q.degree());
        rem = rem - IntPolynomial::monomial(std::move(c), k) * q;
    }
    return rem.is_zero();
}

namespace {

IntPolynomial normalize_sign(IntPolynomial p) {
    if (p.leading_coefficient() < 0) p = -p;
    return p;
}

} // namespace

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd of zero polynomials");
    if (p.is_zero()) return normalize_sign(q.primitive_part());
    if (q.is_zero()) return normalize_sign(p.primitive_part());

    // Primitive PRS.  Contents are stripped up front, so the result is the
    // gcd in Q[t] in its primitive representative.
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_divide(a, b).remainder;
        a = std::move(b);
        b = r.primitive_part();
    }
    return normalize_sign(std::move(a));
}

Int resultant(const IntPolynomial& p, const IntPolynomial& q) {
    using Rational = boost::multiprecision::cpp_rational;

    if (p.is_zero() || q.is_zero()) return 0;
    if (p.degree() == 0 && q.degree() == 0) return 1;
    if (p.degree() == 0) return boost::multiprecision::pow(p.leading_coefficient(), static_cast<unsigned>(q.degree()));
    if (q.degree() == 0) return boost::multiprecision::pow(q.leading_coefficient(), static_cast<unsigned>(p.degree()));

    // Primitive PRS with an exact rational correction factor, built from
    //   Res(A,B) = (-1)^(degA*degB) Res(B,A)
    //   Res(B,A) = lc(B)^(degA-degR) Res(B,R)   for A = QB + R over Q
    //   Res(B,cR) = c^(degB) Res(B,R)
    // The pseudo-remainder prem(A,B) equals lc(B)^(delta+1) * (A mod B).
    IntPolynomial a = p;
    IntPolynomial b = q;
    int sign = 1;
    Rational scale = 1;

    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }

    while (true) {
        const long da = a.degree();
        const long db = b.degree();
        const Int& lb = b.leading_coefficient();
        const unsigned delta = static_cast<unsigned>(da - db);

        IntPolynomial r = pseudo_divide(a, b).remainder;
        if (r.is_zero()) return 0; // common factor of positive degree

        if ((da & 1) && (db & 1)) sign = -sign;

        const long dr = r.degree();
        Int cont = r.content();
        IntPolynomial rp = r.primitive_part();

        // Res(A,B) = +/- lc(B)^(dA-dR) * (cont / lc(B)^(delta+1))^dB * Res(B,Rp)
        scale *= Rational(boost::multiprecision::pow(lb, static_cast<unsigned>(da - dr)));
        scale *= Rational(boost::multiprecision::pow(cont, static_cast<unsigned>(db)));
        scale /= Rational(boost::multiprecision::pow(lb, (delta + 1) * static_cast<unsigned>(db)));

        a = std::move(b);
        b = std::move(rp);
        if (b.degree() == 0) {
            // Res(A, c) = c^(deg A)
            Rational res = scale * Rational(boost::multiprecision::pow(b.leading_coefficient(),
                                                                       static_cast<unsigned>(a.degree())));
            if (sign < 0) res = -res;
            if (boost::multiprecision::denominator(res) != 1)
                throw std::logic_error("resultant: non-integral result");
            return boost::multiprecision::numerator(res);
        }
    }
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPolynomial cyclotomic(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: m must be >= 1");
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d, built bottom-up over the
    // divisor lattice of m.
    std::map<unsigned long, IntPolynomial> phi;
    for (unsigned long d : divisors_of(m)) {
        IntPolynomial p = IntPolynomial::power_minus_one(d);
        for (const auto& [e, phi_e] : phi)
            if (d % e == 0) p = divide_exact(p, phi_e);
        phi.emplace(d, std::move(p));
    }
    return phi.at(m);
}

std::optional<unsigned long> find_cyclotomic_factor(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("find_cyclotomic_factor: zero polynomial");
    const long deg = p.degree();
    if (deg < 1) return std::nullopt;

    // phi(m) >= sqrt(m/2), so phi(m) <= deg forces m <= 2*deg^2.
    const unsigned long bound = 2ul * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg);
    for (unsigned long m = 1; m <= bound; ++m) {
        if (euler_phi(m) > static_cast<unsigned long>(deg)) continue;
        if (divides(cyclotomic(m), p)) return m;
    }
    return std::nullopt;
}

} // namespace hrns
