#include "hrns/hclass.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hrns {

namespace {

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a, b), c);
}

} // namespace

std::string to_string(LogVerdict v) {
    switch (v) {
        case LogVerdict::ConfirmedLogTorusKnot: return "ConfirmedLOG_TorusKnot";
        case LogVerdict::ConfirmedLogInfiniteCyclic: return "ConfirmedLOG_InfiniteCyclic";
        case LogVerdict::NotConnectedLog: return "NotConnectedLOG";
        case LogVerdict::CandidateCaseC: return "CandidateCaseC";
    }
    throw std::logic_error("unknown verdict");
}

std::string to_string(LogObstruction o) {
    switch (o) {
        case LogObstruction::None: return "";
        case LogObstruction::BettiNe1: return "BETTI_NE_1";
        case LogObstruction::DLowerBoundGt1: return "D_LOWER_BOUND_GT_1";
        case LogObstruction::ExcludedPair42: return "EXCLUDED_PAIR_4_2";
        case LogObstruction::GcdNRPlusSNe2: return "GCD_N_RPLUSS_NE_2";
        case LogObstruction::HalfParamsNotPerfect: return "HALF_PARAMS_NOT_PERFECT";
    }
    throw std::logic_error("unknown obstruction");
}

std::string TorusKnotData::presentation() const {
    return "a^" + std::to_string(n) + "=b^" + std::to_string(r);
}

long long h_betti_formula(const HParams& p) {
    validate(p);
    if (p.r != p.s) return gcd3(p.r, p.n, p.s) - 1;
    return std::gcd(p.r, p.n);
}

GeneratorBound d_lower_bound(const HParams& p) {
    validate(p);
    GeneratorBound b;

    const long long delta = std::gcd(p.n, p.r + p.s);
    const long long quot = (p.r + p.s) / delta;
    b.kappa = (quot % 2 == 0) ? delta : delta - 1;

    const long long diff = std::llabs(p.r - p.s);
    if (gcd3(p.r, p.n, p.s) == 2) {
        if (diff != 2) {
            b.easy_bound = 2;
        } else if (detail::h_ab_order(p.r / 2, p.n / 2, p.s / 2) != 1) {
            b.hard_bound = 2;
        }
    }
    b.combined = std::max({b.kappa, b.easy_bound, b.hard_bound});
    return b;
}

bool perfect_necessary(const HParams& p) {
    validate(p);
    return std::llabs(p.r - p.s) == 1 && std::gcd(p.n, p.r + p.s) == 1;
}

bool infinite_by_balanced(const HParams& p) {
    validate(p);
    const long long delta = std::gcd(p.n, p.r + p.s);
    const long long quot = (p.r + p.s) / delta;
    if (quot % 2 == 0) return delta >= 4;
    return delta >= 5;
}

std::optional<FreeProductDecomposition> free_product_decomposition(const HParams& p) {
    validate(p);
    if (p.r % p.n != 0 && p.s % p.n != 0) return std::nullopt;
    FreeProductDecomposition d;
    if (p.r == p.s) {
        // All relators cancel to the empty word.
        d.free_group = true;
        d.free_rank = p.n;
        return d;
    }
    const long long g = std::gcd(p.n, std::llabs(p.r - p.s));
    d.m = std::llabs(p.r - p.s) / g;
    d.free_rank = g - 1;
    return d;
}

Classification h_classify(const HParams& p) {
    validate(p);
    Classification c;

    // 1. r = s with (r,n) = 1: the (r,n)-torus knot group.
    if (p.r == p.s && std::gcd(p.r, p.n) == 1) {
        c.verdict = LogVerdict::ConfirmedLogTorusKnot;
        c.torus = TorusKnotData{p.r, p.n};
        c.witness = c.torus->presentation();
        return c;
    }

    // 2. A connected LOG group abelianizes to Z, so betti must be 1.
    const long long beta = h_betti_formula(p);
    if (beta != 1) {
        c.verdict = LogVerdict::NotConnectedLog;
        c.reason = LogObstruction::BettiNe1;
        c.witness = std::to_string(beta);
        return c;
    }

    // From here r != s and gcd(r,n,s) = 2, both forced by beta = 1.
    const long long diff = std::llabs(p.r - p.s);

    // 3. r or s divisible by n: free-product shape Z_m * Z decides it.
    if (p.r % p.n == 0 || p.s % p.n == 0) {
        if (gcd3(p.r, p.n, p.s) == 2 && diff == 2) {
            c.verdict = LogVerdict::ConfirmedLogInfiniteCyclic;
            c.witness = "Z";
        } else {
            c.verdict = LogVerdict::NotConnectedLog;
            c.reason = LogObstruction::DLowerBoundGt1;
            c.witness = std::to_string(diff / 2); // Z_{|r-s|/2} torsion part
        }
        return c;
    }

    // 4. Remaining obstructions, first failure wins.
    if (diff != 2) {
        c.verdict = LogVerdict::NotConnectedLog;
        c.reason = LogObstruction::DLowerBoundGt1;
        c.witness = std::to_string(diff / 2);
        return c;
    }
    if (std::max(p.r, p.s) == 4 && std::min(p.r, p.s) == 2) {
        // Half triple is the Fibonacci group F(2, n/2), never perfect.
        c.verdict = LogVerdict::NotConnectedLog;
        c.reason = LogObstruction::ExcludedPair42;
        c.witness = detail::h_ab_order(2, p.n / 2, 1).str();
        return c;
    }
    const long long delta = std::gcd(p.n, p.r + p.s);
    if (delta != 2) {
        c.verdict = LogVerdict::NotConnectedLog;
        c.reason = LogObstruction::GcdNRPlusSNe2;
        c.witness = std::to_string(delta);
        return c;
    }
    const Int half_order = detail::h_ab_order(p.r / 2, p.n / 2, p.s / 2);
    if (half_order != 1) {
        c.verdict = LogVerdict::NotConnectedLog;
        c.reason = LogObstruction::HalfParamsNotPerfect;
        c.witness = half_order == 0 ? "infinite" : half_order.str();
        return c;
    }

    c.verdict = LogVerdict::CandidateCaseC;
    c.half_params = HParams{p.r / 2, p.n / 2, p.s / 2};
    return c;
}

std::optional<TorusKnotData> two_generator_knot(const HParams& p) {
    validate(p);
    if (p.r == p.s && std::gcd(p.r, p.n) == 1) return TorusKnotData{p.r, p.n};
    return std::nullopt;
}

} // namespace hrns
