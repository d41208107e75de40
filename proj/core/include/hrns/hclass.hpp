#ifndef HRNS_HCLASS_HPP
#define HRNS_HCLASS_HPP

#include "hrns/cycpres.hpp"

#include <optional>
#include <string>

namespace hrns {

// Outcome of the connected-LOG analysis of H(r,n,s).
enum class LogVerdict {
    ConfirmedLogTorusKnot,   // torus knot group <a,b | a^n = b^r>
    ConfirmedLogInfiniteCyclic,
    NotConnectedLog,
    CandidateCaseC, // unresolved: hinges on perfectness of the half triple
};

// First obstruction found when the verdict is NotConnectedLog.
enum class LogObstruction {
    None,
    BettiNe1,            // abelianization is not Z-rank-one
    DLowerBoundGt1,      // abelianization needs >= 2 generators
    ExcludedPair42,      // {r,s} = {4,2}: half triple is a Fibonacci group
    GcdNRPlusSNe2,       // (n, r+s) != 2 forces a Z_2^k quotient, k >= 2
    HalfParamsNotPerfect,
};

std::string to_string(LogVerdict v);
std::string to_string(LogObstruction o);

struct TorusKnotData {
    long long r = 0;
    long long n = 0;
    std::string presentation() const; // "a^n=b^r"
    friend bool operator==(const TorusKnotData&, const TorusKnotData&) = default;
};

struct Classification {
    LogVerdict verdict = LogVerdict::NotConnectedLog;
    LogObstruction reason = LogObstruction::None;
    std::optional<TorusKnotData> torus;   // set for ConfirmedLogTorusKnot
    std::optional<HParams> half_params;   // set for CandidateCaseC
    std::string witness;                  // numeric justification, if any
    friend bool operator==(const Classification&, const Classification&) = default;
};

// Lower bounds on d(H(r,n,s)^ab), the minimum generator count of the
// abelianization.
struct GeneratorBound {
    long long kappa = 0;      // Z_2^kappa quotient bound
    long long easy_bound = 0; // (r,n,s)=2 and |r-s| != 2
    long long hard_bound = 0; // (r,n,s)=2, |r-s|=2, half triple not perfect
    long long combined = 0;   // max of the three
    friend bool operator==(const GeneratorBound&, const GeneratorBound&) = default;
};

// Betti number of H(r,n,s)^ab in closed form:
// gcd(r,n,s)-1 when r != s, gcd(r,n) when r = s.
long long h_betti_formula(const HParams& p);

GeneratorBound d_lower_bound(const HParams& p);

// Necessary (not sufficient) conditions for H(r,n,s) to be perfect:
// |r-s| = 1 and (n, r+s) = 1.
bool perfect_necessary(const HParams& p);

// Balanced-presentation criterion: true means H(r,n,s) is infinite; false
// means the criterion is silent, not that the group is finite.
bool infinite_by_balanced(const HParams& p);

// Free-product shape of H(r,n,s) when r or s is divisible by n:
// Z_m * F_{free_rank} with m = |r-s|/(n,r-s) and free_rank = (n,r-s)-1.
// The degenerate case r = s = 0 mod n has vanishing relators and yields the
// free group of rank n instead.
struct FreeProductDecomposition {
    bool free_group = false; // degenerate r = s case: free of rank free_rank
    long long m = 1;
    long long free_rank = 0;
    friend bool operator==(const FreeProductDecomposition&, const FreeProductDecomposition&) = default;
};
std::optional<FreeProductDecomposition> free_product_decomposition(const HParams& p);

Classification h_classify(const HParams& p);

// H(r,n,s) is a 2-generator knot group iff r = s and (r,n) = 1, in which
// case it is the (r,n)-torus knot group.
std::optional<TorusKnotData> two_generator_knot(const HParams& p);

} // namespace hrns

#endif
