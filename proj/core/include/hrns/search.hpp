#ifndef HRNS_SEARCH_HPP
#define HRNS_SEARCH_HPP

#include "hrns/record.hpp"

#include <iosfwd>
#include <vector>

namespace hrns {

struct SearchRanges {
    long long r_max = 1;
    long long n_max = 2;
    long long s_max = 1;
    friend bool operator==(const SearchRanges&, const SearchRanges&) = default;
};

// A triple with trivial abelianization.  Triples with r or s divisible by n
// are recorded but flagged as irrelevant to the perfectness conjecture,
// which excludes them.  orbit_r/orbit_s name the representative of the
// (r,s) -> (r+n, s+n) shift orbit inside the legal parameter space.
struct PerfectTriple {
    HParams params;
    bool r_divisible = false;
    bool s_divisible = false;
    bool conjecture_relevant = false;
    long long orbit_r = 0;
    long long orbit_s = 0;
    friend bool operator==(const PerfectTriple&, const PerfectTriple&) = default;
};

// Unimodularity precheck for the parameter line (r,s): when |r-s| = 1 the
// representer polynomial of degree r+s-1 has nonzero constant term and no
// cyclotomic factor, which caps the number of n with |det| = 1.
struct PrecheckResult {
    long long r = 0;
    long long s = 0;
    bool applicable = false; // |r-s| == 1
    bool f0_nonzero = false;
    bool no_cyclotomic_factor = false;
    bool finitely_many_n = false;
    std::optional<unsigned long> cyclotomic_witness; // least m when a factor exists
    friend bool operator==(const PrecheckResult&, const PrecheckResult&) = default;
};

struct SearchReport {
    SearchRanges ranges;
    unsigned long long triples_examined = 0;
    std::vector<PerfectTriple> perfect;      // sorted by (r,n,s)
    std::vector<HParams> candidate_case_c;   // sorted by (r,n,s)
    std::vector<PrecheckResult> prechecks;   // the |r-s| = 1 pairs, sorted by (r,s)
    double wall_seconds = 0.0;               // never serialized: reports must be
                                             // byte-identical across runs
    std::size_t relevant_perfect_count() const;
};

// Exhaustively enumerates 1 <= r <= r_max, 2 <= n <= n_max, 1 <= s <= s_max
// in lexicographic (r,n,s) order.  jobs > 1 shards the r axis; the merged
// report is identical to the serial one.  Throws std::invalid_argument on
// bad bounds and std::overflow_error when the range size overflows.
SearchReport search_perfect(const SearchRanges& ranges, int jobs = 1);

PrecheckResult cremona_precheck(long long r, long long s);

// Compares the closed-form Betti number against the gcd-degree route and
// the Smith normal form zero count for every triple in range.
struct BettiFormulaReport {
    unsigned long long checked = 0;
    std::vector<HParams> mismatches;
    bool pass() const { return mismatches.empty(); }
};
BettiFormulaReport verify_betti_formula(const SearchRanges& ranges);

// Deterministic serialization (stable key/column order, LF line ends, no
// timing data).
void write_report_json(const SearchReport& report, std::ostream& os);
void write_report_csv(const SearchReport& report, std::ostream& os);
std::string summary_line(const SearchReport& report);

} // namespace hrns

#endif
