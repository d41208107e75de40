#include "hrns/search.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hrns {

using ordered_json = nlohmann::ordered_json;

std::size_t SearchReport::relevant_perfect_count() const {
    return static_cast<std::size_t>(
        std::count_if(perfect.begin(), perfect.end(),
                      [](const PerfectTriple& t) { return t.conjecture_relevant; }));
}

namespace {

struct Shard {
    std::vector<PerfectTriple> perfect;
    std::vector<HParams> candidates;
    unsigned long long examined = 0;
};

void check_ranges(const SearchRanges& ranges) {
    if (ranges.r_max < 1 || ranges.s_max < 1 || ranges.n_max < 2)
        throw std::invalid_argument("search ranges: need r_max,s_max >= 1 and n_max >= 2");
    const unsigned long long kMaxTriples = 1ull << 32;
    unsigned __int128 total = static_cast<unsigned __int128>(ranges.r_max) *
                              static_cast<unsigned __int128>(ranges.n_max - 1) *
                              static_cast<unsigned __int128>(ranges.s_max);
    if (total > kMaxTriples) throw std::overflow_error("search ranges: triple count overflows");
}

void scan_r(long long r, const SearchRanges& ranges, Shard& out) {
    for (long long n = 2; n <= ranges.n_max; ++n) {
        for (long long s = 1; s <= ranges.s_max; ++s) {
            const HParams p{r, n, s};
            ++out.examined;

            if (detail::h_ab_order(r, n, s) == 1) {
                // Independent reconfirmation through the Smith normal form.
                AbelianGroup g = abelian_invariants(detail::h_exponent_vector(r, n, s));
                if (g.order() != 1)
                    throw std::logic_error("search: resultant and SNF routes disagree");
                PerfectTriple t;
                t.params = p;
                t.r_divisible = r % n == 0;
                t.s_divisible = s % n == 0;
                t.conjecture_relevant = !t.r_divisible && !t.s_divisible;
                const long long alpha = std::min((r - 1) / n, (s - 1) / n);
                t.orbit_r = r - alpha * n;
                t.orbit_s = s - alpha * n;
                out.perfect.push_back(t);
            }

            if (h_classify(p).verdict == LogVerdict::CandidateCaseC)
                out.candidates.push_back(p);
        }
    }
}

} // namespace

SearchReport search_perfect(const SearchRanges& ranges, int jobs) {
    check_ranges(ranges);
    if (jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");

    const auto started = std::chrono::steady_clock::now();
    SearchReport report;
    report.ranges = ranges;

    // One shard per r value; workers pick shards round-robin.  Merging in r
    // order makes the result independent of scheduling.
    std::vector<Shard> shards(static_cast<std::size_t>(ranges.r_max));
    const int workers = static_cast<int>(
        std::min<long long>(jobs, ranges.r_max));
    if (workers <= 1) {
        for (long long r = 1; r <= ranges.r_max; ++r)
            scan_r(r, ranges, shards[static_cast<std::size_t>(r - 1)]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (long long r = 1 + w; r <= ranges.r_max; r += workers)
                    scan_r(r, ranges, shards[static_cast<std::size_t>(r - 1)]);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (Shard& sh : shards) {
        report.triples_examined += sh.examined;
        report.perfect.insert(report.perfect.end(), sh.perfect.begin(), sh.perfect.end());
        report.candidate_case_c.insert(report.candidate_case_c.end(), sh.candidates.begin(),
                                       sh.candidates.end());
    }
    // Shard-local scans already emit lexicographic order; keep the contract
    // explicit regardless.
    std::sort(report.perfect.begin(), report.perfect.end(),
              [](const PerfectTriple& a, const PerfectTriple& b) { return a.params < b.params; });
    std::sort(report.candidate_case_c.begin(), report.candidate_case_c.end());

    for (long long r = 1; r <= ranges.r_max; ++r)
        for (long long s = 1; s <= ranges.s_max; ++s)
            if (std::llabs(r - s) == 1) report.prechecks.push_back(cremona_precheck(r, s));

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

PrecheckResult cremona_precheck(long long r, long long s) {
    if (r < 1 || s < 1) throw std::invalid_argument("cremona_precheck: need r,s >= 1");
    PrecheckResult res;
    res.r = r;
    res.s = s;
    res.applicable = std::llabs(r - s) == 1;
    if (!res.applicable) return res;

    // Unreduced representer polynomial of degree r+s-1:
    // 1 + t + ... + t^(r-1) - t^r - ... - t^(r+s-1).
    std::vector<Int> coeffs(static_cast<std::size_t>(r + s), 0);
    for (long long i = 0; i < r; ++i) coeffs[static_cast<std::size_t>(i)] = 1;
    for (long long i = r; i < r + s; ++i) coeffs[static_cast<std::size_t>(i)] = -1;
    IntPolynomial f{std::move(coeffs)};

    res.f0_nonzero = f.coeff(0) != 0;
    res.cyclotomic_witness = find_cyclotomic_factor(f);
    res.no_cyclotomic_factor = !res.cyclotomic_witness.has_value();
    res.finitely_many_n = res.f0_nonzero && res.no_cyclotomic_factor;
    return res;
}

BettiFormulaReport verify_betti_formula(const SearchRanges& ranges) {
    check_ranges(ranges);
    BettiFormulaReport rep;
    for (long long r = 1; r <= ranges.r_max; ++r) {
        for (long long n = 2; n <= ranges.n_max; ++n) {
            for (long long s = 1; s <= ranges.s_max; ++s) {
                const HParams p{r, n, s};
                ++rep.checked;
                const long long formula = h_betti_formula(p);
                const ExponentVector v = detail::h_exponent_vector(r, n, s);
                const long long by_gcd =
                    static_cast<long long>(n) - circulant_rank(v);
                AbelianGroup g = abelian_invariants(v);
                if (formula != by_gcd || formula != g.betti) rep.mismatches.push_back(p);
            }
        }
    }
    return rep;
}

namespace {

ordered_json report_json(const SearchReport& report) {
    ordered_json j;
    j["ranges"] = ordered_json{{"r_max", report.ranges.r_max},
                               {"n_max", report.ranges.n_max},
                               {"s_max", report.ranges.s_max}};
    j["triples_examined"] = report.triples_examined;

    ordered_json perfect = ordered_json::array();
    for (const PerfectTriple& t : report.perfect) {
        perfect.push_back(ordered_json{{"r", t.params.r},
                                       {"n", t.params.n},
                                       {"s", t.params.s},
                                       {"r_divisible_by_n", t.r_divisible},
                                       {"s_divisible_by_n", t.s_divisible},
                                       {"conjecture_relevant", t.conjecture_relevant},
                                       {"orbit", ordered_json{{"r", t.orbit_r}, {"s", t.orbit_s}}}});
    }
    j["perfect_triples"] = std::move(perfect);

    ordered_json candidates = ordered_json::array();
    for (const HParams& p : report.candidate_case_c)
        candidates.push_back(ordered_json{{"r", p.r}, {"n", p.n}, {"s", p.s}});
    j["candidate_case_c"] = std::move(candidates);

    ordered_json prechecks = ordered_json::array();
    for (const PrecheckResult& pr : report.prechecks) {
        ordered_json e{{"r", pr.r},
                       {"s", pr.s},
                       {"applicable", pr.applicable},
                       {"f0_nonzero", pr.f0_nonzero},
                       {"no_cyclotomic_factor", pr.no_cyclotomic_factor},
                       {"finitely_many_n", pr.finitely_many_n}};
        if (pr.cyclotomic_witness) e["cyclotomic_witness"] = *pr.cyclotomic_witness;
        prechecks.push_back(std::move(e));
    }
    j["prechecks"] = std::move(prechecks);
    return j;
}

} // namespace

void write_report_json(const SearchReport& report, std::ostream& os) {
    os << report_json(report).dump(2) << '\n';
}

void write_report_csv(const SearchReport& report, std::ostream& os) {
    os << csv_header() << '\n';
    std::vector<HParams> rows;
    rows.reserve(report.perfect.size() + report.candidate_case_c.size());
    for (const PerfectTriple& t : report.perfect) rows.push_back(t.params);
    for (const HParams& p : report.candidate_case_c) rows.push_back(p);
    std::sort(rows.begin(), rows.end());
    for (const HParams& p : rows) os << to_csv_row(make_classify_record(p)) << '\n';
}

std::string summary_line(const SearchReport& report) {
    std::ostringstream os;
    os << "search r<=" << report.ranges.r_max << " n<=" << report.ranges.n_max
       << " s<=" << report.ranges.s_max << ": examined " << report.triples_examined
       << " triples, " << report.perfect.size() << " perfect, "
       << report.relevant_perfect_count() << " conjecture-relevant perfect triples, "
       << report.candidate_case_c.size() << " CandidateCaseC triples";
    return os.str();
}

} // namespace hrns
