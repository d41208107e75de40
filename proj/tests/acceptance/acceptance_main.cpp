// Acceptance suite: every release-gating check, one pass/fail line each.
// Run with no arguments for the full suite or with a criterion number
// (1..12) for a single check.

#include "hrns/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#ifndef HRNS_CLI_PATH
#error "HRNS_CLI_PATH must point at the hrns binary"
#endif

namespace {

using namespace hrns;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Failure {
    std::ostringstream message;
};

long long count_even(const std::vector<Int>& factors) {
    return std::count_if(factors.begin(), factors.end(),
                         [](const Int& d) { return d % 2 == 0; });
}

// 1. |H(3,5,2)^ab| = 16 and |H(3,6,2)^ab| = 13, exactly.
Outcome criterion1() {
    Outcome out;
    const Int a = ab_order({3, 5, 2});
    const Int b = ab_order({3, 6, 2});
    out.pass = a == 16 && b == 13;
    out.detail = "ab_order(3,5,2)=" + a.str() + ", ab_order(3,6,2)=" + b.str();
    return out;
}

// 2. Betti number: closed formula == gcd-degree route == SNF zero count
//    for 1<=r,s<=10, 2<=n<=20.
Outcome criterion2() {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    std::string first;
    for (long long r = 1; r <= 10; ++r)
        for (long long n = 2; n <= 20; ++n)
            for (long long s = 1; s <= 10; ++s) {
                ++checked;
                const ExponentVector v = detail::h_exponent_vector(r, n, s);
                const long long formula = h_betti_formula({r, n, s});
                const long long by_gcd = n - circulant_rank(v);
                const long long by_snf = abelian_invariants(v).betti;
                if (formula != by_gcd || formula != by_snf) {
                    ++bad;
                    if (first.empty())
                        first = " first=(" + std::to_string(r) + "," + std::to_string(n) + "," +
                                std::to_string(s) + ")";
                }
            }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " triples, " + std::to_string(bad) + " mismatches" + first;
    return out;
}

void check_det_vector(const ExponentVector& v, unsigned long long& bad) {
    const std::vector<Int> diag = smith_normal_form(v);
    Int product = 1;
    bool singular = false;
    for (const Int& d : diag) {
        if (d == 0)
            singular = true;
        else
            product *= d;
    }
    const Int det = circulant_det_abs(v);
    if (singular ? det != 0 : det != product) ++bad;
}

void check_rank_vector(const ExponentVector& v, unsigned long long& bad) {
    const std::vector<Int> diag = smith_normal_form(v);
    const long zeros = static_cast<long>(std::count(diag.begin(), diag.end(), Int(0)));
    const long by_poly = circulant_rank(v);
    const long by_elim = matrix_rank(circulant_matrix(v));
    const long by_snf = static_cast<long>(v.size()) - zeros;
    if (by_poly != by_elim || by_poly != by_snf) ++bad;
}

// Same corpus for criteria 3 and 4: the criterion-2 box plus 500 random
// exponent vectors with entries in [-3,3] and n <= 16.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

template <typename Check>
Outcome run_corpus(Check check) {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    for (long long r = 1; r <= 10; ++r)
        for (long long n = 2; n <= 20; ++n)
            for (long long s = 1; s <= 10; ++s) {
                ++checked;
                check(detail::h_exponent_vector(r, n, s), bad);
            }
    SplitMix64 rng(20260810);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 16));
        ExponentVector v;
        v.entries.resize(n);
        for (Int& e : v.entries) e = rng.range(-3, 3);
        ++checked;
        check(v, bad);
    }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " vectors, " + std::to_string(bad) + " mismatches";
    return out;
}

// 3. |Res(t^n-1, f)| == product of nonzero SNF entries; singular together.
Outcome criterion3() { return run_corpus(check_det_vector); }

// 4. Rank: polynomial route == Bareiss elimination == n - SNF zeros.
Outcome criterion4() { return run_corpus(check_rank_vector); }

// 5. Z_2^kappa soundness: betti + #even invariant factors >= kappa.
Outcome criterion5() {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    for (long long r = 1; r <= 10; ++r)
        for (long long n = 2; n <= 20; ++n)
            for (long long s = 1; s <= 10; ++s) {
                ++checked;
                const AbelianGroup g = abelianization(h_word({r, n, s}));
                const GeneratorBound b = d_lower_bound({r, n, s});
                if (g.betti + count_even(g.invariant_factors) < b.kappa) ++bad;
            }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " triples, " + std::to_string(bad) + " violations";
    return out;
}

// 6. Shift invariance: invariants of (r,n,s) and (r+an, n, s+an), a in {1,2}.
Outcome criterion6() {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    for (long long r = 1; r <= 6; ++r)
        for (long long n = 2; n <= 12; ++n)
            for (long long s = 1; s <= 6; ++s) {
                const AbelianGroup base = abelianization(h_word({r, n, s}));
                for (long long alpha = 1; alpha <= 2; ++alpha) {
                    ++checked;
                    if (abelianization(h_word({r + alpha * n, n, s + alpha * n})) != base) ++bad;
                }
            }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " shifted pairs, " + std::to_string(bad) + " violations";
    return out;
}

// 7. Free-product consistency for r = 0 mod n, r != s.
Outcome criterion7() {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    for (long long r = 1; r <= 10; ++r)
        for (long long n = 2; n <= 20; ++n)
            for (long long s = 1; s <= 10; ++s) {
                if (r % n != 0 || r == s) continue;
                ++checked;
                const auto dec = free_product_decomposition({r, n, s});
                AbelianGroup expected;
                expected.betti = dec->free_rank;
                if (dec->m > 1) expected.invariant_factors.push_back(dec->m);
                if (abelianization(h_word({r, n, s})) != expected) ++bad;
            }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " triples, " + std::to_string(bad) + " violations";
    return out;
}

// 8. Classifier spot checks, witnesses included.
Outcome criterion8() {
    Outcome out;
    std::vector<std::string> bad;

    Classification c = h_classify({2, 5, 2});
    if (c.verdict != LogVerdict::ConfirmedLogTorusKnot || !c.torus ||
        !(*c.torus == TorusKnotData{2, 5}))
        bad.push_back("(2,5,2)");
    c = h_classify({4, 2, 2});
    if (c.verdict != LogVerdict::ConfirmedLogInfiniteCyclic) bad.push_back("(4,2,2)");
    c = h_classify({4, 6, 2});
    if (c.verdict != LogVerdict::NotConnectedLog || c.reason != LogObstruction::ExcludedPair42)
        bad.push_back("(4,6,2)");
    c = h_classify({6, 8, 4});
    if (c.verdict != LogVerdict::NotConnectedLog ||
        c.reason != LogObstruction::HalfParamsNotPerfect || c.witness != "5")
        bad.push_back("(6,8,4)");
    c = h_classify({3, 5, 2});
    if (c.verdict != LogVerdict::NotConnectedLog || c.reason != LogObstruction::BettiNe1 ||
        c.witness != "0")
        bad.push_back("(3,5,2)");

    out.pass = bad.empty();
    out.detail = bad.empty() ? "5 spot checks exact" : "failed:";
    for (const std::string& s : bad) out.detail += " " + s;
    return out;
}

// 9. Conjecture support: search r,s <= 20, n <= 40; report findings and fail
//    only if a reported triple does not re-verify.
Outcome criterion9() {
    Outcome out;
    const SearchReport rep = search_perfect({20, 40, 20}, 4);
    unsigned long long bad = 0;
    for (const PerfectTriple& t : rep.perfect) {
        const AbelianGroup g = abelianization(h_word(t.params));
        if (g.order() != 1 || ab_order(t.params) != 1) ++bad;
    }
    for (const HParams& p : rep.candidate_case_c)
        if (h_classify(p).verdict != LogVerdict::CandidateCaseC) ++bad;

    out.pass = bad == 0;
    out.detail = std::to_string(rep.triples_examined) + " triples, " +
                 std::to_string(rep.relevant_perfect_count()) +
                 " conjecture-relevant perfect, " + std::to_string(rep.candidate_case_c.size()) +
                 " CandidateCaseC, " + std::to_string(bad) + " re-verification failures";
    return out;
}

// 10. Torus-knot cases abelianize to Z: r = s, (r,n) = 1, r <= 8, n <= 16.
Outcome criterion10() {
    Outcome out;
    unsigned long long checked = 0, bad = 0;
    for (long long r = 1; r <= 8; ++r)
        for (long long n = 2; n <= 16; ++n) {
            if (std::gcd(r, n) != 1) continue;
            ++checked;
            const AbelianGroup g = abelianization(h_word({r, n, r}));
            if (g.betti != 1 || !g.invariant_factors.empty()) ++bad;
        }
    out.pass = bad == 0;
    out.detail = std::to_string(checked) + " torus cases, " + std::to_string(bad) + " violations";
    return out;
}

// 11. Fibonacci sanity: ab_order(2,n,1) > 1 for 2 <= n <= 50, plus the exact
//     non-monotone pair 16 > 13.
Outcome criterion11() {
    Outcome out;
    std::vector<std::string> violations;
    for (long long n = 2; n <= 50; ++n) {
        const Int order = ab_order({2, n, 1});
        if (order <= 1)
            violations.push_back("n=" + std::to_string(n) + " order=" + order.str());
    }
    const Int a = ab_order({3, 5, 2});
    const Int b = ab_order({3, 6, 2});
    const bool pair_ok = a == 16 && b == 13 && a > b;
    out.pass = violations.empty() && pair_ok;
    out.detail = std::to_string(violations.size()) + " violations";
    for (const std::string& v : violations) out.detail += " [" + v + "]";
    out.detail += pair_ok ? "; 16>13 pair exact" : "; 16>13 pair FAILED";
    return out;
}

// 12. Determinism: the CLI search report file is byte-identical for
//     --jobs 1 and --jobs 4 on the criterion-9 range.
Outcome criterion12() {
    namespace fs = std::filesystem;
    Outcome out;
    const fs::path p1 = fs::temp_directory_path() / "hrns_acceptance_jobs1.json";
    const fs::path p4 = fs::temp_directory_path() / "hrns_acceptance_jobs4.json";

    auto run = [](const std::string& args) {
        const std::string cmd = std::string(HRNS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    const std::string range = "search --r-max 20 --n-max 40 --s-max 20";
    if (run(range + " --jobs 1 --out " + p1.string()) != 0 ||
        run(range + " --jobs 4 --out " + p4.string()) != 0) {
        out.pass = false;
        out.detail = "search invocation failed";
        return out;
    }
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    const std::string b1 = slurp(p1);
    const std::string b4 = slurp(p4);
    out.pass = !b1.empty() && b1 == b4;
    out.detail = "report files " + std::to_string(b1.size()) + " bytes, " +
                 (out.pass ? "byte-identical" : "DIFFER");
    fs::remove(p1);
    fs::remove(p4);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"numeric anchors 16/13", criterion1},
        {"Betti formula equivalence", criterion2},
        {"determinant cross-oracle", criterion3},
        {"rank cross-oracle", criterion4},
        {"Z_2^kappa soundness", criterion5},
        {"shift invariance", criterion6},
        {"free-product consistency", criterion7},
        {"classifier spot checks", criterion8},
        {"conjecture support search", criterion9},
        {"torus-knot abelianization", criterion10},
        {"Fibonacci sanity", criterion11},
        {"search determinism", criterion12},
    };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::cerr << "usage: " << argv[0] << " [1.." << criteria.size() << "]\n";
            return 2;
        }
    }

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        const auto start = std::chrono::steady_clock::now();
        const Outcome out = criteria[i].second();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.pass) ++failures;
        std::printf("criterion %2zu [%s]: %s - %s (%.2fs)\n", i + 1,
                    criteria[i].first.c_str(), out.pass ? "PASS" : "FAIL", out.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
