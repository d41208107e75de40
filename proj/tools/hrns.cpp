// Command-line front end for the H(r,n,s) abelianization toolkit.
//
// Subcommands:
//   ab        abelianization invariants of one triple
//   classify  connected-LOG classification of one triple
//   search    scan a parameter box for perfect abelianizations
//   verify    run a named consistency suite over a parameter box
//
// Exit codes: 0 success/pass, 1 usage error, 2 internal error,
// 3 verification suite failure.

#include <CLI11.hpp>

#include "hrns/search.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hrns;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitSuiteFailure = 3;

OutputFormat format_or_throw(const std::string& name) {
    auto f = parse_format(name);
    if (!f) throw CLI::ValidationError("--format", "expected one of json|csv|plain");
    return *f;
}

void print_record(const OutputRecord& rec, OutputFormat f) {
    std::cout << format_record(rec, f) << '\n';
}

// Deterministic across platforms, unlike <random> distributions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

struct SuiteOutcome {
    unsigned long long checked = 0;
    std::vector<OutputRecord> counterexamples;
};

SuiteOutcome run_thm_b(const SearchRanges& ranges) {
    SuiteOutcome out;
    BettiFormulaReport rep = verify_betti_formula(ranges);
    out.checked = rep.checked;
    for (const HParams& p : rep.mismatches) out.counterexamples.push_back(make_ab_record(p));
    return out;
}

SuiteOutcome run_lemma41(const SearchRanges& ranges) {
    SuiteOutcome out;
    for (long long r = 1; r <= ranges.r_max; ++r) {
        for (long long n = 2; n <= ranges.n_max; ++n) {
            for (long long s = 1; s <= ranges.s_max; ++s) {
                const HParams p{r, n, s};
                ++out.checked;
                const GeneratorBound b = d_lower_bound(p);
                const AbelianGroup g = abelianization(h_word(p));
                long long even = 0;
                for (const Int& d : g.invariant_factors)
                    if (d % 2 == 0) ++even;
                const bool kappa_sound = g.betti + even >= b.kappa;
                const bool combined_sound = b.combined <= g.min_generators();
                if (!kappa_sound || !combined_sound)
                    out.counterexamples.push_back(make_classify_record(p));
            }
        }
    }
    return out;
}

SuiteOutcome run_shift(const SearchRanges& ranges) {
    SuiteOutcome out;
    for (long long r = 1; r <= ranges.r_max; ++r) {
        for (long long n = 2; n <= ranges.n_max; ++n) {
            for (long long s = 1; s <= ranges.s_max; ++s) {
                const AbelianGroup base = abelianization(h_word({r, n, s}));
                for (long long alpha = 1; alpha <= 2; ++alpha) {
                    ++out.checked;
                    const HParams shifted{r + alpha * n, n, s + alpha * n};
                    if (abelianization(h_word(shifted)) != base)
                        out.counterexamples.push_back(make_ab_record(shifted));
                }
            }
        }
    }
    return out;
}

SuiteOutcome run_freeprod(const SearchRanges& ranges) {
    SuiteOutcome out;
    for (long long r = 1; r <= ranges.r_max; ++r) {
        for (long long n = 2; n <= ranges.n_max; ++n) {
            for (long long s = 1; s <= ranges.s_max; ++s) {
                const HParams p{r, n, s};
                if (r == s || (r % n != 0 && s % n != 0)) continue;
                ++out.checked;
                const auto dec = free_product_decomposition(p);
                const AbelianGroup g = abelianization(h_word(p));
                AbelianGroup expected;
                expected.betti = dec->free_rank;
                if (dec->m > 1) expected.invariant_factors.push_back(dec->m);
                if (g != expected) out.counterexamples.push_back(make_ab_record(p));
            }
        }
    }
    return out;
}

SuiteOutcome run_detxcheck(long long n_max, long long samples, std::uint64_t seed) {
    SuiteOutcome out;
    SplitMix64 rng(seed);
    for (long long k = 0; k < samples; ++k) {
        const long long n = rng.range(1, n_max);
        ExponentVector v;
        v.entries.reserve(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) v.entries.emplace_back(rng.range(-3, 3));
        ++out.checked;

        const std::vector<Int> diag = smith_normal_form(v);
        Int snf_product = 1;
        long zeros = 0;
        for (const Int& d : diag) {
            if (d == 0)
                ++zeros;
            else
                snf_product *= d;
        }
        const Int det = circulant_det_abs(v);
        const long rank_poly = circulant_rank(v);
        const long rank_elim = matrix_rank(circulant_matrix(v));
        const long rank_snf = static_cast<long>(n) - zeros;

        const bool det_ok = zeros > 0 ? det == 0 : det == snf_product;
        const bool rank_ok = rank_poly == rank_elim && rank_poly == rank_snf;
        if (!det_ok || !rank_ok) {
            OutputRecord rec;
            rec.n = n;
            AbelianGroup g = abelian_invariants(v);
            rec.betti = g.betti;
            rec.order = g.order();
            rec.invariant_factors = std::move(g.invariant_factors);
            out.counterexamples.push_back(std::move(rec));
        }
    }
    return out;
}

int report_suite(const std::string& name, const SuiteOutcome& out, OutputFormat format) {
    std::cout << "suite " << name << ": checked " << out.checked << " cases, "
              << out.counterexamples.size() << " counterexamples -> "
              << (out.counterexamples.empty() ? "PASS" : "FAIL") << '\n';
    bool first = true;
    for (const OutputRecord& rec : out.counterexamples) {
        std::cout << format_record(rec, format, /*with_csv_header=*/first) << '\n';
        first = false;
    }
    return out.counterexamples.empty() ? kExitOk : kExitSuiteFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelianization invariants and connected-LOG classification "
                 "of the cyclically presented groups H(r,n,s)"};
    app.require_subcommand(1);

    long long r = 1, n = 2, s = 1;
    std::string format_name = "plain";

    auto add_triple_options = [&](CLI::App* cmd) {
        cmd->add_option("--r", r, "first block length r")->required()->check(CLI::Range(1ll, 1ll << 24));
        cmd->add_option("--n", n, "number of generators n")->required()->check(CLI::Range(2ll, 1ll << 24));
        cmd->add_option("--s", s, "second block length s")->required()->check(CLI::Range(1ll, 1ll << 24));
        cmd->add_option("--format", format_name, "output format: json|csv|plain");
    };

    CLI::App* ab = app.add_subcommand("ab", "abelianization of H(r,n,s)");
    add_triple_options(ab);

    CLI::App* classify = app.add_subcommand("classify", "connected-LOG classification of H(r,n,s)");
    add_triple_options(classify);

    CLI::App* search = app.add_subcommand("search", "scan for perfect abelianizations");
    SearchRanges ranges;
    int jobs = 1;
    std::string out_path;
    search->add_option("--r-max", ranges.r_max, "upper bound for r")->required()->check(CLI::Range(1ll, 1ll << 20));
    search->add_option("--n-max", ranges.n_max, "upper bound for n")->required()->check(CLI::Range(2ll, 1ll << 20));
    search->add_option("--s-max", ranges.s_max, "upper bound for s")->required()->check(CLI::Range(1ll, 1ll << 20));
    search->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1 << 10));
    search->add_option("--out", out_path, "report file path (default search-report.json/.csv)");
    search->add_option("--format", format_name, "report format: json|csv (plain = json file)");

    CLI::App* verify = app.add_subcommand("verify", "run a consistency suite");
    std::string suite;
    SearchRanges vranges{10, 20, 10};
    bool vr_set = false, vn_set = false, vs_set = false;
    long long samples = 500;
    std::uint64_t seed = 0x5eed5eedull;
    verify->add_option("--suite", suite, "thmB|lemma41|shift|freeprod|detxcheck")->required();
    verify->add_option("--r-max", vranges.r_max)->check(CLI::Range(1ll, 1ll << 20))
        ->each([&](const std::string&) { vr_set = true; });
    verify->add_option("--n-max", vranges.n_max)->check(CLI::Range(1ll, 1ll << 20))
        ->each([&](const std::string&) { vn_set = true; });
    verify->add_option("--s-max", vranges.s_max)->check(CLI::Range(1ll, 1ll << 20))
        ->each([&](const std::string&) { vs_set = true; });
    verify->add_option("--samples", samples, "random samples (detxcheck)")->check(CLI::Range(1ll, 1ll << 24));
    verify->add_option("--seed", seed, "random seed (detxcheck)");
    verify->add_option("--format", format_name, "counterexample format: json|csv|plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints message/help
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = format_or_throw(format_name);

        if (*ab) {
            print_record(make_ab_record({r, n, s}), format);
            return kExitOk;
        }

        if (*classify) {
            print_record(make_classify_record({r, n, s}), format);
            return kExitOk;
        }

        if (*search) {
            const bool csv = format == OutputFormat::Csv;
            if (out_path.empty()) out_path = csv ? "search-report.csv" : "search-report.json";
            SearchReport report = search_perfect(ranges, jobs);
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open " << out_path << " for writing\n";
                return kExitInternal;
            }
            if (csv)
                write_report_csv(report, file);
            else
                write_report_json(report, file);
            file.flush();
            if (!file) {
                std::cerr << "error: failed writing " << out_path << '\n';
                return kExitInternal;
            }
            std::cout << summary_line(report) << '\n';
            std::cout << "wall time " << report.wall_seconds << "s, report written to " << out_path
                      << '\n';
            return kExitOk;
        }

        // verify
        SuiteOutcome outcome;
        if (suite == "thmB") {
            outcome = run_thm_b(vranges);
        } else if (suite == "lemma41") {
            outcome = run_lemma41(vranges);
        } else if (suite == "shift") {
            if (!vr_set) vranges.r_max = 6;
            if (!vn_set) vranges.n_max = 12;
            if (!vs_set) vranges.s_max = 6;
            outcome = run_shift(vranges);
        } else if (suite == "freeprod") {
            outcome = run_freeprod(vranges);
        } else if (suite == "detxcheck") {
            outcome = run_detxcheck(vn_set ? vranges.n_max : 16, samples, seed);
        } else {
            std::cerr << "error: unknown suite '" << suite
                      << "' (expected thmB|lemma41|shift|freeprod|detxcheck)\n";
            return kExitUsage;
        }
        return report_suite(suite, outcome, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
