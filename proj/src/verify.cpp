#include "degseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "degseq/extremal.hpp"
#include "degseq/potential.hpp"
#include "parallel.hpp"

namespace degseq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CaseOutcome {
    std::vector<FailureEntry> failures;
    bool incomplete = false;
    std::size_t checked = 0;
};

void finalize(VerificationReport& report, bool any_incomplete, Clock::time_point start) {
    if (!report.failures.empty())
        report.status = VerificationReport::Status::fail;
    else if (any_incomplete)
        report.status = VerificationReport::Status::incomplete;
    else
        report.status = VerificationReport::Status::pass;
    report.elapsed_ms = ms_since(start);
}

template <typename Case, typename Body>
bool run_parallel_cases(const std::vector<Case>& cases, const SuiteOptions& opts,
                        VerificationReport& report, Body&& body) {
    std::vector<CaseOutcome> outcomes(cases.size());
    constexpr std::size_t kChunk = 64;
    for (std::size_t base = 0; base < cases.size(); base += kChunk) {
        std::size_t hi = std::min(cases.size(), base + kChunk);
        parallel_for(hi - base, opts.jobs,
                     [&](std::size_t off) { body(cases[base + off], outcomes[base + off]); });
        if (opts.progress) opts.progress(hi, cases.size());
    }
    bool any_incomplete = false;
    for (auto& o : outcomes) {
        report.checked += o.checked;
        for (auto& f : o.failures) report.failures.push_back(std::move(f));
        any_incomplete |= o.incomplete;
    }
    return any_incomplete;
}

std::vector<DegreeSequence> nonincreasing_up_to(int max_n, int min_n) {
    std::vector<DegreeSequence> out;
    for (int n = min_n; n <= max_n; ++n)
        enumerate_nonincreasing_sequences(n, [&](const DegreeSequence& s) {
            out.push_back(s);
            return true;
        });
    return out;
}

std::vector<DegreeSequence> graphic_up_to(int max_n, int min_n) {
    std::vector<DegreeSequence> out;
    for (int n = min_n; n <= max_n; ++n) {
        EnumerationOptions window;
        enumerate_graphic_sequences(n, window, [&](const DegreeSequence& s) {
            out.push_back(s);
            return true;
        });
    }
    return out;
}

TargetPattern pattern_for(const std::string& family, int m) {
    if (family.rfind("file:", 0) == 0) return build_pattern_custom(m, build_h_graph(family));
    return parse_pattern("K:" + std::to_string(m) + "-" + family);
}

// --------------------------------------------------------------------------

VerificationReport suite_graphic_triple(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "graphic-triple";
    report.parameters = "max_n=" + std::to_string(opts.max_n);
    const auto start = Clock::now();
    auto cases = nonincreasing_up_to(opts.max_n, 1);
    bool incomplete = run_parallel_cases(cases, opts, report,
                                         [&](const DegreeSequence& seq, CaseOutcome& out) {
        bool eg = is_graphic_eg(seq);
        bool lay = is_graphic_layoff(seq);
        bool direct = exists_realization_direct(seq);
        ++out.checked;
        if (eg != lay || eg != direct)
            out.failures.push_back({"graphic-triple", "seq=" + seq.to_string(),
                                    "identical answers",
                                    "eg=" + std::to_string(eg) + " layoff=" + std::to_string(lay) +
                                        " direct=" + std::to_string(direct)});
    });
    finalize(report, incomplete, start);
    return report;
}

VerificationReport suite_thm25(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "thm25";
    report.parameters = "max_n=" + std::to_string(opts.max_n);
    const auto start = Clock::now();
    auto cases = nonincreasing_up_to(opts.max_n, 2);
    bool incomplete = run_parallel_cases(cases, opts, report,
                                         [&](const DegreeSequence& seq, CaseOutcome& out) {
        bool lhs = is_graphic_eg(seq);
        for (int k = 1; k <= seq.size(); ++k) {
            auto res = try_layoff(seq, k);
            bool rhs = false;
            if (res) {
                const DegreeSequence& red = res->reduced;
                // A residual term >= n-1 cannot belong to a graphic sequence
                // of length n-1.
                rhs = red.size() == 0 ||
                      (red.max_term() < red.size() && is_graphic_eg(red));
            }
            ++out.checked;
            if (lhs != rhs)
                out.failures.push_back({"thm25", "seq=" + seq.to_string() + " k=" + std::to_string(k),
                                        "graphic(pi) == graphic(pi_k')",
                                        "graphic(pi)=" + std::to_string(lhs) +
                                            " graphic(pi_k')=" + std::to_string(rhs)});
        }
    });
    finalize(report, incomplete, start);
    return report;
}

VerificationReport suite_thm27(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "thm27";
    const int m = opts.r + 1;
    std::vector<std::string> families = opts.families;
    if (families.empty()) families = {"P2", "T3path", "T3star"};
    report.parameters = "max_n=" + std::to_string(opts.max_n) + " m=" + std::to_string(m);
    const auto start = Clock::now();

    std::vector<TargetPattern> patterns;
    for (const auto& f : families) patterns.push_back(pattern_for(f, m));
    auto sequences = graphic_up_to(opts.max_n, m);
    std::vector<std::pair<const DegreeSequence*, const TargetPattern*>> cases;
    for (const auto& s : sequences)
        for (const auto& p : patterns) cases.emplace_back(&s, &p);

    bool incomplete = run_parallel_cases(cases, opts, report, [&](const auto& c, CaseOutcome& out) {
        const auto& [seq, pattern] = c;
        PotentialDecision d = is_potentially(*seq, *pattern, opts.limit);
        ++out.checked;
        if (d.outcome == Outcome::unknown) {
            out.incomplete = true;
            return;
        }
        if (d.outcome == Outcome::no) return;
        if (!check_placement_property(*seq, *pattern, opts.limit))
            out.failures.push_back({"check_placement_property",
                                    "seq=" + seq->to_string() + " pattern=" + pattern->tag,
                                    "placement on the top-degree vertices", "none found"});
    });
    finalize(report, incomplete, start);
    return report;
}

// Lemma 2.1: a potentially K_{r+1}-e sequence has a realization carrying
// K_{r+1}-e on slots with degrees d_1..d_{r+1} and the missing edge between
// the two lowest-degree slots.
bool has_slot_placement(const SimpleGraph& g, const DegreeSequence& seq, int m) {
    std::vector<int> assign(static_cast<std::size_t>(m), -1);
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    auto rec = [&](auto&& self, int slot) -> bool {
        if (slot == m) return true;
        for (int v = 0; v < g.n(); ++v) {
            if (used[static_cast<std::size_t>(v)] || seq.term(v) != seq.term(slot)) continue;
            bool ok = true;
            for (int s = 0; s < slot && ok; ++s) {
                bool required = !(s == m - 2 && slot == m - 1);
                if (required && !g.has_edge(assign[static_cast<std::size_t>(s)], v)) ok = false;
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = 1;
            assign[static_cast<std::size_t>(slot)] = v;
            if (self(self, slot + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
            assign[static_cast<std::size_t>(slot)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

VerificationReport suite_lemma21(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "lemma21";
    const int m = opts.r + 1;
    report.parameters = "max_n=" + std::to_string(opts.max_n) + " m=" + std::to_string(m);
    const auto start = Clock::now();
    TargetPattern pattern = pattern_for("P1", m);
    auto cases = graphic_up_to(opts.max_n, m);

    bool incomplete = run_parallel_cases(cases, opts, report,
                                         [&](const DegreeSequence& seq, CaseOutcome& out) {
        PotentialDecision d = is_potentially(seq, pattern, opts.limit);
        ++out.checked;
        if (d.outcome == Outcome::unknown) {
            out.incomplete = true;
            return;
        }
        if (d.outcome == Outcome::no) return;
        bool found = false;
        SweepOptions sweep;
        sweep.limit = opts.limit;
        sweep.focus_prefix = m;
        SweepStats stats = sweep_realizations(seq, sweep, [&](const SimpleGraph& g) {
            if (has_slot_placement(g, seq, m)) {
                found = true;
                return true;
            }
            return false;
        });
        if (found) return;
        if (stats.truncated) {
            out.incomplete = true;
            return;
        }
        out.failures.push_back({"lemma21", "seq=" + seq.to_string(),
                                "missing edge on the two lowest-degree slots", "no such realization"});
    });
    finalize(report, incomplete, start);
    return report;
}

// `only` narrows the run to one hypothesis ("thm21".."lemma32"); empty runs
// all six.
VerificationReport suite_sufficiency(const SuiteOptions& opts, const std::string& only) {
    VerificationReport report;
    report.suite = only.empty() ? "sufficiency" : only;
    const int r = opts.r;
    report.parameters = "max_n=" + std::to_string(opts.max_n) + " r=" + std::to_string(r);
    const auto start = Clock::now();
    const TargetPattern pattern_e = pattern_for("P1", r + 1);
    const TargetPattern pattern_p2 = pattern_for("P2", r + 1);
    auto cases = graphic_up_to(opts.max_n, 1);
    auto wanted = [&](const char* name) { return only.empty() || only == name; };

    bool incomplete = run_parallel_cases(cases, opts, report,
                                         [&](const DegreeSequence& seq, CaseOutcome& out) {
        const bool p21 = wanted("thm21") && predicate_thm21(seq, r);
        const bool p22 = wanted("thm22") && predicate_thm22(seq, r);
        const bool p23 = wanted("thm23") && predicate_thm23(seq, r);
        const bool p24 = wanted("thm24") && predicate_thm24(seq, r);
        const bool l31 = wanted("lemma31") && predicate_lemma31(seq, r);
        const bool l32 = wanted("lemma32") && predicate_lemma32(seq, r);
        out.checked += only.empty() ? 6 : 1;

        auto verify_conclusion = [&](bool hyp_a, const char* name_a, bool hyp_b,
                                     const char* name_b, const PotentialDecision& d,
                                     const char* conclusion) {
            if (d.outcome == Outcome::unknown) {
                out.incomplete = true;
                return;
            }
            if (d.outcome == Outcome::yes) return;
            std::string hyps = hyp_a ? name_a : "";
            if (hyp_b) hyps += std::string(hyps.empty() ? "" : "+") + name_b;
            out.failures.push_back({hyps, "seq=" + seq.to_string() + " r=" + std::to_string(r),
                                    conclusion, "counterexample: conclusion is false"});
        };

        if (p21 || p22)
            verify_conclusion(p21, "thm2.1", p22, "thm2.2", is_potentially_a(seq, r, opts.limit),
                              "potentially A_{r+1}-graphic");
        if (p23 || p24)
            verify_conclusion(p23, "thm2.3", p24, "thm2.4",
                              is_potentially(seq, pattern_e, opts.limit),
                              "potentially K_{r+1}-e-graphic");
        if (l31 || l32)
            verify_conclusion(l31, "lemma3.1", l32, "lemma3.2",
                              is_potentially(seq, pattern_p2, opts.limit),
                              "potentially K_{r+1}-P_2-graphic");
    });
    finalize(report, incomplete, start);
    return report;
}

VerificationReport suite_lowerbound(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "lowerbound";
    const int r = opts.r;
    std::vector<std::string> families = opts.families;
    if (families.empty()) {
        families = {"T3path", "T3star", "C4"};
        if (r >= 4) {
            families.push_back("C5");
            families.push_back("P3");
        }
    }
    report.parameters = "r=" + std::to_string(r) + " max_n=" + std::to_string(opts.max_n);
    const auto start = Clock::now();
    bool incomplete = false;
    std::size_t done = 0;
    const std::size_t total = families.size() * static_cast<std::size_t>(std::max(0, opts.max_n - r));
    for (const auto& family : families) {
        for (int n = r + 1; n <= opts.max_n; ++n) {
            VerificationReport sub = verify_lower_bound(family, r, n, opts.limit);
            report.checked += sub.checked;
            for (auto& f : sub.failures) report.failures.push_back(std::move(f));
            if (sub.status == VerificationReport::Status::incomplete) incomplete = true;
            if (opts.progress) opts.progress(++done, total);
        }
    }
    finalize(report, incomplete, start);
    return report;
}

VerificationReport suite_identities(const SuiteOptions&) {
    VerificationReport report;
    report.suite = "identities";
    report.parameters = "r=3..10 n=r+1..100";
    const auto start = Clock::now();
    for (int r = 3; r <= 10; ++r) {
        for (int n = r + 1; n <= 100; ++n) {
            ++report.checked;
            long long lhs = static_cast<long long>(r - 2) * (n - 1) +
                            static_cast<long long>(r - 2) * (n - r + 2) + 2;
            if (lhs != sigma_formula_t3(r, n))
                report.add_failure("lower-bound identity",
                                   "r=" + std::to_string(r) + " n=" + std::to_string(n),
                                   std::to_string(sigma_formula_t3(r, n)), std::to_string(lhs));
            if (sigma_formula_p2(r, n) - sigma_formula_t3(r, n) != 2)
                report.add_failure("formula relation",
                                   "r=" + std::to_string(r) + " n=" + std::to_string(n), "2",
                                   std::to_string(sigma_formula_p2(r, n) - sigma_formula_t3(r, n)));
        }
    }
    finalize(report, false, start);
    return report;
}

VerificationReport suite_sigma_oracle(const SuiteOptions& opts) {
    VerificationReport report;
    report.suite = "sigma-oracle";
    const int r = opts.r;
    std::vector<std::string> families = opts.families;
    if (families.empty()) families = {"T3path", "T3star"};
    const int min_n = std::max(5, r + 2);
    report.parameters = "r=" + std::to_string(r) + " n=" + std::to_string(min_n) + ".." +
                        std::to_string(opts.max_n);
    const auto start = Clock::now();
    bool incomplete = false;
    std::size_t done = 0;
    const std::size_t total = families.size() *
                              static_cast<std::size_t>(std::max(0, opts.max_n - min_n + 1));

    for (const auto& family : families) {
        for (int n = min_n; n <= opts.max_n; ++n) {
            const std::string input = "family=" + family + " r=" + std::to_string(r) +
                                      " n=" + std::to_string(n);
            BruteOptions brute;
            brute.limit = opts.limit;
            brute.max_n = std::max(9, opts.max_n);
            brute.jobs = opts.jobs;
            SigmaResult result;
            try {
                result = sigma_brute(family, r, n, brute);
            } catch (const OracleIncompleteError&) {
                incomplete = true;
                if (opts.progress) opts.progress(++done, total);
                continue;
            }
            ++report.checked;
            if (result.value % 2 != 0)
                report.add_failure("sigma parity", input, "even", std::to_string(result.value));
            if (result.value < sigma_formula_t3(r, n))
                report.add_failure("lemma3.4 bound", input,
                                   ">= " + std::to_string(sigma_formula_t3(r, n)),
                                   std::to_string(result.value));
            if (!result.witness_below) {
                report.add_failure("witness presence", input, "maximal failing sequence", "none");
            } else {
                const DegreeSequence& w = *result.witness_below;
                if (!is_graphic_eg(w))
                    report.add_failure("witness graphic", input, "graphic", w.to_string());
                if (w.sigma() != result.value - 2)
                    report.add_failure("witness sigma", input, std::to_string(result.value - 2),
                                       std::to_string(w.sigma()));
                TargetPattern pattern = pattern_for(family, r + 1);
                PotentialDecision d = is_potentially(w, pattern, opts.limit);
                if (d.outcome != Outcome::no)
                    report.add_failure("witness not potentially", input, "no",
                                       d.outcome == Outcome::yes ? "yes" : "unknown");
            }
            if (const SigmaFixture* fix = sigma_fixture(family, r, n)) {
                if (result.value != fix->value)
                    report.add_failure("frozen value", input, std::to_string(fix->value),
                                       std::to_string(result.value));
                if (!result.witness_below ||
                    result.witness_below->to_string() != fix->witness)
                    report.add_failure("frozen witness", input, fix->witness,
                                       result.witness_below ? result.witness_below->to_string()
                                                            : "none");
            }
            if (opts.progress) opts.progress(++done, total);
        }
    }
    finalize(report, incomplete, start);
    return report;
}

VerificationReport suite_formula_endpoints(const SuiteOptions&) {
    VerificationReport report;
    report.suite = "formula-endpoints";
    report.parameters = "pinned constants";
    const auto start = Clock::now();
    struct Endpoint {
        const char* family;
        int r, n, value;
    };
    constexpr Endpoint endpoints[] = {
        {"P2", 3, 20, 42},
        {"T3path", 3, 22, 44},
        {"P2", 4, 24, 94},
    };
    for (const auto& e : endpoints) {
        ++report.checked;
        SigmaResult result = sigma_formula(e.family, e.r, e.n);
        const std::string input = std::string("family=") + e.family + " r=" + std::to_string(e.r) +
                                  " n=" + std::to_string(e.n);
        if (result.value != e.value)
            report.add_failure("sigma_formula", input, std::to_string(e.value),
                               std::to_string(result.value));
        if (!result.threshold_met)
            report.add_failure("threshold", input, "met", "not met");
    }
    finalize(report, false, start);
    return report;
}

} // namespace

const SigmaFixture* sigma_fixture(const std::string& family, int r, int n) {
    // Computed by exhaustive enumeration over all graphs on n vertices,
    // grouped by degree sequence (r = 3 throughout).
    static constexpr SigmaFixture kFixtures[] = {
        {"P2", 4, 10, "2,2,2,2"},
        {"P2", 5, 12, "2,2,2,2,2"},
        {"P2", 6, 14, "2,2,2,2,2,2"},
        {"P2", 7, 16, "2,2,2,2,2,2,2"},
        {"T3path", 4, 8, "3,1,1,1"},
        {"T3path", 5, 10, "4,1,1,1,1"},
        {"T3path", 6, 12, "5,1,1,1,1,1"},
        {"T3path", 7, 14, "6,1,1,1,1,1,1"},
        {"T3star", 4, 10, "2,2,2,2"},
        {"T3star", 5, 12, "2,2,2,2,2"},
        {"T3star", 6, 12, "5,1,1,1,1,1"},
        {"T3star", 7, 14, "6,1,1,1,1,1,1"},
        {"K3", 4, 10, "2,2,2,2"},
        {"K3", 5, 12, "2,2,2,2,2"},
        {"K3", 6, 14, "2,2,2,2,2,2"},
        {"K3", 7, 16, "2,2,2,2,2,2,2"},
    };
    if (r != 3) return nullptr;
    for (const auto& f : kFixtures)
        if (family == f.family && n == f.n) return &f;
    return nullptr;
}

std::vector<std::string> suite_names() {
    return {"graphic-triple", "thm25",   "thm27",   "lemma21", "sufficiency",
            "thm21",          "thm22",   "thm23",   "thm24",   "lemma31",
            "lemma32",        "lowerbound", "identities", "sigma-oracle",
            "formula-endpoints"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "graphic-triple") return suite_graphic_triple(opts);
    if (name == "thm25") return suite_thm25(opts);
    if (name == "thm27") return suite_thm27(opts);
    if (name == "lemma21") return suite_lemma21(opts);
    if (name == "sufficiency") return suite_sufficiency(opts, "");
    for (const char* one : {"thm21", "thm22", "thm23", "thm24", "lemma31", "lemma32"})
        if (name == one) return suite_sufficiency(opts, name);
    if (name == "lowerbound") return suite_lowerbound(opts);
    if (name == "identities") return suite_identities(opts);
    if (name == "sigma-oracle") return suite_sigma_oracle(opts);
    if (name == "formula-endpoints") return suite_formula_endpoints(opts);
    throw ValidationError("unknown suite '" + name + "'");
}

} // namespace degseq
