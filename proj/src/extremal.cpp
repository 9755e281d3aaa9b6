#include "degseq/extremal.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "degseq/version.hpp"
#include "parallel.hpp"

namespace degseq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Family eligibility for the closed forms. P2 is Theorem 1.1's case; any
// family whose H passes the Theorem 1.3 class check (both T3 variants do)
// uses the Theorem 1.2/1.3 value.
enum class FormulaCase { p2, t3_class, none };

FormulaCase formula_case(const std::string& family, int r) {
    if (family == "P2") return FormulaCase::p2;
    SimpleGraph h = build_h_graph(family);
    if (validate_theorem13_class(h, h.n(), r)) return FormulaCase::t3_class;
    return FormulaCase::none;
}

} // namespace

long long sigma_formula_p2(long long r, long long n) {
    return (r - 1) * (2 * n - r) - 2 * (n - r) + 2;
}

long long sigma_formula_t3(long long r, long long n) {
    return (r - 1) * (2 * n - r) - 2 * (n - r);
}

SigmaResult sigma_formula(const std::string& family, int r, int n) {
    if (r < 3) throw ValidationError("sigma formulas need r >= 3");
    if (n < r + 1) throw ValidationError("sigma formulas need n >= r+1");
    const auto start = Clock::now();
    SigmaResult result;
    result.method = "formula";
    switch (formula_case(family, r)) {
        case FormulaCase::p2:
            result.value = static_cast<int>(sigma_formula_p2(r, n));
            result.threshold_met = n >= 4 * r + 8;
            break;
        case FormulaCase::t3_class:
            result.value = static_cast<int>(sigma_formula_t3(r, n));
            result.threshold_met = n >= 4 * r + 10;
            break;
        case FormulaCase::none:
            throw NoFormulaError("no closed form covers family '" + family + "' at r = " +
                                 std::to_string(r));
    }
    if (!result.threshold_met) result.method = "formula-extrapolation";
    result.elapsed_ms = ms_since(start);
    return result;
}

std::pair<SimpleGraph, DegreeSequence> build_witness(int r, int n) {
    if (r < 3) throw ValidationError("witness construction needs r >= 3");
    if (n < r + 1) throw ValidationError("witness construction needs n >= r+1");
    SimpleGraph g = join(SimpleGraph::complete(r - 2), SimpleGraph::empty_graph(n - r + 2));
    return {g, g.degree_sequence()};
}

SigmaResult sigma_brute(const std::string& family, int r, int n, const BruteOptions& opts) {
    if (r < 3) throw ValidationError("sigma oracle needs r >= 3");
    if (n < r + 1) throw ValidationError("sigma oracle needs n >= r+1");
    if (n > opts.max_n)
        throw ValidationError("n = " + std::to_string(n) +
                              " exceeds the exhaustion guard (max_n = " +
                              std::to_string(opts.max_n) + ")");
    TargetPattern pattern = [&] {
        if (family.rfind("file:", 0) == 0)
            return build_pattern_custom(r + 1, build_h_graph(family));
        TargetPattern p = parse_pattern("K:" + std::to_string(r + 1) + "-" + family);
        return p;
    }();

    const auto start = Clock::now();
    SigmaResult result;
    result.method = "brute";
    bool eligible_p2 = family == "P2";
    bool eligible_t3 = false;
    try {
        eligible_t3 = !eligible_p2 && formula_case(family, r) == FormulaCase::t3_class;
    } catch (const ValidationError&) {
        eligible_t3 = false;
    }
    result.threshold_met = (eligible_p2 && n >= 4 * r + 8) || (eligible_t3 && n >= 4 * r + 10);

    // Descending sweep: the first sigma level with a failing sequence is the
    // maximum failing sigma; the value is that plus two.
    const int top = n * (n - 1);
    for (int level = top - (top % 2); level >= 0; level -= 2) {
        EnumerationOptions window;
        window.min_sigma = level;
        window.max_sigma = level;
        std::vector<DegreeSequence> sequences;
        enumerate_graphic_sequences(n, window, [&](const DegreeSequence& s) {
            sequences.push_back(s);
            return true;
        });
        if (sequences.empty()) continue;

        std::vector<char> fails(sequences.size(), 0);
        std::vector<char> truncated(sequences.size(), 0);
        parallel_for(sequences.size(), opts.jobs, [&](std::size_t i) {
            PotentialDecision d = is_potentially(sequences[i], pattern, opts.limit);
            if (d.outcome == Outcome::unknown) truncated[i] = 1;
            if (d.outcome == Outcome::no) fails[i] = 1;
        });
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            if (truncated[i])
                throw OracleIncompleteError("realization sweep truncated at sigma = " +
                                            std::to_string(level) + ", sequence " +
                                            sequences[i].to_string());
            if (fails[i]) {
                result.value = level + 2;
                result.witness_below = sequences[i];
                result.elapsed_ms = ms_since(start);
                return result;
            }
        }
    }
    // Every graphic sequence is potentially F-graphic (empty pattern).
    result.value = 0;
    result.elapsed_ms = ms_since(start);
    return result;
}

VerificationReport verify_lower_bound(const std::string& family, int r, int n,
                                      std::size_t limit) {
    VerificationReport report;
    report.suite = "lowerbound";
    report.parameters = "family=" + family + " r=" + std::to_string(r) + " n=" + std::to_string(n);
    const auto start = Clock::now();

    SimpleGraph h = build_h_graph(family);
    if (!validate_theorem13_class(h, h.n(), r))
        throw ValidationError("family '" + family + "' is not a Theorem 1.3 class for r = " +
                              std::to_string(r));
    auto [witness, seq] = build_witness(r, n);
    const std::string input = "family=" + family + " r=" + std::to_string(r) +
                              " n=" + std::to_string(n);

    // (a) the witness sequence is graphic
    ++report.checked;
    if (!is_graphic_eg(seq))
        report.add_failure("is_graphic_eg", input, "true", "false");

    // (b) unique realization up to isomorphism
    RealizationSet realizations = all_realizations(seq, limit);
    if (realizations.truncated) report.mark_incomplete();
    ++report.checked;
    for (const SimpleGraph& g : realizations.graphs) {
        if (!isomorphic(g, realizations.graphs.front())) {
            report.add_failure("all_realizations/isomorphic", input,
                               "all realizations isomorphic", "distinct realization found");
            break;
        }
    }

    // (c) no realization contains K_{r+1} - H
    TargetPattern pattern = build_pattern_custom(r + 1, h);
    ++report.checked;
    for (const SimpleGraph& g : realizations.graphs) {
        if (contains_subgraph(g, pattern.graph)) {
            report.add_failure("contains_subgraph", input, "no realization contains the pattern",
                               "pattern found");
            break;
        }
    }

    // (d) (r-2)(n-1) + (r-2)(n-r+2) + 2 = (r-1)(2n-r) - 2(n-r)
    ++report.checked;
    long long lhs = static_cast<long long>(r - 2) * (n - 1) +
                    static_cast<long long>(r - 2) * (n - r + 2) + 2;
    if (lhs != sigma_formula_t3(r, n))
        report.add_failure("lower-bound identity", input, std::to_string(sigma_formula_t3(r, n)),
                           std::to_string(lhs));

    // (e) sigma(witness) = bound - 2
    ++report.checked;
    if (seq.sigma() != sigma_formula_t3(r, n) - 2)
        report.add_failure("witness sigma", input,
                           std::to_string(sigma_formula_t3(r, n) - 2),
                           std::to_string(seq.sigma()));

    report.elapsed_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// Results cache.

std::filesystem::path sigma_cache_path(const std::filesystem::path& dir,
                                       const std::string& family, int r, int n) {
    return dir / (family + "_r" + std::to_string(r) + "_n" + std::to_string(n) + ".json");
}

void write_sigma_cache(const std::filesystem::path& dir, const SigmaQuery& query,
                       const SigmaResult& result) {
    std::filesystem::create_directories(dir);
    nlohmann::json j;
    j["query"] = {{"family", query.family}, {"r", query.r}, {"n", query.n},
                  {"method", query.method}};
    j["value"] = result.value;
    j["thresholdMet"] = result.threshold_met;
    if (result.witness_below)
        j["witnessBelow"] = result.witness_below->terms();
    else
        j["witnessBelow"] = nullptr;
    j["elapsedMs"] = result.elapsed_ms;
    j["codeVersion"] = std::string(kCodeVersion);
    std::ofstream out(sigma_cache_path(dir, query.family, query.r, query.n));
    out << j.dump(2) << '\n';
}

std::optional<SigmaResult> read_sigma_cache(const std::filesystem::path& dir,
                                            const std::string& family, int r, int n) {
    std::ifstream in(sigma_cache_path(dir, family, r, n));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("codeVersion").get<std::string>() != kCodeVersion) return std::nullopt;
        SigmaResult result;
        result.value = j.at("value").get<int>();
        result.threshold_met = j.at("thresholdMet").get<bool>();
        if (!j.at("witnessBelow").is_null())
            result.witness_below = DegreeSequence(j.at("witnessBelow").get<std::vector<int>>());
        result.method = "cache";
        result.elapsed_ms = 0.0;
        return result;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace degseq
