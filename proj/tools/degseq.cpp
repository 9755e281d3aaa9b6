// Command-line surface for the degree-sequence toolkit. stdout carries one
// machine-readable JSON document (NDJSON for `enumerate`); progress and
// diagnostics go to stderr.
//
// Exit codes: 0 affirmative/success, 1 negative/failed suite, 2 validation
// or usage error, 3 undecided (search budget hit).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/extremal.hpp"
#include "degseq/patterns.hpp"
#include "degseq/potential.hpp"
#include "degseq/sequences.hpp"
#include "degseq/verify.hpp"
#include "degseq/version.hpp"

using nlohmann::json;
using namespace degseq;

namespace {

json graph_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

json report_json(const VerificationReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"operation", f.operation},
                            {"input", f.input},
                            {"expected", f.expected},
                            {"got", f.got}});
    return {{"suite", report.suite},       {"parameters", report.parameters},
            {"checked", report.checked},   {"failures", failures},
            {"elapsedMs", report.elapsed_ms}, {"status", status_name(report.status)}};
}

json sigma_json(const SigmaQuery& query, const SigmaResult& result) {
    json j;
    j["query"] = {{"family", query.family}, {"r", query.r}, {"n", query.n},
                  {"method", query.method}};
    j["value"] = result.value;
    j["thresholdMet"] = result.threshold_met;
    j["witnessBelow"] = result.witness_below ? json(result.witness_below->terms()) : json(nullptr);
    j["method"] = result.method;
    j["elapsedMs"] = result.elapsed_ms;
    j["codeVersion"] = std::string(kCodeVersion);
    return j;
}

void emit(const json& j, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_file);
        if (!out) throw ValidationError("cannot open output file '" + out_file + "'");
        out << j.dump(2) << '\n';
    }
}

// Rate-limited progress line on stderr.
struct Progress {
    std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();
    void operator()(std::size_t done, std::size_t total) {
        auto now = std::chrono::steady_clock::now();
        if (done < total && now - last < std::chrono::seconds(1)) return;
        last = now;
        std::cerr << "progress: " << done << "/" << total << "\n";
    }
};

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DEGSEQ_CACHE_DIR"); env && *env) return env;
    return "degseq-cache";
}

bool cacheable_family(const std::string& family) {
    return family.find(':') == std::string::npos && family.find('/') == std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence combinatorics toolkit"};
    app.require_subcommand(1);

    std::string seq_text, pattern_text, method = "both", family, suite, out_file, cache_dir;
    std::string families_csv;
    int r = 3, n = 0, max_n = 8, jobs = 1, first_term = -1, min_sigma = 0, max_sigma = -1;
    int max_brute_n = 9;
    std::size_t limit = kDefaultRealizationLimit;
    bool fast_path = false, recompute = false;

    auto* check = app.add_subcommand("check-graphic", "test a sequence for graphicality");
    check->add_option("--seq", seq_text, "comma-separated degree sequence")->required();
    check->add_option("--method", method, "eg, layoff or both")
        ->check(CLI::IsMember({"eg", "layoff", "both"}));

    auto* realize_cmd = app.add_subcommand("realize", "build one realization");
    realize_cmd->add_option("--seq", seq_text)->required();

    auto* potential_cmd = app.add_subcommand("potential", "potentially K_m-H decision");
    potential_cmd->add_option("--seq", seq_text)->required();
    potential_cmd->add_option("--pattern", pattern_text, "e.g. K:4-P2")->required();
    potential_cmd->add_option("--limit", limit, "realization search budget");
    potential_cmd->add_flag("--fast-path", fast_path, "try sufficient conditions first");

    auto* sigma_cmd = app.add_subcommand("sigma", "sigma(K_{r+1}-H, n)");
    sigma_cmd->add_option("--method", method, "formula or brute")->required()
        ->check(CLI::IsMember({"formula", "brute"}));
    sigma_cmd->add_option("--family", family, "P2, T3path, T3star, C<k>, P<k>, K3, file:<path>")
        ->required();
    sigma_cmd->add_option("--r", r)->required();
    sigma_cmd->add_option("--n", n)->required();
    sigma_cmd->add_option("--limit", limit);
    sigma_cmd->add_option("--jobs", jobs);
    sigma_cmd->add_option("--max-brute-n", max_brute_n, "exhaustion guard for brute mode");
    sigma_cmd->add_option("--cache-dir", cache_dir, "results cache (or DEGSEQ_CACHE_DIR)");
    sigma_cmd->add_flag("--recompute", recompute, "ignore cached results");

    auto* witness_cmd = app.add_subcommand("witness", "K_{r-2} + complement(K_{n-r+2})");
    witness_cmd->add_option("--r", r)->required();
    witness_cmd->add_option("--n", n)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name (see --list)")
        ->check([](const std::string& s) {
            auto names = suite_names();
            return std::find(names.begin(), names.end(), s) != names.end()
                       ? std::string{}
                       : "unknown suite '" + s + "'";
        });
    verify_cmd->add_option("--max-n", max_n);
    verify_cmd->add_option("--r", r);
    verify_cmd->add_option("--families", families_csv, "comma-separated family tokens");
    verify_cmd->add_option("--jobs", jobs);
    verify_cmd->add_option("--limit", limit);
    verify_cmd->add_option("--out", out_file, "write the report here instead of stdout");
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names");

    auto* enum_cmd = app.add_subcommand("enumerate", "graphic sequences, one JSON array per line");
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--min-sigma", min_sigma);
    enum_cmd->add_option("--max-sigma", max_sigma);
    enum_cmd->add_option("--first-term", first_term, "partition by fixed d_1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, every usage error exits 2
    }

    try {
        if (check->parsed()) {
            DegreeSequence seq = DegreeSequence::parse(seq_text);
            json j;
            j["sequence"] = seq.terms();
            j["method"] = method;
            bool graphic = false;
            if (method == "eg") {
                graphic = is_graphic_eg(seq);
            } else if (method == "layoff") {
                graphic = is_graphic_layoff(seq);
            } else {
                bool eg = is_graphic_eg(seq);
                bool lay = is_graphic_layoff(seq);
                j["eg"] = eg;
                j["layoff"] = lay;
                j["agrees"] = eg == lay;
                graphic = eg;
            }
            j["graphic"] = graphic;
            emit(j, "");
            return graphic ? 0 : 1;
        }

        if (realize_cmd->parsed()) {
            DegreeSequence seq = DegreeSequence::parse(seq_text);
            auto g = realize(seq);
            json j;
            j["sequence"] = seq.terms();
            j["graphic"] = g.has_value();
            if (g) j["graph"] = graph_json(*g);
            emit(j, "");
            return g ? 0 : 1;
        }

        if (potential_cmd->parsed()) {
            DegreeSequence seq = DegreeSequence::parse(seq_text);
            TargetPattern pattern = parse_pattern(pattern_text);
            PotentialDecision d = fast_path ? decide_potentially(seq, pattern, limit)
                                            : is_potentially(seq, pattern, limit);
            json j;
            j["sequence"] = seq.terms();
            j["pattern"] = pattern_text;
            j["decision"] = d.outcome == Outcome::unknown ? json(nullptr)
                                                          : json(d.outcome == Outcome::yes);
            j["truncated"] = d.stats.truncated;
            j["explored"] = d.stats.explored;
            j["method"] = d.method;
            if (d.witness) {
                j["witness"] = {{"graph", graph_json(d.witness->graph)},
                                {"embedding", d.witness->embedding}};
            }
            emit(j, "");
            return d.outcome == Outcome::yes ? 0 : d.outcome == Outcome::no ? 1 : 3;
        }

        if (sigma_cmd->parsed()) {
            SigmaQuery query{family, r, n, method};
            if (method == "formula") {
                SigmaResult result = sigma_formula(family, r, n);
                emit(sigma_json(query, result), "");
                return 0;
            }
            auto dir = resolve_cache_dir(cache_dir);
            if (!recompute && cacheable_family(family)) {
                if (auto cached = read_sigma_cache(dir, family, r, n)) {
                    emit(sigma_json(query, *cached), "");
                    return 0;
                }
            }
            BruteOptions opts;
            opts.limit = limit;
            opts.max_n = max_brute_n;
            opts.jobs = jobs;
            SigmaResult result = sigma_brute(family, r, n, opts);
            if (cacheable_family(family)) write_sigma_cache(dir, query, result);
            emit(sigma_json(query, result), "");
            return 0;
        }

        if (witness_cmd->parsed()) {
            auto [g, seq] = build_witness(r, n);
            json j;
            j["r"] = r;
            j["n"] = n;
            j["sequence"] = seq.terms();
            j["sigma"] = seq.sigma();
            j["graph"] = graph_json(g);
            emit(j, "");
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (list_suites) {
                emit(json(suite_names()), "");
                return 0;
            }
            if (suite.empty()) throw ValidationError("verify needs a suite name (or --list)");
            SuiteOptions opts;
            opts.max_n = max_n;
            opts.r = r;
            opts.jobs = jobs;
            opts.limit = limit;
            if (!families_csv.empty()) {
                std::size_t pos = 0;
                while (pos <= families_csv.size()) {
                    auto comma = families_csv.find(',', pos);
                    opts.families.push_back(families_csv.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            opts.progress = Progress{};
            VerificationReport report = run_suite(suite, opts);
            emit(report_json(report), out_file);
            switch (report.status) {
                case VerificationReport::Status::pass: return 0;
                case VerificationReport::Status::fail: return 1;
                case VerificationReport::Status::incomplete: return 3;
            }
        }

        if (enum_cmd->parsed()) {
            EnumerationOptions opts;
            opts.min_sigma = min_sigma;
            opts.max_sigma = max_sigma;
            opts.first_term = first_term;
            enumerate_graphic_sequences(n, opts, [&](const DegreeSequence& s) {
                std::cout << json(s.terms()).dump() << '\n';
                return true;
            });
            return 0;
        }
    } catch (const OracleIncompleteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", e.what()}}.dump(2) << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", e.what()}}.dump(2) << '\n';
        return 2;
    }
    return 2;
}
