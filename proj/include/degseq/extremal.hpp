#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "degseq/patterns.hpp"
#include "degseq/potential.hpp"
#include "degseq/report.hpp"

namespace degseq {

struct SigmaQuery {
    std::string family;  // family token, e.g. "P2", "T3star", "C4"
    int r = 0;
    int n = 0;
    std::string method;  // "formula" or "brute"
};

struct SigmaResult {
    int value = 0;             // always even
    bool threshold_met = false;
    std::optional<DegreeSequence> witness_below;  // graphic, sigma = value-2,
                                                  // not potentially F-graphic
    std::string method;
    double elapsed_ms = 0.0;
};

// Closed forms: P2 -> (r-1)(2n-r)-2(n-r)+2 (threshold n >= 4r+8); any
// Theorem-1.3 family including both T3 variants -> (r-1)(2n-r)-2(n-r)
// (threshold n >= 4r+10). Below threshold the value is extrapolated and
// threshold_met is false. Families outside both theorems raise
// NoFormulaError.
SigmaResult sigma_formula(const std::string& family, int r, int n);

// The two closed-form right-hand sides, exposed for identity checks.
long long sigma_formula_p2(long long r, long long n);
long long sigma_formula_t3(long long r, long long n);

// K_{r-2} + complement(K_{n-r+2}) and its degree sequence
// ((n-1)^{r-2}, (r-2)^{n-r+2}).
std::pair<SimpleGraph, DegreeSequence> build_witness(int r, int n);

struct BruteOptions {
    std::size_t limit = kDefaultRealizationLimit;
    int max_n = 9;   // exhaustion guard
    int jobs = 1;
};

// Independent oracle: descending sweep over sigma levels, deciding every
// graphic sequence by exhaustive realization search. Any truncated inner
// decision aborts with OracleIncompleteError.
SigmaResult sigma_brute(const std::string& family, int r, int n, const BruteOptions& opts = {});

// Lemma 3.4 style report: the witness sequence is graphic, has a unique
// realization up to isomorphism, no realization contains K_{r+1}-H, and
// (r-2)(n-1)+(r-2)(n-r+2)+2 = (r-1)(2n-r)-2(n-r).
VerificationReport verify_lower_bound(const std::string& family, int r, int n,
                                      std::size_t limit = kDefaultRealizationLimit);

// Results cache: one "<family>_r<r>_n<n>.json" file per query.
std::filesystem::path sigma_cache_path(const std::filesystem::path& dir,
                                       const std::string& family, int r, int n);
void write_sigma_cache(const std::filesystem::path& dir, const SigmaQuery& query,
                       const SigmaResult& result);
std::optional<SigmaResult> read_sigma_cache(const std::filesystem::path& dir,
                                            const std::string& family, int r, int n);

} // namespace degseq
