#pragma once

#include <functional>
#include <string>
#include <vector>

#include "degseq/graphs.hpp"
#include "degseq/report.hpp"

namespace degseq {

struct SuiteOptions {
    int max_n = 8;
    int r = 3;
    std::vector<std::string> families;  // suite-specific default when empty
    int jobs = 1;
    std::size_t limit = kDefaultRealizationLimit;
    // progress(done, total), called from the driver thread only.
    std::function<void(std::size_t, std::size_t)> progress;
};

// Desk-scale verification suites:
//   graphic-triple    Erdos-Gallai == laying-off == direct realization search
//   thm25             graphic(pi) <=> graphic(pi_k') for every k
//   thm27             potentially F => placement on the top-degree vertices
//   lemma21           K_{r+1}-e placement with the missing edge on the two
//                     lowest-degree slots
//   sufficiency       predicates 2.1-2.4 / 3.1-3.2 imply their conclusions
//   lowerbound        witness-graph report per family and n
//   identities        closed-form arithmetic identities
//   sigma-oracle      brute sigma values against frozen small-n fixtures
//   formula-endpoints pinned formula values
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

// Frozen small-n sigma values (r = 3), computed by exhaustive enumeration
// over all graphs on n vertices. Returns nullptr when no fixture exists.
struct SigmaFixture {
    const char* family;
    int n;
    int value;
    const char* witness;  // text form of the maximal failing sequence
};
const SigmaFixture* sigma_fixture(const std::string& family, int r, int n);

} // namespace degseq
