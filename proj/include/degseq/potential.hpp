#pragma once

#include <optional>
#include <string>

#include "degseq/patterns.hpp"

namespace degseq {

enum class Outcome { yes, no, unknown };

struct SearchStats {
    std::size_t explored = 0;
    bool truncated = false;
};

struct PotentialWitness {
    SimpleGraph graph;
    std::vector<int> embedding;  // pattern vertex -> host vertex (or the
                                 // clique vertex set for the A_{r+1} check)
};

// A truncated search never reports a definitive "no": outcome is unknown
// whenever the budget ran out before the space was exhausted.
struct PotentialDecision {
    Outcome outcome = Outcome::unknown;
    std::string method;  // "exhaustive-search" or "sufficient-condition:<id>"
    std::optional<PotentialWitness> witness;
    SearchStats stats;

    bool is_yes() const { return outcome == Outcome::yes; }
    bool is_no() const { return outcome == Outcome::no; }
};

// Does some realization of seq contain the pattern as a subgraph?
// Exhaustive sweep over the realization space with early exit on a witness.
PotentialDecision is_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                                 std::size_t limit = kDefaultRealizationLimit);

// Does some realization have r+1 vertices whose degree multiset equals the
// top r+1 terms of seq and which induce a clique (potentially A_{r+1})?
PotentialDecision is_potentially_a(const DegreeSequence& seq, int r,
                                   std::size_t limit = kDefaultRealizationLimit);

// Pure hypothesis checks of the sufficient conditions. They return false
// (not an error) when the structural precondition on n fails, and reject
// non-graphic sequences with ValidationError.
bool predicate_thm21(const DegreeSequence& seq, int r);  // d_{r+1}>=r, d_i>=2r-i for i<r
bool predicate_thm22(const DegreeSequence& seq, int r);  // d_{r+1}>=r, d_{2r+2}>=r-1
bool predicate_thm23(const DegreeSequence& seq, int r);  // d_{r+1}>=r-1, d_i>=2r-i for i<r
bool predicate_thm24(const DegreeSequence& seq, int r);  // d_{r-1}>=r, d_{2r+2}>=r-1
bool predicate_lemma31(const DegreeSequence& seq, int r); // d_r>=r-1, d_{r+1}>=r-2, d_i>=2r-i for i<=r-2
bool predicate_lemma32(const DegreeSequence& seq, int r); // d_{r-2}>=r, d_{2r+2}>=r-1

// Does some realization embed the pattern onto a vertex set whose degree
// multiset equals the top pattern.m terms of seq? Requires that seq is
// potentially pattern-graphic (PreconditionError otherwise, also when the
// search budget makes the precondition undecidable).
bool check_placement_property(const DegreeSequence& seq, const TargetPattern& pattern,
                              std::size_t limit = kDefaultRealizationLimit);

// Fast-path combinator: sufficient-condition predicates first (for the
// K_{r+1}-P_2 and K_{r+1}-e shapes), exhaustive search otherwise.
PotentialDecision decide_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                                     std::size_t limit = kDefaultRealizationLimit);

} // namespace degseq
