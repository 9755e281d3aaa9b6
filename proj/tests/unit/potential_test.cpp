#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "degseq/potential.hpp"

using namespace degseq;
using testsupport::brute_contains;
using testsupport::for_all_graphs;

namespace {

// Independent decision: any graph on n vertices whose sorted degrees equal
// seq and which contains the pattern, by raw mask enumeration.
bool brute_potentially(const DegreeSequence& seq, const TargetPattern& pattern) {
    bool found = false;
    for_all_graphs(seq.size(), [&](const SimpleGraph& g) {
        if (found) return;
        if (g.degree_sequence() == seq && brute_contains(g, pattern.graph)) found = true;
    });
    return found;
}

} // namespace

TEST_SUITE("potential") {

TEST_CASE("is_potentially examples") {
    TargetPattern k4p2 = parse_pattern("K:4-P2");
    CHECK(is_potentially(DegreeSequence({3, 3, 3, 3}), k4p2).is_yes());
    CHECK(is_potentially(DegreeSequence({6, 1, 1, 1, 1, 1, 1}), k4p2).is_no());
    CHECK(is_potentially(DegreeSequence({2, 2, 2, 2, 2, 2}), parse_pattern("K:4-T3star")).is_yes());
}

TEST_CASE("witness is checkable") {
    TargetPattern pattern = parse_pattern("K:4-T3star");
    DegreeSequence seq({2, 2, 2, 2, 2, 2});
    PotentialDecision d = is_potentially(seq, pattern);
    REQUIRE(d.is_yes());
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->graph.degrees() == seq.terms());
    for (auto [u, v] : pattern.graph.edges())
        CHECK(d.witness->graph.has_edge(d.witness->embedding[static_cast<std::size_t>(u)],
                                        d.witness->embedding[static_cast<std::size_t>(v)]));
}

TEST_CASE("is_potentially validation") {
    TargetPattern k4p2 = parse_pattern("K:4-P2");
    CHECK_THROWS_AS(is_potentially(DegreeSequence({3, 3, 1, 1}), k4p2), ValidationError);
    CHECK_THROWS_AS(is_potentially(DegreeSequence({2, 1, 1}), k4p2), ValidationError);
}

TEST_CASE("truncated searches stay undecided") {
    // every realization of (2,2,2,2,2) is a 5-cycle, so the pattern is never
    // found and a budget of one realization cannot finish the sweep
    PotentialDecision d = is_potentially(DegreeSequence({2, 2, 2, 2, 2}),
                                         parse_pattern("K:4-T3star"), 1);
    CHECK(d.outcome == Outcome::unknown);
    CHECK(d.stats.truncated);
    CHECK_FALSE(d.witness.has_value());
}

TEST_CASE("is_potentially_a") {
    CHECK(is_potentially_a(DegreeSequence({3, 3, 3, 3}), 3).is_yes());
    CHECK(is_potentially_a(DegreeSequence({2, 2, 2, 2}), 3).is_no());
    PotentialDecision d = is_potentially_a(DegreeSequence({3, 3, 2, 2, 2}), 2);
    CHECK(d.is_yes());
    REQUIRE(d.witness.has_value());
    // the witness clique carries the top 3 degrees (3,3,2)
    std::multiset<int> got;
    for (int v : d.witness->embedding) got.insert(d.witness->graph.degree(v));
    CHECK(got == std::multiset<int>{3, 3, 2});
    CHECK_THROWS_AS(is_potentially_a(DegreeSequence({2, 2, 2}), 3), ValidationError);
}

TEST_CASE("predicate hypothesis arithmetic") {
    CHECK(predicate_thm21(DegreeSequence({5, 4, 3, 3, 3, 3, 3}), 3));
    CHECK_FALSE(predicate_thm21(DegreeSequence({3, 3, 3, 3}), 3));
    CHECK(predicate_thm22(DegreeSequence({3, 3, 3, 3, 3, 3, 3, 3}), 3));
    CHECK_FALSE(predicate_thm22(DegreeSequence({3, 3, 3, 3, 3, 3}), 3));  // n < 2r+2
    CHECK(predicate_thm23(DegreeSequence({5, 4, 3, 2, 2, 2, 2, 2}), 3));
    CHECK(predicate_thm24(DegreeSequence({4, 4, 3, 3, 2, 2, 2, 2}), 3));
    CHECK(predicate_lemma31(DegreeSequence({5, 3, 2, 2, 2, 2}), 3));
    CHECK_FALSE(predicate_lemma31(DegreeSequence({2, 2, 2, 2}), 3));
    CHECK(predicate_lemma32(DegreeSequence({3, 3, 3, 3, 3, 3, 3, 3, 2, 2}), 3));

    CHECK_THROWS_AS(predicate_thm21(DegreeSequence({3, 3, 1, 1}), 3), ValidationError);
    CHECK_THROWS_AS(predicate_lemma31(DegreeSequence({2, 2, 2}), 2), ValidationError);
}

TEST_CASE("placement property") {
    TargetPattern k4p2 = parse_pattern("K:4-P2");
    CHECK(check_placement_property(DegreeSequence({3, 3, 3, 3}), k4p2));
    CHECK_THROWS_AS(check_placement_property(DegreeSequence({6, 1, 1, 1, 1, 1, 1}), k4p2),
                    PreconditionError);

    // triangle target via an empty H: a potentially K_3 sequence puts a
    // triangle on the degrees (3,2,2)
    TargetPattern triangle = build_pattern_custom(3, SimpleGraph::empty_graph(0));
    DegreeSequence seq({3, 2, 2, 2, 1});
    REQUIRE(is_potentially(seq, triangle).is_yes());
    CHECK(check_placement_property(seq, triangle));
}

TEST_CASE("potentially implies placement at small n") {
    for (int n = 4; n <= 6; ++n) {
        TargetPattern pattern = parse_pattern("K:4-P2");
        for (const auto& seq : all_graphic_sequences(n, 0, n * (n - 1))) {
            PotentialDecision d = is_potentially(seq, pattern);
            REQUIRE(d.outcome != Outcome::unknown);
            if (d.is_yes()) CHECK(check_placement_property(seq, pattern));
        }
    }
}

TEST_CASE("containment monotonicity across patterns, n <= 6") {
    TargetPattern p2 = parse_pattern("K:4-P2");
    TargetPattern k3 = parse_pattern("K:4-K3");
    for (int n = 4; n <= 6; ++n) {
        for (const auto& seq : all_graphic_sequences(n, 0, n * (n - 1))) {
            if (is_potentially(seq, p2).is_yes()) CHECK(is_potentially(seq, k3).is_yes());
        }
    }
}

TEST_CASE("agreement with raw mask enumeration at n = 5") {
    for (const char* text : {"K:4-P2", "K:4-T3star", "K:4-T3path", "K:4-K3"}) {
        TargetPattern pattern = parse_pattern(text);
        for (const auto& seq : all_graphic_sequences(5, 0, 20)) {
            PotentialDecision d = is_potentially(seq, pattern);
            REQUIRE(d.outcome != Outcome::unknown);
            CHECK(d.is_yes() == brute_potentially(seq, pattern));
        }
    }
}

TEST_CASE("fast-path combinator") {
    DegreeSequence seq({5, 3, 2, 2, 2, 2});
    TargetPattern p2 = parse_pattern("K:4-P2");
    PotentialDecision fast = decide_potentially(seq, p2);
    CHECK(fast.is_yes());
    CHECK(fast.method == "sufficient-condition:lemma3.1");
    CHECK(is_potentially(seq, p2).is_yes());

    // no predicate fires: falls back to the exhaustive sweep
    DegreeSequence plain({2, 2, 2, 2});
    PotentialDecision slow = decide_potentially(plain, parse_pattern("K:4-K3"));
    CHECK(slow.method == "exhaustive-search");
}

} // TEST_SUITE
