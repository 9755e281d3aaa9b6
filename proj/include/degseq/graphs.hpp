#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "degseq/sequences.hpp"

namespace degseq {

// Labeled simple undirected graph on vertices 0..n-1, adjacency stored as
// packed bit rows. No self-loops, no parallel edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph complete(int n);
    static SimpleGraph empty_graph(int n);
    static SimpleGraph cycle(int k);          // C_k, k >= 3
    static SimpleGraph path(int vertices);    // path on `vertices` vertices
    static SimpleGraph star(int n);           // K_{1,n-1}, center 0
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);      // idempotent; throws on loops / range
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;             // by vertex label
    DegreeSequence degree_sequence() const;       // sorted non-increasing

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    SimpleGraph induced(const std::vector<int>& vertices) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_pair(int u, int v) const;
    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> adj_;  // n_ rows of words_ 64-bit words
};

// Join G + H: disjoint union plus all edges between the two vertex sets.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

// Edge present iff absent in g.
SimpleGraph complement(const SimpleGraph& g);

// Deterministic realization with degree(i) = seq.term(i), built by laying
// off the largest remaining degree; nullopt iff seq is not graphic.
std::optional<SimpleGraph> realize(const DegreeSequence& seq);

inline constexpr std::size_t kDefaultRealizationLimit = 5'000'000;

struct SweepOptions {
    std::size_t limit = kDefaultRealizationLimit;
    // When > 0, graphs with more edges among vertices 0..focus_prefix-1 are
    // expanded first. The traversal still covers the whole space; only the
    // visit order changes.
    int focus_prefix = 0;
};

struct SweepStats {
    std::size_t explored = 0;
    bool truncated = false;
    bool stopped = false;  // visitor asked to stop
};

// Traverses every labeled realization of seq (degree(i) = term(i)) reachable
// by 2-switches from realize(seq) -- by 2-switch connectivity, all of them.
// The visitor returns true to stop the sweep. Requires n <= 16.
SweepStats sweep_realizations(const DegreeSequence& seq, const SweepOptions& opts,
                              const std::function<bool(const SimpleGraph&)>& visit);

struct RealizationSet {
    std::vector<SimpleGraph> graphs;
    bool truncated = false;
};

RealizationSet all_realizations(const DegreeSequence& seq,
                                std::size_t limit = kDefaultRealizationLimit);

// Independent route: enumerate labeled graphs with degree(i) = seq.term(i)
// directly by backtracking over adjacency choices, no 2-switches involved.
// The callback returns true to stop.
void enumerate_realizations_direct(const DegreeSequence& seq,
                                   const std::function<bool(const SimpleGraph&)>& yield);
bool exists_realization_direct(const DegreeSequence& seq);

// Non-induced subgraph containment: an injective vertex map sending every
// pattern edge to a host edge. Embedding maps pattern vertex -> host vertex.
std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);
bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);

// Visits embeddings until the callback returns true; returns whether it did.
bool for_each_embedding(const SimpleGraph& host, const SimpleGraph& pattern,
                        const std::function<bool(const std::vector<int>&)>& fn);

enum class CanonicalMode { labeled, unlabeled };

// Total-order key: equal labeled certificates iff identical edge sets, equal
// unlabeled certificates iff isomorphic. The unlabeled mode enumerates
// degree-respecting orderings and is intended for small graphs.
struct CanonicalForm {
    CanonicalMode mode = CanonicalMode::labeled;
    int n = 0;
    std::vector<std::uint64_t> certificate;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const SimpleGraph& g, CanonicalMode mode);

// Backtracking isomorphism test (degree-class pruned).
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Edge-list text: one "u v" per line, 0-indexed; blank lines and '#'
// comments ignored; optional "n=<count>" header declares isolated vertices.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(const SimpleGraph& g, std::ostream& out);

} // namespace degseq
