#include "degseq/potential.hpp"

#include <algorithm>
#include <map>

namespace degseq {

namespace {

void require_graphic(const DegreeSequence& seq) {
    if (!is_graphic_eg(seq)) throw ValidationError("sequence is not graphic");
}

// All vertex subsets whose degree multiset (degree(i) = term(i) in any
// realization) equals the top `size` terms. With ties this is more than the
// prefix 0..size-1.
std::vector<std::vector<int>> top_degree_subsets(const DegreeSequence& seq, int size) {
    std::map<int, int> needed;
    for (int i = 0; i < size; ++i) ++needed[seq.term(i)];
    std::vector<int> candidates;
    for (int i = 0; i < seq.size(); ++i)
        if (needed.contains(seq.term(i))) candidates.push_back(i);

    std::vector<std::vector<int>> subsets;
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            bool ok = true;
            std::map<int, int> counts;
            for (int v : chosen) ++counts[seq.term(v)];
            for (auto [deg, cnt] : needed)
                if (counts[deg] != cnt) ok = false;
            if (ok) subsets.push_back(chosen);
            return;
        }
        if (candidates.size() - from < static_cast<std::size_t>(left)) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            self(self, i + 1, left - 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0, size);
    return subsets;
}

} // namespace

PotentialDecision is_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                                 std::size_t limit) {
    require_graphic(seq);
    if (pattern.m > seq.size())
        throw ValidationError("pattern on " + std::to_string(pattern.m) +
                              " vertices does not fit in n = " + std::to_string(seq.size()));

    PotentialDecision decision;
    decision.method = "exhaustive-search";
    SweepOptions opts;
    opts.limit = limit;
    opts.focus_prefix = pattern.m;
    SweepStats stats = sweep_realizations(seq, opts, [&](const SimpleGraph& g) {
        auto embedding = find_subgraph(g, pattern.graph);
        if (!embedding) return false;
        decision.witness = PotentialWitness{g, *embedding};
        return true;
    });
    decision.stats = {stats.explored, stats.truncated};
    decision.outcome = stats.stopped ? Outcome::yes
                       : stats.truncated ? Outcome::unknown
                                         : Outcome::no;
    return decision;
}

namespace {

// Clique of size `size` whose degree multiset matches the top `size` terms,
// found by extension over the multiset-compatible vertices.
bool find_top_clique(const SimpleGraph& g, const DegreeSequence& seq, int size,
                     std::vector<int>& out) {
    std::map<int, int> needed;
    for (int i = 0; i < size; ++i) ++needed[seq.term(i)];
    std::vector<int> candidates;
    for (int v = 0; v < g.n(); ++v)
        if (needed.contains(seq.term(v))) candidates.push_back(v);

    out.clear();
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(out.size()) == size) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            int v = candidates[i];
            auto it = needed.find(seq.term(v));
            if (it->second == 0) continue;
            bool adjacent = true;
            for (int u : out)
                if (!g.has_edge(u, v)) {
                    adjacent = false;
                    break;
                }
            if (!adjacent) continue;
            --it->second;
            out.push_back(v);
            if (self(self, i + 1)) return true;
            out.pop_back();
            ++it->second;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

PotentialDecision is_potentially_a(const DegreeSequence& seq, int r, std::size_t limit) {
    if (r < 1) throw ValidationError("potentially A_{r+1} needs r >= 1");
    require_graphic(seq);
    if (r + 1 > seq.size())
        throw ValidationError("potentially A_{r+1} needs n >= r+1");

    PotentialDecision decision;
    decision.method = "exhaustive-search";
    SweepOptions opts;
    opts.limit = limit;
    opts.focus_prefix = r + 1;
    std::vector<int> clique;
    SweepStats stats = sweep_realizations(seq, opts, [&](const SimpleGraph& g) {
        if (!find_top_clique(g, seq, r + 1, clique)) return false;
        decision.witness = PotentialWitness{g, clique};
        return true;
    });
    decision.stats = {stats.explored, stats.truncated};
    decision.outcome = stats.stopped ? Outcome::yes
                       : stats.truncated ? Outcome::unknown
                                         : Outcome::no;
    return decision;
}

// Hypothesis checks. Each returns false when its structural precondition on
// n fails.

bool predicate_thm21(const DegreeSequence& seq, int r) {
    if (r < 2) throw ValidationError("theorem 2.1 needs r >= 2");
    require_graphic(seq);
    if (seq.size() < r + 1) return false;
    if (seq.d(r + 1) < r) return false;
    for (int i = 1; i <= r - 1; ++i)
        if (seq.d(i) < 2 * r - i) return false;
    return true;
}

bool predicate_thm22(const DegreeSequence& seq, int r) {
    if (r < 2) throw ValidationError("theorem 2.2 needs r >= 2");
    require_graphic(seq);
    if (seq.size() < 2 * r + 2) return false;
    return seq.d(r + 1) >= r && seq.d(2 * r + 2) >= r - 1;
}

bool predicate_thm23(const DegreeSequence& seq, int r) {
    if (r < 2) throw ValidationError("theorem 2.3 needs r >= 2");
    require_graphic(seq);
    if (seq.size() < r + 1) return false;
    if (seq.d(r + 1) < r - 1) return false;
    for (int i = 1; i <= r - 1; ++i)
        if (seq.d(i) < 2 * r - i) return false;
    return true;
}

bool predicate_thm24(const DegreeSequence& seq, int r) {
    if (r < 2) throw ValidationError("theorem 2.4 needs r >= 2");
    require_graphic(seq);
    if (seq.size() < 2 * r + 2) return false;
    return seq.d(r - 1) >= r && seq.d(2 * r + 2) >= r - 1;
}

bool predicate_lemma31(const DegreeSequence& seq, int r) {
    if (r < 3) throw ValidationError("lemma 3.1 needs r >= 3");
    require_graphic(seq);
    if (seq.size() < r + 1) return false;
    if (seq.d(r) < r - 1 || seq.d(r + 1) < r - 2) return false;
    for (int i = 1; i <= r - 2; ++i)
        if (seq.d(i) < 2 * r - i) return false;
    return true;
}

bool predicate_lemma32(const DegreeSequence& seq, int r) {
    if (r < 3) throw ValidationError("lemma 3.2 needs r >= 3");
    require_graphic(seq);
    if (seq.size() < 2 * r + 2) return false;
    return seq.d(r - 2) >= r && seq.d(2 * r + 2) >= r - 1;
}

bool check_placement_property(const DegreeSequence& seq, const TargetPattern& pattern,
                              std::size_t limit) {
    require_graphic(seq);
    if (pattern.m > seq.size())
        throw ValidationError("pattern does not fit in n");

    const auto subsets = top_degree_subsets(seq, pattern.m);
    bool any_embedding = false;
    bool placed = false;
    SweepOptions opts;
    opts.limit = limit;
    opts.focus_prefix = pattern.m;
    SweepStats stats = sweep_realizations(seq, opts, [&](const SimpleGraph& g) {
        if (!any_embedding && contains_subgraph(g, pattern.graph)) any_embedding = true;
        for (const auto& subset : subsets) {
            if (contains_subgraph(g.induced(subset), pattern.graph)) {
                placed = true;
                return true;
            }
        }
        return false;
    });
    if (placed) return true;
    if (stats.truncated)
        throw PreconditionError("placement check truncated before the potentially "
                                "precondition could be established");
    if (!any_embedding)
        throw PreconditionError("sequence is not potentially pattern-graphic");
    return false;
}

PotentialDecision decide_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                                     std::size_t limit) {
    const int r = pattern.m - 1;
    // K_{r+1} - P_2
    if (r >= 3 && pattern.h.n() == 3 && pattern.h.edge_count() == 2) {
        if (predicate_lemma31(seq, r)) {
            PotentialDecision d;
            d.outcome = Outcome::yes;
            d.method = "sufficient-condition:lemma3.1";
            return d;
        }
        if (predicate_lemma32(seq, r)) {
            PotentialDecision d;
            d.outcome = Outcome::yes;
            d.method = "sufficient-condition:lemma3.2";
            return d;
        }
    }
    // K_{r+1} - e
    if (r >= 2 && pattern.h.edge_count() == 1) {
        if (predicate_thm23(seq, r)) {
            PotentialDecision d;
            d.outcome = Outcome::yes;
            d.method = "sufficient-condition:thm2.3";
            return d;
        }
        if (predicate_thm24(seq, r)) {
            PotentialDecision d;
            d.outcome = Outcome::yes;
            d.method = "sufficient-condition:thm2.4";
            return d;
        }
    }
    return is_potentially(seq, pattern, limit);
}

} // namespace degseq
