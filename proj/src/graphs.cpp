#include "degseq/graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace degseq {

namespace {

constexpr int kWordBits = 64;

inline int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

} // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), words_(word_count(n)) {
    if (n < 0) throw ValidationError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph SimpleGraph::cycle(int k) {
    if (k < 3) throw ValidationError("cycle needs at least 3 vertices");
    SimpleGraph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

SimpleGraph SimpleGraph::path(int vertices) {
    if (vertices < 1) throw ValidationError("path needs at least 1 vertex");
    SimpleGraph g(vertices);
    for (int v = 0; v + 1 < vertices; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::star(int n) {
    if (n < 1) throw ValidationError("star needs at least 1 vertex");
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ValidationError("vertex out of range");
    if (u == v) throw ValidationError("self-loop");
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_pair(u, v);
    return (adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
}

void SimpleGraph::add_edge(int u, int v) {
    check_pair(u, v);
    std::uint64_t& row = adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits];
    std::uint64_t bit = std::uint64_t{1} << (v % kWordBits);
    if (row & bit) return;
    row |= bit;
    adj_[static_cast<std::size_t>(v) * words_ + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
    ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_pair(u, v);
    std::uint64_t& row = adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits];
    std::uint64_t bit = std::uint64_t{1} << (v % kWordBits);
    if (!(row & bit)) return;
    row &= ~bit;
    adj_[static_cast<std::size_t>(v) * words_ + u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
    --edge_count_;
}

int SimpleGraph::degree(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex out of range");
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(adj_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

DegreeSequence SimpleGraph::degree_sequence() const { return DegreeSequence(degrees()); }

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
    SimpleGraph out(g.n() + h.n());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n() + u, g.n() + v);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) out.add_edge(u, g.n() + v);
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::optional<SimpleGraph> realize(const DegreeSequence& seq) {
    const int n = seq.size();
    if (n > 0 && seq.max_term() >= n)
        throw ValidationError("term exceeds n-1; sequence cannot be realized");
    if (seq.sigma() % 2 != 0) return std::nullopt;

    SimpleGraph g(n);
    std::vector<int> rem = seq.terms();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return rem[static_cast<std::size_t>(a)] > rem[static_cast<std::size_t>(b)]; });
        int v = order.empty() ? -1 : order.front();
        if (v < 0 || rem[static_cast<std::size_t>(v)] == 0) break;
        int need = rem[static_cast<std::size_t>(v)];
        rem[static_cast<std::size_t>(v)] = 0;
        for (std::size_t i = 1; i < order.size() && need > 0; ++i) {
            int w = order[i];
            if (rem[static_cast<std::size_t>(w)] == 0) break;  // sorted: nothing further has capacity
            g.add_edge(v, w);
            --rem[static_cast<std::size_t>(w)];
            --need;
        }
        if (need > 0) return std::nullopt;
    }
    return g;
}

// ---------------------------------------------------------------------------
// 2-switch sweep kernel. Graphs on n <= 16 vertices are packed as 128-bit
// upper-triangle edge masks.

namespace {

using Mask = unsigned __int128;

constexpr int kMaxSweepN = 16;

inline int ctz128(Mask m) {
    auto lo = static_cast<std::uint64_t>(m);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

inline int popcount128(Mask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
}

struct PairTable {
    int n = 0;
    int pairs = 0;
    std::array<std::array<int, kMaxSweepN>, kMaxSweepN> index{};
    std::array<std::pair<int, int>, kMaxSweepN * (kMaxSweepN - 1) / 2> pair_of{};

    explicit PairTable(int vertex_count) : n(vertex_count) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = pairs;
                index[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = pairs;
                pair_of[static_cast<std::size_t>(pairs)] = {u, v};
                ++pairs;
            }
    }

    Mask bit(int u, int v) const {
        return Mask{1} << index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
};

Mask mask_of(const SimpleGraph& g, const PairTable& table) {
    Mask m = 0;
    for (auto [u, v] : g.edges()) m |= table.bit(u, v);
    return m;
}

SimpleGraph graph_of(Mask m, const PairTable& table) {
    SimpleGraph g(table.n);
    while (m) {
        int b = ctz128(m);
        auto [u, v] = table.pair_of[static_cast<std::size_t>(b)];
        g.add_edge(u, v);
        m &= m - 1;
    }
    return g;
}

struct MaskHash {
    std::size_t operator()(Mask m) const noexcept {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        return mix(static_cast<std::uint64_t>(m)) ^ (mix(static_cast<std::uint64_t>(m >> 64)) << 1);
    }
};

struct QueueEntry {
    int score;
    std::uint64_t order;
    Mask mask;
    bool operator<(const QueueEntry& o) const {
        if (score != o.score) return score < o.score;   // higher score first
        return order > o.order;                          // then FIFO
    }
};

} // namespace

SweepStats sweep_realizations(const DegreeSequence& seq, const SweepOptions& opts,
                              const std::function<bool(const SimpleGraph&)>& visit) {
    const int n = seq.size();
    if (n > kMaxSweepN)
        throw ValidationError("realization sweep supports n <= 16");
    auto start = realize(seq);
    if (!start) throw ValidationError("sequence is not graphic");

    PairTable table(n);
    Mask focus_mask = 0;
    for (int u = 0; u < std::min(opts.focus_prefix, n); ++u)
        for (int v = u + 1; v < std::min(opts.focus_prefix, n); ++v) focus_mask |= table.bit(u, v);

    SweepStats stats;
    std::unordered_set<Mask, MaskHash> visited;
    visited.reserve(1024);
    std::priority_queue<QueueEntry> queue;
    std::uint64_t next_order = 0;

    auto enqueue = [&](Mask m) {
        stats.explored++;
        if (visit(graph_of(m, table))) {
            stats.stopped = true;
            return true;
        }
        queue.push({popcount128(m & focus_mask), next_order++, m});
        return false;
    };

    Mask start_mask = mask_of(*start, table);
    visited.insert(start_mask);
    if (enqueue(start_mask)) return stats;

    std::vector<int> edge_bits;
    while (!queue.empty()) {
        Mask current = queue.top().mask;
        queue.pop();

        edge_bits.clear();
        for (Mask m = current; m; m &= m - 1) edge_bits.push_back(ctz128(m));

        for (std::size_t i = 0; i < edge_bits.size(); ++i) {
            auto [a, b] = table.pair_of[static_cast<std::size_t>(edge_bits[i])];
            for (std::size_t j = i + 1; j < edge_bits.size(); ++j) {
                auto [c, d] = table.pair_of[static_cast<std::size_t>(edge_bits[j])];
                if (c == a || c == b || d == a || d == b) continue;
                const Mask removed = table.bit(a, b) | table.bit(c, d);
                const std::pair<int, int> swaps[2][2] = {{{a, c}, {b, d}}, {{a, d}, {b, c}}};
                for (const auto& sw : swaps) {
                    Mask added = table.bit(sw[0].first, sw[0].second) |
                                 table.bit(sw[1].first, sw[1].second);
                    if (current & added) continue;  // would create a parallel edge
                    Mask next = (current & ~removed) | added;
                    if (visited.size() >= opts.limit) {
                        if (!visited.contains(next)) {
                            stats.truncated = true;
                            return stats;
                        }
                        continue;
                    }
                    if (visited.insert(next).second && enqueue(next)) return stats;
                }
            }
        }
    }
    return stats;
}

RealizationSet all_realizations(const DegreeSequence& seq, std::size_t limit) {
    RealizationSet out;
    SweepOptions opts;
    opts.limit = limit;
    SweepStats stats = sweep_realizations(seq, opts, [&](const SimpleGraph& g) {
        out.graphs.push_back(g);
        return false;
    });
    out.truncated = stats.truncated;
    return out;
}

// ---------------------------------------------------------------------------
// Direct backtracking enumeration of realizations (independent of the
// 2-switch route): vertex u picks its neighbor set among v > u.

namespace {

struct DirectEnumerator {
    int n;
    std::vector<int> rem;
    SimpleGraph g;
    const std::function<bool(const SimpleGraph&)>* yield;
    bool stopped = false;

    bool feasible_from(int u) const {
        // Every remaining degree must be matchable among vertices > u, and
        // the remaining total must be even.
        int total = 0;
        int positive = 0;
        for (int v = u; v < n; ++v) {
            total += rem[static_cast<std::size_t>(v)];
            if (rem[static_cast<std::size_t>(v)] > 0) ++positive;
        }
        if (total % 2 != 0) return false;
        for (int v = u; v < n; ++v) {
            int cap = positive - (rem[static_cast<std::size_t>(v)] > 0 ? 1 : 0);
            if (rem[static_cast<std::size_t>(v)] > cap) return false;
        }
        return true;
    }

    void pick(int u, int candidate, int need) {
        if (stopped) return;
        if (need == 0) {
            vertex(u + 1);
            return;
        }
        for (int v = candidate; v <= n - need; ++v) {
            if (rem[static_cast<std::size_t>(v)] == 0) continue;
            --rem[static_cast<std::size_t>(v)];
            g.add_edge(u, v);
            pick(u, v + 1, need - 1);
            g.remove_edge(u, v);
            ++rem[static_cast<std::size_t>(v)];
            if (stopped) return;
        }
    }

    void vertex(int u) {
        if (stopped) return;
        if (u == n) {
            if ((*yield)(g)) stopped = true;
            return;
        }
        if (!feasible_from(u)) return;
        int need = rem[static_cast<std::size_t>(u)];
        rem[static_cast<std::size_t>(u)] = 0;
        pick(u, u + 1, need);
        rem[static_cast<std::size_t>(u)] = need;
    }
};

} // namespace

void enumerate_realizations_direct(const DegreeSequence& seq,
                                   const std::function<bool(const SimpleGraph&)>& yield) {
    const int n = seq.size();
    if (n > 0 && seq.max_term() >= n)
        throw ValidationError("term exceeds n-1; sequence cannot be realized");
    DirectEnumerator e{n, seq.terms(), SimpleGraph(n), &yield, false};
    e.vertex(0);
}

bool exists_realization_direct(const DegreeSequence& seq) {
    bool found = false;
    enumerate_realizations_direct(seq, [&](const SimpleGraph&) {
        found = true;
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Subgraph containment (non-induced), backtracking with degree pruning.

namespace {

struct EmbeddingSearch {
    const SimpleGraph* host;
    const SimpleGraph* pattern;
    std::vector<int> order;       // pattern vertices, most-constrained first
    std::vector<int> map;         // pattern vertex -> host vertex or -1
    std::vector<char> used;       // host vertex used
    const std::function<bool(const std::vector<int>&)>* on_found;
    bool stopped = false;

    void build_order() {
        const int pn = pattern->n();
        std::vector<char> placed(static_cast<std::size_t>(pn), 0);
        order.reserve(static_cast<std::size_t>(pn));
        for (int step = 0; step < pn; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order)
                    if (pattern->has_edge(u, v)) ++links;
                int deg = pattern->degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }
    }

    void extend(std::size_t depth) {
        if (stopped) return;
        if (depth == order.size()) {
            if ((*on_found)(map)) stopped = true;
            return;
        }
        const int p = order[depth];
        const int pdeg = pattern->degree(p);
        for (int h = 0; h < host->n(); ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            if (host->degree(h) < pdeg) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                int q = order[d];
                if (pattern->has_edge(p, q) && !host->has_edge(h, map[static_cast<std::size_t>(q)]))
                    ok = false;
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(p)] = h;
            used[static_cast<std::size_t>(h)] = 1;
            extend(depth + 1);
            used[static_cast<std::size_t>(h)] = 0;
            map[static_cast<std::size_t>(p)] = -1;
            if (stopped) return;
        }
    }
};

} // namespace

bool for_each_embedding(const SimpleGraph& host, const SimpleGraph& pattern,
                        const std::function<bool(const std::vector<int>&)>& fn) {
    if (pattern.n() > host.n()) return false;
    EmbeddingSearch s{&host, &pattern, {}, {}, {}, &fn, false};
    s.map.assign(static_cast<std::size_t>(pattern.n()), -1);
    s.used.assign(static_cast<std::size_t>(host.n()), 0);
    s.build_order();
    s.extend(0);
    return s.stopped;
}

std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    std::optional<std::vector<int>> found;
    for_each_embedding(host, pattern, [&](const std::vector<int>& m) {
        found = m;
        return true;
    });
    return found;
}

bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    return find_subgraph(host, pattern).has_value();
}

// ---------------------------------------------------------------------------
// Canonical forms and isomorphism.

namespace {

std::vector<std::uint64_t> upper_triangle_bits(const SimpleGraph& g, const std::vector<int>& order) {
    const int n = g.n();
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(word_count(n * (n - 1) / 2)), 0);
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                bits[static_cast<std::size_t>(b / kWordBits)] |= std::uint64_t{1} << (b % kWordBits);
    return bits;
}

void min_certificate(const SimpleGraph& g, std::vector<std::vector<int>>& blocks,
                     std::size_t block_index, std::vector<int>& order,
                     std::vector<std::uint64_t>& best, bool& has_best) {
    if (block_index == blocks.size()) {
        auto cert = upper_triangle_bits(g, order);
        if (!has_best || cert < best) {
            best = std::move(cert);
            has_best = true;
        }
        return;
    }
    auto& block = blocks[block_index];
    std::sort(block.begin(), block.end());
    std::size_t base = order.size();
    do {
        order.insert(order.end(), block.begin(), block.end());
        min_certificate(g, blocks, block_index + 1, order, best, has_best);
        order.resize(base);
    } while (std::next_permutation(block.begin(), block.end()));
}

} // namespace

CanonicalForm canonical_form(const SimpleGraph& g, CanonicalMode mode) {
    CanonicalForm form;
    form.mode = mode;
    form.n = g.n();
    if (mode == CanonicalMode::labeled) {
        std::vector<int> identity(static_cast<std::size_t>(g.n()));
        std::iota(identity.begin(), identity.end(), 0);
        form.certificate = upper_triangle_bits(g, identity);
        return form;
    }

    // Group vertices by degree (descending); the minimum edge string over all
    // degree-respecting orderings is an isomorphism invariant.
    std::vector<int> degs = g.degrees();
    std::vector<int> verts(static_cast<std::size_t>(g.n()));
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return degs[static_cast<std::size_t>(a)] > degs[static_cast<std::size_t>(b)];
    });
    std::vector<std::vector<int>> blocks;
    for (int v : verts) {
        if (blocks.empty() || degs[static_cast<std::size_t>(blocks.back().front())] !=
                                  degs[static_cast<std::size_t>(v)])
            blocks.emplace_back();
        blocks.back().push_back(v);
    }
    double perms = 1;
    for (const auto& block : blocks)
        for (std::size_t i = 2; i <= block.size(); ++i) perms *= static_cast<double>(i);
    if (perms > 2e7)
        throw ValidationError("unlabeled canonical form limited to small graphs");

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n()));
    std::vector<std::uint64_t> best;
    bool has_best = false;
    min_certificate(g, blocks, 0, order, best, has_best);
    form.certificate = std::move(best);
    return form;
}

namespace {

bool iso_extend(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& map,
                std::vector<char>& used, int v) {
    if (v == a.n()) return true;
    for (int w = 0; w < b.n(); ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = 1;
        if (iso_extend(a, b, map, used, v + 1)) return true;
        used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    std::vector<int> map(static_cast<std::size_t>(a.n()), -1);
    std::vector<char> used(static_cast<std::size_t>(a.n()), 0);
    return iso_extend(a, b, map, used, 0);
}

// ---------------------------------------------------------------------------
// Edge-list text form.

SimpleGraph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_label = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("n=", 0) == 0) {
            try {
                declared_n = std::stoi(first.substr(2));
            } catch (const std::exception&) {
                throw ValidationError("bad edge-list header '" + first + "'");
            }
            if (declared_n < 0) throw ValidationError("negative vertex count in header");
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ValidationError("bad edge-list token '" + first + "'");
        }
        if (!(ls >> v)) throw ValidationError("edge line with a single endpoint");
        std::string extra;
        if (ls >> extra) throw ValidationError("trailing tokens on edge line");
        if (u < 0 || v < 0) throw ValidationError("negative vertex label");
        if (u == v) throw ValidationError("self-loop in edge list");
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    int n = std::max(declared_n, max_label + 1);
    if (declared_n >= 0 && max_label >= declared_n)
        throw ValidationError("edge label exceeds declared vertex count");
    return SimpleGraph::from_edges(n, edges);
}

void write_edge_list(const SimpleGraph& g, std::ostream& out) {
    out << "n=" << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace degseq
