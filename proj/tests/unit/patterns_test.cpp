#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "degseq/patterns.hpp"

using namespace degseq;

TEST_SUITE("patterns") {

TEST_CASE("catalog constructions") {
    TargetPattern p2 = build_pattern(4, PatternFamily::path, 2);
    CHECK(p2.graph.degree_sequence().terms() == std::vector<int>{3, 2, 2, 1});
    CHECK(p2.graph.edge_count() == 4);
    CHECK(p2.tag == "P2");

    TargetPattern k3 = build_pattern(5, PatternFamily::k3);
    CHECK(k3.graph.degree_sequence().terms() == std::vector<int>{4, 4, 2, 2, 2});

    TargetPattern t3star = build_pattern(4, PatternFamily::t3_star);
    CHECK(t3star.graph.edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});  // triangle + isolated 0

    TargetPattern t3path = build_pattern(4, PatternFamily::t3_path);
    CHECK(t3path.graph.edge_count() == 3);
    CHECK(isomorphic(t3path.graph, SimpleGraph::path(4)));

    TargetPattern e = build_pattern(4, PatternFamily::path, 1);  // K_4 - e
    CHECK(e.graph.edge_count() == 5);

    CHECK_THROWS_AS(build_pattern(3, PatternFamily::cycle, 4), ValidationError);
    CHECK_THROWS_AS(build_pattern(4, PatternFamily::cycle, 2), ValidationError);
}

TEST_CASE("pattern grammar") {
    CHECK(parse_pattern("K:4-P2").graph.degree_sequence().terms() ==
          std::vector<int>{3, 2, 2, 1});
    CHECK(parse_pattern("K:6-C4").m == 6);
    CHECK(parse_pattern("K:4-T3star").family == PatternFamily::t3_star);
    CHECK(parse_pattern("K:5-K3").family == PatternFamily::k3);
    CHECK(parse_pattern("K:4-P1").graph.edge_count() == 5);

    CHECK_THROWS_AS(parse_pattern("4-P2"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("K:4"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("K:4-Q7"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("K:3-C4"), ValidationError);  // H larger than m
}

TEST_CASE("file-based H") {
    auto dir = std::filesystem::temp_directory_path();
    auto file = dir / "degseq_pattern_test.edges";
    {
        std::ofstream out(file);
        out << "n=2\n0 1\n";  // H = single edge
    }
    TargetPattern p = parse_pattern("K:5-file:" + file.string());
    CHECK(p.m == 5);
    CHECK(p.h.edge_count() == 1);
    CHECK(p.graph.edge_count() == 9);  // K_5 - e

    auto empty_file = dir / "degseq_pattern_empty.edges";
    {
        std::ofstream out(empty_file);
        out << "n=0\n";
    }
    TargetPattern k3 = parse_pattern("K:3-file:" + empty_file.string());
    CHECK(k3.graph == SimpleGraph::complete(3));

    CHECK_THROWS_AS(parse_pattern("K:4-file:/nonexistent/h.edges"), ValidationError);
    std::filesystem::remove(file);
    std::filesystem::remove(empty_file);
}

TEST_CASE("theorem 1.3 class") {
    for (int k = 4; k <= 6; ++k) CHECK(validate_theorem13_class(SimpleGraph::cycle(k), k, k - 1));
    CHECK(validate_theorem13_class(SimpleGraph::cycle(4), 4, 3));
    CHECK_FALSE(validate_theorem13_class(SimpleGraph::cycle(5), 5, 3));  // k > r+1
    CHECK_FALSE(validate_theorem13_class(SimpleGraph::complete(3), 3, 3));
    CHECK(validate_theorem13_class(SimpleGraph::star(4), 4, 3));
    CHECK(validate_theorem13_class(SimpleGraph::path(4), 4, 3));
    // triangle with a pendant edge: has the tree but also the cycle
    SimpleGraph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(0, 2);
    paw.add_edge(1, 2);
    paw.add_edge(2, 3);
    CHECK_FALSE(validate_theorem13_class(paw, 4, 3));
    // two disjoint edges: no tree on 4 vertices
    SimpleGraph matching(4);
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    CHECK_FALSE(validate_theorem13_class(matching, 4, 3));
    CHECK_THROWS_AS(validate_theorem13_class(SimpleGraph::cycle(4), 5, 4), ValidationError);
}

TEST_CASE("both T3 variants are in the theorem class") {
    for (int r : {3, 4, 5}) {
        CHECK(validate_theorem13_class(build_pattern(r + 1, PatternFamily::t3_path).h, 4, r));
        CHECK(validate_theorem13_class(build_pattern(r + 1, PatternFamily::t3_star).h, 4, r));
    }
}

TEST_CASE("pattern graph is placement invariant, m <= 6") {
    struct Entry {
        PatternFamily family;
        int k;
    };
    const Entry entries[] = {{PatternFamily::path, 2},
                             {PatternFamily::t3_path, 0},
                             {PatternFamily::t3_star, 0},
                             {PatternFamily::k3, 0},
                             {PatternFamily::cycle, 4}};
    for (const auto& entry : entries) {
        for (int m = 4; m <= 6; ++m) {
            TargetPattern canonical = [&] {
                return build_pattern(m, entry.family, entry.k);
            }();
            if (canonical.h.n() > m) continue;
            const SimpleGraph& h = canonical.h;
            // every injective placement of H into the m labels
            std::vector<int> slot(static_cast<std::size_t>(h.n()));
            std::vector<char> used(static_cast<std::size_t>(m), 0);
            auto rec = [&](auto&& self, int i) -> void {
                if (i == h.n()) {
                    SimpleGraph placed = SimpleGraph::complete(m);
                    for (auto [u, v] : h.edges())
                        placed.remove_edge(slot[static_cast<std::size_t>(u)],
                                           slot[static_cast<std::size_t>(v)]);
                    CHECK(isomorphic(placed, canonical.graph));
                    return;
                }
                for (int s = 0; s < m; ++s) {
                    if (used[static_cast<std::size_t>(s)]) continue;
                    used[static_cast<std::size_t>(s)] = 1;
                    slot[static_cast<std::size_t>(i)] = s;
                    self(self, i + 1);
                    used[static_cast<std::size_t>(s)] = 0;
                }
            };
            rec(rec, 0);
        }
    }
}

TEST_CASE("monotone containment of K_{r+1}-K3 in K_{r+1}-P2") {
    for (int r : {3, 4, 5}) {
        TargetPattern p2 = build_pattern(r + 1, PatternFamily::path, 2);
        TargetPattern k3 = build_pattern(r + 1, PatternFamily::k3);
        CHECK(contains_subgraph(p2.graph, k3.graph));
    }
}

} // TEST_SUITE
