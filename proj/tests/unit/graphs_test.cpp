#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "degseq/graphs.hpp"

using namespace degseq;
using testsupport::brute_contains;
using testsupport::for_all_graphs;

namespace {

std::set<std::vector<std::pair<int, int>>> edge_sets(const std::vector<SimpleGraph>& graphs) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& g : graphs) out.insert(g.edges());
    return out;
}

} // namespace

TEST_SUITE("graphs") {

TEST_CASE("basic construction and invariants") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // idempotent
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    g.remove_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), ValidationError);
    CHECK_THROWS_AS(g.add_edge(0, 4), ValidationError);
    CHECK(SimpleGraph::complete(5).edge_count() == 10);
    CHECK(SimpleGraph::cycle(5).degree_sequence().terms() == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(SimpleGraph::star(5).degree_sequence().terms() == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(SimpleGraph::path(4).edge_count() == 3);
}

TEST_CASE("realize examples") {
    auto triangle = realize(DegreeSequence({2, 2, 2}));
    REQUIRE(triangle.has_value());
    CHECK(triangle->edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    CHECK_FALSE(realize(DegreeSequence({1, 1, 1})).has_value());

    auto g = realize(DegreeSequence({3, 2, 2, 1}));
    REQUIRE(g.has_value());
    CHECK(g->degree_sequence().terms() == std::vector<int>{3, 2, 2, 1});

    CHECK_THROWS_AS(realize(DegreeSequence({9, 1})), ValidationError);
}

TEST_CASE("realize assigns degree(i) = term(i) on every graphic sequence, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& seq : all_graphic_sequences(n, 0, n * (n - 1))) {
            auto g = realize(seq);
            REQUIRE(g.has_value());
            CHECK(g->degrees() == seq.terms());
        }
    }
}

TEST_CASE("all_realizations counts") {
    CHECK(all_realizations(DegreeSequence({2, 2, 2})).graphs.size() == 1);
    CHECK(all_realizations(DegreeSequence({4, 1, 1, 1, 1})).graphs.size() == 1);
    CHECK(all_realizations(DegreeSequence({2, 2, 2, 2})).graphs.size() == 3);
    CHECK(all_realizations(DegreeSequence({2, 2, 2, 2, 2, 2})).graphs.size() == 70);
}

TEST_CASE("2-switch closure equals direct enumeration, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& seq : all_graphic_sequences(n, 0, n * (n - 1))) {
            RealizationSet swept = all_realizations(seq);
            REQUIRE_FALSE(swept.truncated);
            std::vector<SimpleGraph> direct;
            enumerate_realizations_direct(seq, [&](const SimpleGraph& g) {
                direct.push_back(g);
                return false;
            });
            CHECK(edge_sets(swept.graphs) == edge_sets(direct));
            CHECK(swept.graphs.size() == direct.size());
        }
    }
}

TEST_CASE("sweep truncation and determinism") {
    RealizationSet cut = all_realizations(DegreeSequence({2, 2, 2, 2, 2, 2}), 10);
    CHECK(cut.truncated);
    CHECK(cut.graphs.size() <= 11);

    auto a = all_realizations(DegreeSequence({3, 3, 2, 2, 2, 2}));
    auto b = all_realizations(DegreeSequence({3, 3, 2, 2, 2, 2}));
    REQUIRE(a.graphs.size() == b.graphs.size());
    for (std::size_t i = 0; i < a.graphs.size(); ++i) CHECK(a.graphs[i] == b.graphs[i]);

    CHECK_THROWS_AS(all_realizations(DegreeSequence({3, 3, 1, 1})), ValidationError);
}

TEST_CASE("containment examples") {
    SimpleGraph k4 = SimpleGraph::complete(4);
    SimpleGraph k4_minus_p2 = k4;
    k4_minus_p2.remove_edge(0, 1);
    k4_minus_p2.remove_edge(1, 2);
    CHECK(contains_subgraph(k4, k4_minus_p2));
    CHECK_FALSE(contains_subgraph(SimpleGraph::star(7), SimpleGraph::path(4)));
    CHECK_FALSE(contains_subgraph(SimpleGraph::cycle(6), SimpleGraph::complete(3)));

    auto embedding = find_subgraph(k4, k4_minus_p2);
    REQUIRE(embedding.has_value());
    for (auto [u, v] : k4_minus_p2.edges())
        CHECK(k4.has_edge((*embedding)[static_cast<std::size_t>(u)],
                          (*embedding)[static_cast<std::size_t>(v)]));
}

TEST_CASE("containment agrees with the plain brute-force check") {
    std::vector<SimpleGraph> patterns = {SimpleGraph::path(4), SimpleGraph::star(4),
                                         SimpleGraph::complete(3), SimpleGraph::cycle(4),
                                         SimpleGraph::cycle(5)};
    // triangle plus isolated vertex: an isolated pattern vertex must bind too
    SimpleGraph tri_iso(4);
    tri_iso.add_edge(1, 2);
    tri_iso.add_edge(1, 3);
    tri_iso.add_edge(2, 3);
    patterns.push_back(tri_iso);

    for_all_graphs(5, [&](const SimpleGraph& host) {
        for (const auto& p : patterns)
            CHECK(contains_subgraph(host, p) == brute_contains(host, p));
    });

    // sampled 7-vertex hosts
    RealizationSet sample = all_realizations(DegreeSequence({4, 3, 3, 2, 2, 2, 2}), 200);
    for (const auto& host : sample.graphs)
        for (const auto& p : patterns)
            CHECK(contains_subgraph(host, p) == brute_contains(host, p));
}

TEST_CASE("join and complement") {
    CHECK(join(SimpleGraph::complete(1), SimpleGraph::empty_graph(4)).degree_sequence().terms() ==
          std::vector<int>{4, 1, 1, 1, 1});
    CHECK(join(SimpleGraph::complete(2), SimpleGraph::empty_graph(3)).degree_sequence().terms() ==
          std::vector<int>{4, 4, 2, 2, 2});
    CHECK(join(SimpleGraph::empty_graph(1), SimpleGraph::empty_graph(1)).edge_count() == 1);

    CHECK(complement(SimpleGraph::complete(3)).edge_count() == 0);
    CHECK(complement(SimpleGraph::empty_graph(5)) == SimpleGraph::complete(5));
    SimpleGraph c4_complement = complement(SimpleGraph::cycle(4));
    CHECK(c4_complement.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    for_all_graphs(4, [&](const SimpleGraph& g) { CHECK(complement(complement(g)) == g); });
}

TEST_CASE("join degree law") {
    std::vector<SimpleGraph> smalls = {SimpleGraph::empty_graph(2), SimpleGraph::path(3),
                                       SimpleGraph::complete(3), SimpleGraph::cycle(4)};
    for (const auto& g : smalls) {
        for (const auto& h : smalls) {
            std::vector<int> expect;
            for (int v = 0; v < g.n(); ++v) expect.push_back(g.degree(v) + h.n());
            for (int v = 0; v < h.n(); ++v) expect.push_back(h.degree(v) + g.n());
            std::sort(expect.begin(), expect.end(), std::greater<int>());
            CHECK(join(g, h).degree_sequence().terms() == expect);
        }
    }
}

TEST_CASE("labeled canonical form identifies edge sets") {
    std::map<CanonicalForm, std::vector<SimpleGraph>> groups;
    for_all_graphs(4, [&](const SimpleGraph& g) {
        groups[canonical_form(g, CanonicalMode::labeled)].push_back(g);
    });
    CHECK(groups.size() == 64);  // 2^C(4,2) distinct edge sets
    for (const auto& [form, members] : groups)
        for (const auto& g : members) CHECK(g == members.front());
}

TEST_CASE("unlabeled canonical form identifies isomorphism classes, n <= 5") {
    for (int n = 4; n <= 5; ++n) {
        std::vector<SimpleGraph> representatives;
        std::map<CanonicalForm, std::size_t> class_of_cert;
        for_all_graphs(n, [&](const SimpleGraph& g) {
            CanonicalForm cert = canonical_form(g, CanonicalMode::unlabeled);
            std::size_t found = representatives.size();
            for (std::size_t i = 0; i < representatives.size(); ++i)
                if (isomorphic(g, representatives[i])) {
                    found = i;
                    break;
                }
            if (found == representatives.size()) representatives.push_back(g);
            auto [it, fresh] = class_of_cert.emplace(cert, found);
            if (!fresh) CHECK(it->second == found);  // same certificate, same class
        });
        CHECK(class_of_cert.size() == representatives.size());  // distinct certs per class
    }
}

TEST_CASE("unlabeled canonical form on sampled realization sets, n = 6, 7") {
    for (const char* text : {"3,3,2,2,2,2", "4,3,3,2,2,2,2"}) {
        RealizationSet set = all_realizations(DegreeSequence::parse(text), 400);
        const auto& graphs = set.graphs;
        std::vector<CanonicalForm> certs;
        certs.reserve(graphs.size());
        for (const auto& g : graphs) certs.push_back(canonical_form(g, CanonicalMode::unlabeled));
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                CHECK((certs[i] == certs[j]) == isomorphic(graphs[i], graphs[j]));
    }
}

TEST_CASE("isomorphic basics") {
    CHECK(isomorphic(SimpleGraph::cycle(5), SimpleGraph::cycle(5)));
    SimpleGraph relabeled(5);
    relabeled.add_edge(0, 2);
    relabeled.add_edge(2, 4);
    relabeled.add_edge(4, 1);
    relabeled.add_edge(1, 3);
    relabeled.add_edge(3, 0);
    CHECK(isomorphic(SimpleGraph::cycle(5), relabeled));
    CHECK_FALSE(isomorphic(SimpleGraph::path(4), SimpleGraph::star(4)));
}

TEST_CASE("edge-list round trip") {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    std::stringstream buffer;
    write_edge_list(g, buffer);
    SimpleGraph back = read_edge_list(buffer);
    CHECK(back == g);

    std::istringstream with_comments("# a graph\nn=4\n0 1\n\n2 3  # tail comment\n");
    SimpleGraph parsed = read_edge_list(with_comments);
    CHECK(parsed.n() == 4);
    CHECK(parsed.edge_count() == 2);

    std::istringstream bare("0 2\n");
    CHECK(read_edge_list(bare).n() == 3);

    std::istringstream empty_decl("n=0\n");
    CHECK(read_edge_list(empty_decl).n() == 0);

    std::istringstream loop("1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), ValidationError);
    std::istringstream dangling("1\n");
    CHECK_THROWS_AS(read_edge_list(dangling), ValidationError);
    std::istringstream overflow("n=2\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(overflow), ValidationError);
}

} // TEST_SUITE
