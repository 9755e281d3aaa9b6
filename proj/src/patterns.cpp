#include "degseq/patterns.hpp"

#include <charconv>
#include <fstream>

namespace degseq {

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ValidationError(std::string("bad ") + what + " '" + std::string(text) + "'");
    return value;
}

SimpleGraph h_for(PatternFamily family, int k) {
    switch (family) {
        case PatternFamily::path:
            if (k < 1) throw ValidationError("path family needs k >= 1");
            return SimpleGraph::path(k + 1);  // P_k is a path on k+1 vertices
        case PatternFamily::t3_path:
            return SimpleGraph::path(4);
        case PatternFamily::t3_star:
            return SimpleGraph::star(4);
        case PatternFamily::cycle:
            if (k < 3) throw ValidationError("cycle family needs k >= 3");
            return SimpleGraph::cycle(k);
        case PatternFamily::k3:
            return SimpleGraph::complete(3);
        case PatternFamily::custom:
            throw ValidationError("custom family needs an explicit H graph");
    }
    throw ValidationError("unknown pattern family");
}

} // namespace

std::string family_tag(PatternFamily family, int k) {
    switch (family) {
        case PatternFamily::path: return "P" + std::to_string(k);
        case PatternFamily::t3_path: return "T3path";
        case PatternFamily::t3_star: return "T3star";
        case PatternFamily::cycle: return "C" + std::to_string(k);
        case PatternFamily::k3: return "K3";
        case PatternFamily::custom: return "custom";
    }
    return "?";
}

TargetPattern build_pattern(int m, PatternFamily family, int k) {
    if (family == PatternFamily::custom)
        throw ValidationError("use build_pattern_custom for file-based H");
    SimpleGraph h = h_for(family, k);
    if (h.n() > m)
        throw ValidationError("H on " + std::to_string(h.n()) + " vertices does not fit in K_" +
                              std::to_string(m));
    TargetPattern p;
    p.m = m;
    p.family = family;
    p.k = k;
    p.h = h;
    p.graph = SimpleGraph::complete(m);
    for (auto [u, v] : h.edges()) p.graph.remove_edge(u, v);
    p.tag = family_tag(family, k);
    return p;
}

TargetPattern build_pattern_custom(int m, const SimpleGraph& h) {
    if (h.n() > m)
        throw ValidationError("H on " + std::to_string(h.n()) + " vertices does not fit in K_" +
                              std::to_string(m));
    TargetPattern p;
    p.m = m;
    p.family = PatternFamily::custom;
    p.k = h.n();
    p.h = h;
    p.graph = SimpleGraph::complete(m);
    for (auto [u, v] : h.edges()) p.graph.remove_edge(u, v);
    p.tag = "custom";
    return p;
}

SimpleGraph build_h_graph(std::string_view token) {
    if (token.rfind("file:", 0) == 0) {
        std::string path(token.substr(5));
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open H edge-list file '" + path + "'");
        return read_edge_list(in);
    }
    if (token == "T3path") return SimpleGraph::path(4);
    if (token == "T3star") return SimpleGraph::star(4);
    if (token == "K3") return SimpleGraph::complete(3);
    if (!token.empty() && token.front() == 'P')
        return h_for(PatternFamily::path, parse_int(token.substr(1), "path index"));
    if (!token.empty() && token.front() == 'C')
        return h_for(PatternFamily::cycle, parse_int(token.substr(1), "cycle length"));
    throw ValidationError("unknown family token '" + std::string(token) + "'");
}

TargetPattern parse_pattern(std::string_view text) {
    if (text.rfind("K:", 0) != 0)
        throw ValidationError("pattern must look like K:<m>-<family>, got '" + std::string(text) + "'");
    auto dash = text.find('-', 2);
    if (dash == std::string_view::npos)
        throw ValidationError("pattern is missing the family part: '" + std::string(text) + "'");
    int m = parse_int(text.substr(2, dash - 2), "clique order");
    std::string_view fam = text.substr(dash + 1);

    if (fam.rfind("file:", 0) == 0) {
        TargetPattern p = build_pattern_custom(m, build_h_graph(fam));
        p.tag = std::string(fam);
        return p;
    }
    if (fam == "T3path") return build_pattern(m, PatternFamily::t3_path);
    if (fam == "T3star") return build_pattern(m, PatternFamily::t3_star);
    if (fam == "K3") return build_pattern(m, PatternFamily::k3);
    if (!fam.empty() && fam.front() == 'P')
        return build_pattern(m, PatternFamily::path, parse_int(fam.substr(1), "path index"));
    if (!fam.empty() && fam.front() == 'C')
        return build_pattern(m, PatternFamily::cycle, parse_int(fam.substr(1), "cycle length"));
    throw ValidationError("unknown family token '" + std::string(fam) + "'");
}

bool validate_theorem13_class(const SimpleGraph& h, int k, int r) {
    if (h.n() != k)
        throw ValidationError("H has " + std::to_string(h.n()) + " vertices, claimed k = " +
                              std::to_string(k));
    if (k < 4 || k > r + 1) return false;
    // The trees on 4 vertices are exactly the path and the star.
    bool has_tree4 = contains_subgraph(h, SimpleGraph::path(4)) ||
                     contains_subgraph(h, SimpleGraph::star(4));
    if (!has_tree4) return false;
    return !contains_subgraph(h, SimpleGraph::complete(3));
}

} // namespace degseq
