#pragma once

#include <string>
#include <string_view>

#include "degseq/graphs.hpp"

namespace degseq {

// H families for target patterns K_m - H. Indexing follows the convention
// that P_k is a path on k+1 vertices and T_3 a tree on 4 vertices, so the
// two T3 variants (path, star) are listed separately.
enum class PatternFamily {
    path,       // P_k: path on k+1 vertices (P2 is Theorem 1.1's case, P1 is K_m - e)
    t3_path,    // tree on 4 vertices, path variant
    t3_star,    // tree on 4 vertices, star variant K_{1,3}
    cycle,      // C_k: cycle on k vertices
    k3,         // triangle
    custom,     // H loaded from an edge-list file
};

// K_m minus the edges of H, with H placed on the lowest labels 0..|V(H)|-1.
struct TargetPattern {
    int m = 0;
    PatternFamily family = PatternFamily::custom;
    int k = 0;          // family parameter (path/cycle index); 0 otherwise
    SimpleGraph h;      // H on vertices 0..h.n()-1
    SimpleGraph graph;  // K_m - E(H)
    std::string tag;    // e.g. "P2", "T3star", "C4", "custom"
};

// Renders the family token used in CLI text and cache file names.
std::string family_tag(PatternFamily family, int k);

TargetPattern build_pattern(int m, PatternFamily family, int k = 0);
TargetPattern build_pattern_custom(int m, const SimpleGraph& h);

// Builds just the H graph for a family token such as "P2", "T3path",
// "T3star", "C4", "K3", "P3" or "file:<path>".
SimpleGraph build_h_graph(std::string_view token);

// Pattern grammar "K:<m>-<family>", e.g. "K:4-P2", "K:6-C4",
// "K:5-file:h.edges".
TargetPattern parse_pattern(std::string_view text);

// Theorem 1.3 class: h has k vertices, r+1 >= k >= 4, h contains a tree on
// 4 vertices (a path on 4 vertices or K_{1,3}) and no triangle.
bool validate_theorem13_class(const SimpleGraph& h, int k, int r);

} // namespace degseq
