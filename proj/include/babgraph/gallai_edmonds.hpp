#pragma once

#include <optional>
#include <string>
#include <vector>

#include "babgraph/graph.hpp"
#include "babgraph/matching.hpp"

namespace bab {

/// The Gallai–Edmonds triple plus the refinements used throughout:
/// X = isolated vertices of G[D], Y = D - X. The C-part 2-coloring is
/// present only when G[C] happens to be bipartite.
struct GEDecomposition {
    VertexSet D;  // vertices missed by some maximum matching
    VertexSet A;  // N(D) - D
    VertexSet C;  // the rest
    VertexSet X;  // isolated vertices of G[D]
    VertexSet Y;  // D - X
    std::vector<VertexSet> d_components;
    std::optional<std::pair<VertexSet, VertexSet>> c_bipartition;
};

/// D via n+1 maximum-matching calls: v in D iff mu(G - v) == mu(G).
GEDecomposition gallai_edmonds(const Graph& g);

/// G - v has a perfect matching for every vertex v (requires odd order).
bool is_factor_critical(const Graph& g);

/// Checks the structure-theorem clauses against a maximum matching:
/// M covers C, matches A into distinct components of G[D], and restricts
/// to a near-perfect matching on every component of G[D]. Empty report
/// means all clauses hold.
std::vector<std::string> validate_ge(const Graph& g, const GEDecomposition& dec, const Matching& m);

}  // namespace bab
