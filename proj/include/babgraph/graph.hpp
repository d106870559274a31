#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "babgraph/errors.hpp"

namespace bab {

/// Sorted, duplicate-free set of vertex indices. All set-valued results in
/// the library are canonical, so equality of results is structural equality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> vertices);

    /// Wraps a vector that is already sorted and duplicate-free.
    static VertexSet of_sorted(std::vector<int> vertices);
    static VertexSet from_mask(std::uint64_t mask);
    /// {0, 1, ..., n-1}
    static VertexSet full(int n);

    bool contains(int v) const;
    bool is_subset_of(const VertexSet& other) const;

    int size() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }
    int operator[](std::size_t i) const { return vertices_[i]; }

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    const std::vector<int>& values() const { return vertices_; }

    /// Bitmask view; requires every member < 64.
    std::uint64_t mask() const;

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

    bool operator==(const VertexSet&) const = default;
    /// Lexicographic order on the sorted vertex lists, used for witness
    /// tie-breaking.
    bool operator<(const VertexSet& other) const { return vertices_ < other.vertices_; }

private:
    std::vector<int> vertices_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Edges are stored as
/// normalized pairs (u < v) in sorted order; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    /// Parses the on-disk format: optional '#' comment lines, a header
    /// "n m", then exactly m lines "u v". Violations raise ParseError with
    /// the 1-based line number.
    static Graph parse(std::string_view text);

    /// Canonical text form: "n m" header followed by edges with u < v in
    /// lexicographic order. parse(serialize(g)) == g.
    std::string serialize() const;

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// Neighborhood of v as a bitmask; requires order() <= 64.
    std::uint64_t neighbor_mask(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Open neighborhood N(S) (may intersect S) or closed neighborhood
/// N[S] = N(S) ∪ S.
VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed);

/// Boundary vertices: members of S with at least one neighbor outside S.
VertexSet boundary_vertices(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> index_map;  // new index -> old index (increasing)
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

struct ComponentSplit {
    std::vector<VertexSet> components;  // ordered by smallest member
    int isolated_count = 0;
};

ComponentSplit components(const Graph& g);

/// Two-coloring if the graph is bipartite (absent otherwise). Canonical:
/// the lowest-index vertex of every connected component is placed in the
/// first class.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_edge(const Graph& g, int u, int v);

}  // namespace bab
