#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "babgraph/cycles.hpp"
#include "babgraph/graph.hpp"

namespace bab {

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

/// A matching with its involution view: partner(v) == v exactly for exposed
/// vertices.
class Matching {
public:
    Matching(const Graph& g, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// M(v): the matched partner, or v itself when exposed.
    int partner(int v) const { return partner_[static_cast<std::size_t>(v)]; }
    bool covers(int v) const { return partner(v) != v; }
    bool contains(int u, int v) const { return u != v && partner(u) == v; }
    VertexSet exposed() const;
    int order() const { return static_cast<int>(partner_.size()); }

    bool operator==(const Matching& other) const { return edges_ == other.edges_; }
    bool operator<(const Matching& other) const { return edges_ < other.edges_; }

private:
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
    std::vector<int> partner_;
};

/// Maximum matching via the blossom algorithm. Deterministic for a given
/// graph.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

/// def(G) = |V| - 2*mu(G).
int deficiency(const Graph& g);

/// Every maximum matching, in canonical (lexicographic edge-list) order.
/// Desk-scale: raises GuardError past the cap.
std::vector<Matching> all_maximum_matchings(const Graph& g,
                                            std::size_t cap = kDefaultMatchingCap);

/// Blossom-plus-stem certificate. The blossom is an odd cycle of length
/// 2k+1 carrying exactly k matching edges; the base is its unique vertex
/// with no matched cycle edge. The stem is an even-length alternating path
/// from the base to an exposed root, matched at the base end; an empty stem
/// means the base itself is exposed (root == base).
struct FlowerCert {
    std::vector<int> blossom;  // canonical cycle ordering
    int base = -1;
    std::vector<int> stem;  // base first, root last; empty stem stored as {base}
    int root = -1;
};

/// Two vertex-disjoint blossoms joined by an alternating path that starts
/// and ends with matched edges; the path endpoints are the two bases and no
/// internal path vertex lies in either blossom.
struct PosyCert {
    std::vector<int> blossom_a;
    std::vector<int> blossom_b;
    std::vector<int> path;  // base of blossom_a first, base of blossom_b last
};

using SterboulCert = std::variant<FlowerCert, PosyCert>;

/// Flower if any exists, else posy if any exists, else nullopt; within each
/// kind the lexicographically least certificate. Requires M maximum.
std::optional<SterboulCert> sterboul_certificate(const Graph& g, const Matching& m,
                                                 std::size_t cycle_cap = kDefaultCycleCap);

/// Existence-only fast path used by the property suites.
bool has_sterboul_certificate(const Graph& g, const Matching& m,
                              std::size_t cycle_cap = kDefaultCycleCap);

/// Variant for callers that already hold the odd-cycle inventory and know
/// the matching is maximum.
std::optional<SterboulCert> sterboul_certificate_with_cycles(const Graph& g, const Matching& m,
                                                             const CycleList& odd_cycles);

/// Independent re-validation of emitted certificates; empty report means
/// every invariant holds.
std::vector<std::string> validate_flower(const Graph& g, const Matching& m, const FlowerCert& f);
std::vector<std::string> validate_posy(const Graph& g, const Matching& m, const PosyCert& p);

/// alpha(G) + mu(G) == |V(G)|.
bool is_koenig_egervary(const Graph& g);

}  // namespace bab
