#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "babgraph/cycles.hpp"
#include "babgraph/gallai_edmonds.hpp"
#include "babgraph/graph.hpp"
#include "babgraph/independence.hpp"
#include "babgraph/matching.hpp"

namespace bab {

/// Union of the vertex sets of all flowers whose blossom is the given odd
/// cycle, over all maximum matchings.
struct ReachSet {
    std::vector<int> cycle;
    VertexSet vertices;
    std::size_t flower_count = 0;  // distinct (blossom, stem) pairs
};

ReachSet reach_set(const Graph& g, const std::vector<int>& odd_cycle,
                   std::size_t matching_cap = kDefaultMatchingCap);

struct FlowerDecomposition {
    std::vector<ReachSet> blocks;  // one per odd cycle
    VertexSet bipartite_rest;      // B(G) = V - union of reach sets
};

/// Requires an R-disjoint graph, or a graph with no odd cycle (then the
/// decomposition is the single bipartite block).
FlowerDecomposition flower_decomposition(const Graph& g,
                                         std::size_t cycle_cap = kDefaultCycleCap,
                                         std::size_t matching_cap = kDefaultMatchingCap);

struct RDisjointness {
    bool value = false;
    std::string evidence;  // offending pair / empty reach set on failure
    std::vector<ReachSet> reach_sets;
};

/// At least one odd cycle, every reach set nonempty, reach sets pairwise
/// disjoint.
RDisjointness is_r_disjoint(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap,
                            std::size_t matching_cap = kDefaultMatchingCap);

/// The (B, G_1, ..., G_k) decomposition in global vertex ids. Serialized
/// form: {"B":[...],"parts":[[...],...],"crossing":[[u,v],...],"k":k}.
struct BABStructure {
    VertexSet b;
    std::vector<VertexSet> parts;
    std::vector<std::vector<int>> part_cycles;  // unique odd cycle per part
    std::vector<std::pair<int, int>> crossing_edges;
    bool connected = false;

    int k() const { return static_cast<int>(parts.size()); }

    std::string to_json() const;
    static BABStructure from_json(const std::string& text, const Graph& g);
};

/// Full re-validation of a candidate structure against its graph; empty
/// report means every invariant holds. This recomputes bipartiteness,
/// odd-cycle counts, reach sets, the crossing-edge endpoint rules and the
/// Gallai–Edmonds decomposition of every block.
std::vector<std::string> validate_bab_structure(const Graph& g, const BABStructure& s,
                                                std::size_t matching_cap = kDefaultMatchingCap);

/// Crossing edge between blocks of an assembly: block 0 is B, block i >= 1
/// is parts[i-1]; vertices are block-local.
struct CrossingSpec {
    int block_u = 0;
    int u = 0;
    int block_v = 0;
    int v = 0;
};

/// Builds the disjoint union (B first, then the parts in order) plus the
/// crossing edges. Every precondition is verified: B bipartite, every part
/// almost bipartite, not König–Egerváry, with reach set equal to its whole
/// vertex set, and every crossing endpoint inside the permitted sets.
std::pair<Graph, BABStructure> assemble_bab(const Graph& b, const std::vector<Graph>& parts,
                                            const std::vector<CrossingSpec>& crossing);

struct Recognition {
    std::optional<BABStructure> structure;
    /// When no structure was found: true iff the search space was exhausted,
    /// so the absence is a proof of non-membership.
    bool exhaustive = true;
};

/// Bipartite graphs yield the k = 0 structure; R-disjoint graphs the flower
/// decomposition; anything else a bounded search over block assignments
/// guided by the odd-cycle components of G[D].
Recognition recognize_bab(const Graph& g, std::size_t assignment_cap = 1'000'000);

/// Nucleus / diadem / ker via the closed forms: nucleus = X, diadem =
/// X ∪ C, ker = X - N(S) for the maximum tight S ⊆ A against X.
struct FastCriticalSets {
    VertexSet nucleus, diadem, ker;
};

FastCriticalSets fast_critical_sets(const Graph& g, const BABStructure& s);

/// One pass/fail entry per checked identity.
struct TheoremCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

struct TheoremSuiteResult {
    std::vector<TheoremCheck> checks;
    bool oracle_mode = false;  // critical sets from enumeration (true) or fast path

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

/// Machine-checks the structural identities on a validated structure:
/// maximum-independent-set composition, corona ∪ A = V, core ⊆ nucleus,
/// 2α + k = |D| + |nucleus| + |C|, the corona/ker bound with its equality
/// flag, N[diadem] against Y, the inclusion chain, and the deficiency and
/// nucleus/A identities in the presence of a Sachs subgraph.
TheoremSuiteResult theorem_suite(const Graph& g, const BABStructure& s, const Guards& guards = {});

/// True iff the part is almost bipartite (exactly one odd cycle), not
/// König–Egerváry, and every vertex lies in some flower. On success the
/// unique odd cycle is stored through *cycle_out when non-null.
bool is_valid_bab_part(const Graph& part, std::vector<int>* cycle_out = nullptr,
                       std::size_t matching_cap = kDefaultMatchingCap);

}  // namespace bab
