#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "babgraph/graph.hpp"
#include "babgraph/independence.hpp"

namespace bab {

/// All determinant arithmetic is exact; no floating point in this module.
using ExactInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultSachsCap = 1'000'000;

/// Spanning subgraph whose components are single edges or cycles.
struct SachsSubgraph {
    std::vector<std::pair<int, int>> k2_edges;
    std::vector<std::vector<int>> cycles;  // canonical vertex sequences

    int component_count() const {
        return static_cast<int>(k2_edges.size() + cycles.size());
    }
    int cycle_count() const { return static_cast<int>(cycles.size()); }
};

/// det(A(G)) by fraction-free (Bareiss) elimination over exact integers.
/// det of the empty graph is 1.
ExactInt adjacency_determinant(const Graph& g);

/// Every spanning Sachs subgraph exactly once, components ordered by least
/// vertex. GuardError past the cap.
std::vector<SachsSubgraph> enumerate_sachs(const Graph& g, std::size_t cap = kDefaultSachsCap);

/// Visitor form of the enumeration; returning false stops early.
void for_each_sachs(const Graph& g, std::size_t cap,
                    const std::function<bool(const SachsSubgraph&)>& visit);

/// Sum over Sachs subgraphs of (-1)^(n - p(H)) * 2^(c(H)); the permutation
/// expansion of the determinant, so this equals adjacency_determinant.
ExactInt sachs_expansion(const Graph& g, std::size_t cap = kDefaultSachsCap);

/// Sum of weight(S) * 2^(c(S)); with the permutation sign as weight this
/// reproduces sachs_expansion.
ExactInt sachs_weighted_sum(const Graph& g,
                            const std::function<ExactInt(const SachsSubgraph&)>& weight,
                            std::size_t cap = kDefaultSachsCap);

ExactInt sachs_sign(const Graph& g, const SachsSubgraph& s);

/// Existence, decided by three mutually cross-checking routes: direct
/// enumeration (witness), the condition i(G - S) <= |S| for every S
/// (violating S as certificate of absence), and ker(G) == emptyset.
/// Disagreement between the routes raises Error.
struct SachsExistence {
    bool exists = false;
    std::optional<SachsSubgraph> witness;
    std::optional<VertexSet> absence_certificate;  // S with i(G-S) > |S|
};

SachsExistence has_sachs_subgraph(const Graph& g, const Guards& guards = {});

/// Enumeration-only existence probe (no size guard beyond the cap), used
/// where only a witness is needed.
std::optional<SachsSubgraph> first_sachs_subgraph(const Graph& g,
                                                  std::size_t cap = kDefaultSachsCap);

struct BABStructure;

/// det(G) against det(B) * prod det(G_i), all sides computed independently
/// by Bareiss elimination, plus the structural form: no Sachs component of
/// G crosses the partition {V(B), V(G_1), ...}.
struct DetFactorizationReport {
    ExactInt det_g = 0;
    std::vector<ExactInt> block_dets;  // B first, then the parts in order
    ExactInt product = 1;
    bool equal = false;
    bool no_crossing_components = true;
    std::size_t sachs_checked = 0;
    bool sachs_complete = true;  // enumeration finished within the cap
};

DetFactorizationReport check_det_factorization(const Graph& g, const BABStructure& s,
                                               std::size_t cap = kDefaultSachsCap);

}  // namespace bab
