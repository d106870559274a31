#pragma once

#include <optional>
#include <vector>

#include "babgraph/graph.hpp"

namespace bab {

/// Desk-scale size guards. Operations refuse (GuardError) rather than
/// return unverified values past these limits.
struct Guards {
    int alpha_max_n = 48;         // branch-and-bound independence number
    int profile_enum_max_n = 16;  // independent-set enumeration
    int subsets_max_n = 20;       // full 2^n subset scans
};

/// Exact independence number (branch and bound with degree reductions).
int alpha_value(const Graph& g, const Guards& guards = {});

struct AlphaResult {
    int alpha = 0;
    VertexSet witness;  // lexicographically least maximum independent set
};

AlphaResult alpha_with_witness(const Graph& g, const Guards& guards = {});

bool is_independent_set(const Graph& g, const VertexSet& s);

struct CoreCorona {
    VertexSet core;    // intersection of all maximum independent sets
    VertexSet corona;  // union of all maximum independent sets
};

/// v in core  <=> alpha(G - v) == alpha(G) - 1;
/// v in corona <=> 1 + alpha(G - N[v]) == alpha(G).
CoreCorona core_corona(const Graph& g, const Guards& guards = {});

/// The full critical-set profile, computed from explicit enumeration:
/// d over all subsets, d_I over independent sets, and ker / nucleus /
/// diadem as intersections and unions of the (maximum) critical
/// independent sets.
struct CriticalProfile {
    int alpha = 0;
    int d = 0;              // critical difference, max |X| - |N(X)| over all X
    int d_independent = 0;  // the same max over independent sets
    VertexSet ker, core, nucleus, diadem, corona;
    VertexSet max_independent_witness;
    VertexSet critical_witness;      // lex-least critical independent set
    VertexSet max_critical_witness;  // lex-least maximum critical independent set
};

CriticalProfile critical_profile(const Graph& g, const Guards& guards = {});

/// d_G(S) = |S| - |N(S)| (open neighborhood).
int set_difference_value(const Graph& g, const VertexSet& s);

/// Unique maximum S subset of a_part with |N(S) ∩ i_part| == |S|.
/// Requires the Hall condition from a_part into i_part over the bipartite
/// subgraph of a_part–i_part edges; violations raise StructureError.
VertexSet max_tight_set(const Graph& g, const VertexSet& a_part, const VertexSet& i_part);

/// True iff candidate is a critical independent set with
/// |S| < |N(S) ∩ candidate| for every nonempty S ⊆ N(candidate);
/// equivalently, candidate == ker(G). Non-independent input raises
/// StructureError; a non-critical independent set yields false.
bool ker_hall_check(const Graph& g, const VertexSet& candidate, const Guards& guards = {});

}  // namespace bab
