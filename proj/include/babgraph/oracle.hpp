#pragma once

#include <cstddef>
#include <vector>

#include "babgraph/graph.hpp"
#include "babgraph/matching.hpp"

namespace bab::oracle {

/// Brute-force reference implementations. These deliberately avoid the
/// algorithms used by the main modules so the two can cross-check each
/// other; everything here is a subset scan or a plain dynamic program over
/// bitmasks and refuses instances past n = 20.

/// Independence number by dynamic programming over vertex masks.
int alpha_dp(const Graph& g);

/// Matching number by dynamic programming over vertex masks.
int matching_number_dp(const Graph& g);

/// Deficiency from the Tutte–Berge formula: max over S of
/// (odd components of G - S) - |S|.
int deficiency_tutte_berge(const Graph& g);

/// Critical difference by scanning all 2^n subsets.
int critical_difference_subsets(const Graph& g);

/// All maximum independent sets, by subset scan.
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

/// All critical independent sets (independent X with |X| - |N(X)| maximal
/// among independent sets), by subset scan.
std::vector<VertexSet> critical_independent_sets(const Graph& g);

/// Every maximum matching by raw backtracking over edges, with no pruning
/// beyond disjointness. Canonical order.
std::vector<Matching> all_maximum_matchings_raw(const Graph& g, std::size_t cap = 1'000'000);

/// Maximum tight subset of a_part by subset scan (requires |a_part| <= 20).
VertexSet max_tight_set_subsets(const Graph& g, const VertexSet& a_part, const VertexSet& i_part);

/// All tight subsets of a_part, by subset scan.
std::vector<VertexSet> tight_subsets(const Graph& g, const VertexSet& a_part,
                                     const VertexSet& i_part);

/// Number of isolated vertices of G - S.
int isolated_after_removal(const Graph& g, const VertexSet& s);

}  // namespace bab::oracle
