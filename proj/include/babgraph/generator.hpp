#pragma once

#include <cstdint>
#include <string>

#include "babgraph/bab.hpp"
#include "babgraph/graph.hpp"

namespace bab {

/// Generator parameters. The key=value config form uses exactly these keys:
///   k=INT bipOrder=LO..HI cycleLen=LO..HI depth=INT crossing=FLOAT
///   allowDisconnected=BOOL
struct BabGenParams {
    int k = 1;
    int bip_order_lo = 2;
    int bip_order_hi = 6;
    int cycle_len_lo = 3;
    int cycle_len_hi = 7;
    int depth = 1;           // rounds of even-depth path attachment per part
    double crossing = 0.3;   // crossing-edge density over the permitted pairs
    bool allow_disconnected = false;

    static BabGenParams parse_config(const std::string& text);
    std::string to_config() const;
};

struct GeneratedBab {
    Graph graph;
    BABStructure structure;
};

/// Deterministic in (seed, params). Each part is an odd cycle with length-2
/// paths attached at even-depth vertices; that construction keeps the part
/// almost bipartite, non-König–Egerváry, with reach set equal to its whole
/// vertex set. The result is produced through assemble_bab, so nothing about
/// it is trusted without re-validation. Infeasible parameters raise
/// StructureError.
GeneratedBab generate_random_bab(std::uint64_t seed, const BabGenParams& params);

/// Seeded Erdős–Rényi-style general graph used by the search harness and
/// the randomized suites.
Graph random_graph(std::uint64_t seed, int max_n);

}  // namespace bab
