#pragma once

#include <cstddef>
#include <vector>

#include "babgraph/graph.hpp"

namespace bab {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

struct Cycle {
    std::vector<int> vertices;  // canonical: starts at its minimum, second < last
    bool odd = false;
};

struct CycleList {
    std::vector<Cycle> cycles;

    std::size_t count() const { return cycles.size(); }
};

/// All simple odd cycles, each listed once up to rotation and reflection,
/// in canonical order (by length, then lexicographically). The parity
/// predicates that quantify over all cycles go through this inventory, so
/// the enumeration is exhaustive; instances past the cap raise GuardError.
CycleList enumerate_odd_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// True iff the sequence is a simple cycle of g (length >= 3, consecutive
/// pairs adjacent cyclically, vertices distinct).
bool is_simple_cycle(const Graph& g, const std::vector<int>& vertices);

/// Canonical rotation/reflection: minimum vertex first, smaller neighbor
/// second.
std::vector<int> canonical_cycle(const std::vector<int>& vertices);

}  // namespace bab
