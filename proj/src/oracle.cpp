#include "babgraph/oracle.hpp"

#include <algorithm>
#include <bit>

namespace bab::oracle {

namespace {

void check_guard(const Graph& g, const char* stage, int limit = 20) {
    if (g.order() > limit)
        throw GuardError(stage, "order " + std::to_string(g.order()) + " exceeds oracle guard " +
                                    std::to_string(limit));
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    return nbr;
}

bool mask_independent(const std::vector<std::uint64_t>& nbr, std::uint64_t mask) {
    std::uint64_t scan = mask;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (nbr[static_cast<std::size_t>(v)] & mask) return false;
    }
    return true;
}

std::uint64_t open_neighborhood(const std::vector<std::uint64_t>& nbr, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out |= nbr[static_cast<std::size_t>(v)];
    }
    return out;
}

}  // namespace

int alpha_dp(const Graph& g) {
    check_guard(g, "oracle::alpha_dp");
    const int n = g.order();
    if (n == 0) return 0;
    auto nbr = neighbor_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint8_t> best(static_cast<std::size_t>(total), 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint8_t skip = best[mask ^ bit];
        std::uint8_t take =
            static_cast<std::uint8_t>(1 + best[mask & ~bit & ~nbr[static_cast<std::size_t>(v)]]);
        best[mask] = std::max(skip, take);
    }
    return best[total - 1];
}

int matching_number_dp(const Graph& g) {
    check_guard(g, "oracle::matching_number_dp");
    const int n = g.order();
    if (n == 0) return 0;
    auto nbr = neighbor_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint8_t> best(static_cast<std::size_t>(total), 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint8_t value = best[mask ^ bit];
        std::uint64_t partners = nbr[static_cast<std::size_t>(v)] & mask;
        while (partners) {
            int w = std::countr_zero(partners);
            partners &= partners - 1;
            value = std::max(value, static_cast<std::uint8_t>(
                                        1 + best[mask ^ bit ^ (std::uint64_t{1} << w)]));
        }
        best[mask] = value;
    }
    return best[total - 1];
}

int deficiency_tutte_berge(const Graph& g) {
    check_guard(g, "oracle::deficiency_tutte_berge", 16);
    const int n = g.order();
    const std::uint64_t total = n > 0 ? (std::uint64_t{1} << n) : 1;
    int best = 0;
    for (std::uint64_t removed = 0; removed < total; ++removed) {
        auto keep = VertexSet::from_mask(((total - 1) & ~removed));
        auto sub = induced_subgraph(g, keep);
        int odd = 0;
        for (const auto& comp : components(sub.graph).components)
            if (comp.size() % 2 == 1) ++odd;
        best = std::max(best, odd - std::popcount(removed));
    }
    return best;
}

int critical_difference_subsets(const Graph& g) {
    check_guard(g, "oracle::critical_difference_subsets");
    const int n = g.order();
    if (n == 0) return 0;
    auto nbr = neighbor_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    int best = 0;
    for (std::uint64_t mask = 1; mask < total; ++mask)
        best = std::max(best,
                        std::popcount(mask) - std::popcount(open_neighborhood(nbr, mask)));
    return best;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    check_guard(g, "oracle::maximum_independent_sets", 16);
    const int n = g.order();
    auto nbr = neighbor_masks(g);
    const std::uint64_t total = n > 0 ? (std::uint64_t{1} << n) : 1;
    int alpha = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (mask_independent(nbr, mask)) alpha = std::max(alpha, std::popcount(mask));
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (std::popcount(mask) == alpha && mask_independent(nbr, mask))
            out.push_back(VertexSet::from_mask(mask));
    return out;
}

std::vector<VertexSet> critical_independent_sets(const Graph& g) {
    check_guard(g, "oracle::critical_independent_sets", 16);
    const int n = g.order();
    auto nbr = neighbor_masks(g);
    const std::uint64_t total = n > 0 ? (std::uint64_t{1} << n) : 1;
    int d = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!mask_independent(nbr, mask)) continue;
        d = std::max(d, std::popcount(mask) - std::popcount(open_neighborhood(nbr, mask)));
    }
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!mask_independent(nbr, mask)) continue;
        if (std::popcount(mask) - std::popcount(open_neighborhood(nbr, mask)) == d)
            out.push_back(VertexSet::from_mask(mask));
    }
    return out;
}

std::vector<Matching> all_maximum_matchings_raw(const Graph& g, std::size_t cap) {
    const auto& edges = g.edges();
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::pair<int, int>> cur;
    std::vector<std::vector<std::pair<int, int>>> all;
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == edges.size()) {
            if (cur.size() > best) {
                best = cur.size();
                all.clear();
            }
            if (cur.size() == best) {
                all.push_back(cur);
                if (all.size() > cap)
                    throw GuardError("oracle::all_maximum_matchings_raw", "cap exceeded");
            }
            return;
        }
        auto [u, v] = edges[idx];
        self(self, idx + 1);
        if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)]) {
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
            cur.push_back(edges[idx]);
            self(self, idx + 1);
            cur.pop_back();
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    for (auto& m : all) std::sort(m.begin(), m.end());
    std::sort(all.begin(), all.end());
    std::vector<Matching> out;
    out.reserve(all.size());
    for (auto& m : all) out.emplace_back(g, std::move(m));
    return out;
}

std::vector<VertexSet> tight_subsets(const Graph& g, const VertexSet& a_part,
                                     const VertexSet& i_part) {
    if (a_part.size() > 20)
        throw GuardError("oracle::tight_subsets", "a_part exceeds oracle guard");
    const auto& av = a_part.values();
    const std::uint64_t total = std::uint64_t{1} << av.size();
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < av.size(); ++i)
            if (mask >> i & 1) s.push_back(av[i]);
        auto set = VertexSet::of_sorted(std::move(s));
        if ((neighborhood(g, set, false) & i_part).size() == set.size()) out.push_back(set);
    }
    return out;
}

VertexSet max_tight_set_subsets(const Graph& g, const VertexSet& a_part, const VertexSet& i_part) {
    VertexSet best;
    for (const auto& s : tight_subsets(g, a_part, i_part))
        if (s.size() > best.size()) best = s;
    return best;
}

int isolated_after_removal(const Graph& g, const VertexSet& s) {
    int isolated = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        bool has_neighbor = false;
        for (int w : g.neighbors(v)) {
            if (!s.contains(w)) {
                has_neighbor = true;
                break;
            }
        }
        if (!has_neighbor) ++isolated;
    }
    return isolated;
}

}  // namespace bab::oracle
