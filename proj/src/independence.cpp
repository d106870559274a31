#include "babgraph/independence.hpp"

#include <algorithm>
#include <bit>

#include "babgraph/matching.hpp"

namespace bab {

namespace {

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    return nbr;
}

class MisSolver {
public:
    explicit MisSolver(const std::vector<std::uint64_t>& nbr) : nbr_(nbr) {}

    int solve(std::uint64_t avail) {
        best_ = 0;
        descend(avail, 0);
        return best_;
    }

private:
    void descend(std::uint64_t avail, int cur) {
        // take isolated and pendant vertices greedily; both are always safe
        for (;;) {
            if (cur + std::popcount(avail) <= best_) return;
            if (!avail) {
                best_ = std::max(best_, cur);
                return;
            }
            std::uint64_t scan = avail;
            int pendant = -1;
            bool reduced = false;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                int deg = std::popcount(nbr_[static_cast<std::size_t>(v)] & avail);
                if (deg == 0) {
                    avail &= ~(std::uint64_t{1} << v);
                    ++cur;
                    reduced = true;
                    break;
                }
                if (deg == 1 && pendant < 0) pendant = v;
            }
            if (reduced) continue;
            if (pendant >= 0) {
                avail &= ~(nbr_[static_cast<std::size_t>(pendant)] | (std::uint64_t{1} << pendant));
                ++cur;
                continue;
            }
            break;
        }
        // branch on a maximum-degree vertex
        int pick = -1, max_deg = -1;
        std::uint64_t scan = avail;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int deg = std::popcount(nbr_[static_cast<std::size_t>(v)] & avail);
            if (deg > max_deg) {
                max_deg = deg;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        descend(avail & ~nbr_[static_cast<std::size_t>(pick)] & ~bit, cur + 1);
        descend(avail & ~bit, cur);
    }

    const std::vector<std::uint64_t>& nbr_;
    int best_ = 0;
};

void check_alpha_guard(const Graph& g, const Guards& guards) {
    if (g.order() > guards.alpha_max_n || g.order() > 64)
        throw GuardError("alpha", "order " + std::to_string(g.order()) + " exceeds guard " +
                                      std::to_string(std::min(guards.alpha_max_n, 64)));
}

}  // namespace

int alpha_value(const Graph& g, const Guards& guards) {
    check_alpha_guard(g, guards);
    if (g.order() == 0) return 0;
    auto nbr = neighbor_masks(g);
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.order()) - 1;
    return MisSolver(nbr).solve(all);
}

AlphaResult alpha_with_witness(const Graph& g, const Guards& guards) {
    check_alpha_guard(g, guards);
    if (g.order() == 0) return {0, VertexSet{}};
    auto nbr = neighbor_masks(g);
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.order()) - 1;
    MisSolver solver(nbr);
    const int target = solver.solve(all);
    // Greedy lexicographic completion: v joins whenever some maximum
    // independent set extends the current prefix with v.
    std::uint64_t chosen = 0, avail = all;
    int have = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(avail & bit)) continue;
        std::uint64_t rest = avail & ~bit & ~nbr[static_cast<std::size_t>(v)];
        if (have + 1 + solver.solve(rest) == target) {
            chosen |= bit;
            ++have;
            avail = rest;
        }
    }
    return {target, VertexSet::from_mask(chosen)};
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

CoreCorona core_corona(const Graph& g, const Guards& guards) {
    const int a = alpha_value(g, guards);
    std::vector<int> core, corona;
    for (int v = 0; v < g.order(); ++v) {
        auto rest = VertexSet::full(g.order()) - VertexSet({v});
        if (alpha_value(induced_subgraph(g, rest).graph, guards) == a - 1) core.push_back(v);
        auto closed = neighborhood(g, VertexSet({v}), true);
        auto outside = VertexSet::full(g.order()) - closed;
        if (1 + alpha_value(induced_subgraph(g, outside).graph, guards) == a) corona.push_back(v);
    }
    return {VertexSet::of_sorted(std::move(core)), VertexSet::of_sorted(std::move(corona))};
}

int set_difference_value(const Graph& g, const VertexSet& s) {
    return s.size() - neighborhood(g, s, false).size();
}

namespace {

// a precedes b in the lexicographic order of their sorted vertex lists
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t diff = a ^ b;
    return (diff & (~diff + 1) & a) != 0;
}

template <typename Visit>
void for_each_independent_mask(const std::vector<std::uint64_t>& nbr, int n, Visit visit) {
    // visit(set_mask, open_neighborhood_mask), in lexicographic order
    auto rec = [&](auto&& self, int from, std::uint64_t set, std::uint64_t forbidden,
                   std::uint64_t open_nbr) -> void {
        visit(set, open_nbr);
        for (int v = from; v < n; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (forbidden & bit) continue;
            self(self, v + 1, set | bit, forbidden | nbr[static_cast<std::size_t>(v)],
                 open_nbr | nbr[static_cast<std::size_t>(v)]);
        }
    };
    rec(rec, 0, 0, 0, 0);
}

}  // namespace

CriticalProfile critical_profile(const Graph& g, const Guards& guards) {
    const int n = g.order();
    if (n > guards.profile_enum_max_n)
        throw GuardError("critical_profile", "order " + std::to_string(n) + " exceeds guard " +
                                                 std::to_string(guards.profile_enum_max_n));
    auto nbr = neighbor_masks(g);

    CriticalProfile out;
    int d_ind = 0;  // d_G(empty) == 0
    int alpha = 0, max_crit_card = 0;
    std::uint64_t ker_acc = 0, diadem_acc = 0, nucleus_acc = 0;
    std::uint64_t core_acc = 0, corona_acc = 0;
    std::uint64_t mis_witness = 0, crit_witness = 0, max_crit_witness = 0;
    bool first = true;

    for_each_independent_mask(nbr, n, [&](std::uint64_t set, std::uint64_t open_nbr) {
        const int size = std::popcount(set);
        const int diff = size - std::popcount(open_nbr);
        if (first || diff > d_ind) {
            d_ind = diff;
            ker_acc = set;
            diadem_acc = set;
            nucleus_acc = set;
            max_crit_card = size;
            crit_witness = set;
            max_crit_witness = set;
        } else if (diff == d_ind) {
            ker_acc &= set;
            diadem_acc |= set;
            if (mask_lex_less(set, crit_witness)) crit_witness = set;
            if (size > max_crit_card) {
                max_crit_card = size;
                nucleus_acc = set;
                max_crit_witness = set;
            } else if (size == max_crit_card) {
                nucleus_acc &= set;
                if (mask_lex_less(set, max_crit_witness)) max_crit_witness = set;
            }
        }
        if (first || size > alpha) {
            alpha = size;
            core_acc = set;
            corona_acc = set;
            mis_witness = set;
        } else if (size == alpha) {
            core_acc &= set;
            corona_acc |= set;
            if (mask_lex_less(set, mis_witness)) mis_witness = set;
        }
        first = false;
    });

    // Independent route for the critical difference: all subsets.
    int d_all = 0;
    if (n > guards.subsets_max_n)
        throw GuardError("critical_difference", "order " + std::to_string(n) + " exceeds guard " +
                                                    std::to_string(guards.subsets_max_n));
    if (n > 0) {
        const std::uint64_t total = std::uint64_t{1} << n;
        std::vector<std::uint64_t> open(static_cast<std::size_t>(total));
        open[0] = 0;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            int low = std::countr_zero(mask);
            open[mask] = open[mask & (mask - 1)] | nbr[static_cast<std::size_t>(low)];
            int diff = std::popcount(mask) - std::popcount(open[mask]);
            d_all = std::max(d_all, diff);
        }
    }

    out.alpha = alpha;
    out.d = d_all;
    out.d_independent = d_ind;
    out.ker = VertexSet::from_mask(ker_acc);
    out.core = VertexSet::from_mask(core_acc);
    out.nucleus = VertexSet::from_mask(nucleus_acc);
    out.diadem = VertexSet::from_mask(diadem_acc);
    out.corona = VertexSet::from_mask(corona_acc);
    out.max_independent_witness = VertexSet::from_mask(mis_witness);
    out.critical_witness = VertexSet::from_mask(crit_witness);
    out.max_critical_witness = VertexSet::from_mask(max_crit_witness);
    return out;
}

namespace {

// Kuhn-style augmenting search on the bipartite subgraph between a_part
// and i_part. Returns the matched partner in i_part for each a_part index,
// or -1. Throws when a_part cannot be saturated.
struct TightContext {
    std::vector<int> a_vertices, i_vertices;
    std::vector<int> i_index_of;                // graph vertex -> index into i_vertices, else -1
    std::vector<std::vector<int>> adj;          // a index -> i indices
    std::vector<int> match_a;                   // a index -> i index
    std::vector<int> match_i;                   // i index -> a index
};

TightContext build_tight_context(const Graph& g, const VertexSet& a_part,
                                 const VertexSet& i_part) {
    if (!(a_part & i_part).empty())
        throw StructureError("max_tight_set: parts are not disjoint");
    TightContext ctx;
    ctx.a_vertices = a_part.values();
    ctx.i_vertices = i_part.values();
    ctx.i_index_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < ctx.i_vertices.size(); ++i)
        ctx.i_index_of[static_cast<std::size_t>(ctx.i_vertices[i])] = static_cast<int>(i);
    ctx.adj.resize(ctx.a_vertices.size());
    for (std::size_t a = 0; a < ctx.a_vertices.size(); ++a) {
        for (int w : g.neighbors(ctx.a_vertices[a])) {
            int idx = ctx.i_index_of[static_cast<std::size_t>(w)];
            if (idx >= 0) ctx.adj[a].push_back(idx);
        }
    }
    ctx.match_a.assign(ctx.a_vertices.size(), -1);
    ctx.match_i.assign(ctx.i_vertices.size(), -1);
    std::vector<char> seen;
    auto try_augment = [&](auto&& self, int a) -> bool {
        for (int i : ctx.adj[static_cast<std::size_t>(a)]) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            seen[static_cast<std::size_t>(i)] = 1;
            if (ctx.match_i[static_cast<std::size_t>(i)] == -1 ||
                self(self, ctx.match_i[static_cast<std::size_t>(i)])) {
                ctx.match_a[static_cast<std::size_t>(a)] = i;
                ctx.match_i[static_cast<std::size_t>(i)] = a;
                return true;
            }
        }
        return false;
    };
    for (std::size_t a = 0; a < ctx.a_vertices.size(); ++a) {
        seen.assign(ctx.i_vertices.size(), 0);
        if (!try_augment(try_augment, static_cast<int>(a)))
            throw StructureError(
                "max_tight_set: Hall condition fails, a_part cannot be matched into i_part");
    }
    return ctx;
}

}  // namespace

VertexSet max_tight_set(const Graph& g, const VertexSet& a_part, const VertexSet& i_part) {
    if (a_part.empty()) return {};
    TightContext ctx = build_tight_context(g, a_part, i_part);
    // Alternating reachability from the unmatched i_part vertices: an a_part
    // vertex reachable this way belongs to no tight set. The rest form the
    // unique maximum tight set.
    std::vector<char> reached_a(ctx.a_vertices.size(), 0), reached_i(ctx.i_vertices.size(), 0);
    std::vector<int> stack;
    for (std::size_t i = 0; i < ctx.i_vertices.size(); ++i) {
        if (ctx.match_i[i] == -1) {
            reached_i[i] = 1;
            stack.push_back(static_cast<int>(i));
        }
    }
    // Build reverse adjacency once: i index -> a indices.
    std::vector<std::vector<int>> radj(ctx.i_vertices.size());
    for (std::size_t a = 0; a < ctx.a_vertices.size(); ++a)
        for (int i : ctx.adj[a]) radj[static_cast<std::size_t>(i)].push_back(static_cast<int>(a));
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int a : radj[static_cast<std::size_t>(i)]) {
            if (reached_a[static_cast<std::size_t>(a)]) continue;
            reached_a[static_cast<std::size_t>(a)] = 1;
            int mi = ctx.match_a[static_cast<std::size_t>(a)];
            if (mi >= 0 && !reached_i[static_cast<std::size_t>(mi)]) {
                reached_i[static_cast<std::size_t>(mi)] = 1;
                stack.push_back(mi);
            }
        }
    }
    std::vector<int> tight;
    for (std::size_t a = 0; a < ctx.a_vertices.size(); ++a)
        if (!reached_a[a]) tight.push_back(ctx.a_vertices[a]);
    return VertexSet::of_sorted(std::move(tight));
}

bool ker_hall_check(const Graph& g, const VertexSet& candidate, const Guards& guards) {
    if (!is_independent_set(g, candidate))
        throw StructureError("ker_hall_check: candidate is not an independent set");
    // criticality against the subset-scan critical difference
    if (g.order() > guards.subsets_max_n)
        throw GuardError("ker_hall_check", "order exceeds subset guard");
    int d = 0;
    {
        auto nbr = neighbor_masks(g);
        const std::uint64_t total = g.order() > 0 ? (std::uint64_t{1} << g.order()) : 1;
        std::vector<std::uint64_t> open(static_cast<std::size_t>(total), 0);
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            int low = std::countr_zero(mask);
            open[mask] = open[mask & (mask - 1)] | nbr[static_cast<std::size_t>(low)];
            d = std::max(d, std::popcount(mask) - std::popcount(open[mask]));
        }
    }
    if (set_difference_value(g, candidate) != d) return false;

    auto nbhd = neighborhood(g, candidate, false);
    if (nbhd.size() > guards.subsets_max_n)
        throw GuardError("ker_hall_check", "neighborhood exceeds subset guard");
    const auto& nv = nbhd.values();
    const std::uint64_t total = std::uint64_t{1} << nv.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < nv.size(); ++i)
            if (mask >> i & 1) s.push_back(nv[i]);
        auto hit = neighborhood(g, VertexSet::of_sorted(std::move(s)), false) & candidate;
        if (static_cast<int>(std::popcount(mask)) >= hit.size()) return false;
    }
    return true;
}

}  // namespace bab
