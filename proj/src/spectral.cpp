#include "babgraph/spectral.hpp"

#include <algorithm>

#include "babgraph/bab.hpp"

namespace bab {

ExactInt adjacency_determinant(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 1;
    std::vector<std::vector<ExactInt>> m(static_cast<std::size_t>(n),
                                         std::vector<ExactInt>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) {
        m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    ExactInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (m[uk][uk] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[static_cast<std::size_t>(r)][uk] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(m[uk], m[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            for (int j = k + 1; j < n; ++j) {
                auto uj = static_cast<std::size_t>(j);
                m[ui][uj] = (m[ui][uj] * m[uk][uk] - m[ui][uk] * m[uk][uj]) / prev;
            }
            m[ui][uk] = 0;
        }
        prev = m[uk][uk];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

namespace {

class SachsEnumerator {
public:
    SachsEnumerator(const Graph& g, std::size_t cap,
                    const std::function<bool(const SachsSubgraph&)>& visit)
        : g_(g), cap_(cap), visit_(visit), covered_(static_cast<std::size_t>(g.order()), 0) {}

    void run() { descend(); }

private:
    bool covered(int v) const { return covered_[static_cast<std::size_t>(v)] != 0; }

    void emit() {
        if (++count_ > cap_)
            throw GuardError("enumerate_sachs",
                             "more than " + std::to_string(cap_) + " Sachs subgraphs");
        if (!visit_(current_)) stop_ = true;
    }

    void descend() {
        if (stop_) return;
        int v = -1;
        for (int u = 0; u < g_.order(); ++u) {
            if (!covered(u)) {
                v = u;
                break;
            }
        }
        if (v < 0) {
            emit();
            return;
        }
        // cover the least uncovered vertex by a single edge ...
        covered_[static_cast<std::size_t>(v)] = 1;
        for (int w : g_.neighbors(v)) {
            if (covered(w)) continue;
            covered_[static_cast<std::size_t>(w)] = 1;
            current_.k2_edges.emplace_back(v, w);
            descend();
            current_.k2_edges.pop_back();
            covered_[static_cast<std::size_t>(w)] = 0;
            if (stop_) break;
        }
        // ... or by a cycle through it; v is the least vertex of any such
        // cycle, and the orientation is fixed by second < last
        if (!stop_) {
            path_.assign(1, v);
            cycle_dfs(v, v);
        }
        covered_[static_cast<std::size_t>(v)] = 0;
    }

    void cycle_dfs(int root, int at) {
        if (stop_) return;
        for (int w : g_.neighbors(at)) {
            if (stop_) return;
            if (w == root && path_.size() >= 3 && path_[1] < path_.back()) {
                current_.cycles.push_back(path_);
                auto saved_path = path_;
                descend();
                path_ = std::move(saved_path);
                current_.cycles.pop_back();
                continue;
            }
            if (w <= root || covered(w)) continue;
            covered_[static_cast<std::size_t>(w)] = 1;
            path_.push_back(w);
            cycle_dfs(root, w);
            path_.pop_back();
            covered_[static_cast<std::size_t>(w)] = 0;
        }
    }

    const Graph& g_;
    std::size_t cap_;
    const std::function<bool(const SachsSubgraph&)>& visit_;
    std::vector<char> covered_;
    std::vector<int> path_;
    SachsSubgraph current_;
    std::size_t count_ = 0;
    bool stop_ = false;
};

}  // namespace

void for_each_sachs(const Graph& g, std::size_t cap,
                    const std::function<bool(const SachsSubgraph&)>& visit) {
    SachsEnumerator(g, cap, visit).run();
}

std::vector<SachsSubgraph> enumerate_sachs(const Graph& g, std::size_t cap) {
    std::vector<SachsSubgraph> out;
    for_each_sachs(g, cap, [&](const SachsSubgraph& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

ExactInt sachs_sign(const Graph& g, const SachsSubgraph& s) {
    int exponent = g.order() - s.component_count();
    return (exponent % 2 == 0) ? ExactInt(1) : ExactInt(-1);
}

ExactInt sachs_expansion(const Graph& g, std::size_t cap) {
    ExactInt total = 0;
    for_each_sachs(g, cap, [&](const SachsSubgraph& s) {
        total += sachs_sign(g, s) * (ExactInt(1) << s.cycle_count());
        return true;
    });
    return total;
}

ExactInt sachs_weighted_sum(const Graph& g,
                            const std::function<ExactInt(const SachsSubgraph&)>& weight,
                            std::size_t cap) {
    ExactInt total = 0;
    for_each_sachs(g, cap, [&](const SachsSubgraph& s) {
        total += weight(s) * (ExactInt(1) << s.cycle_count());
        return true;
    });
    return total;
}

std::optional<SachsSubgraph> first_sachs_subgraph(const Graph& g, std::size_t cap) {
    std::optional<SachsSubgraph> out;
    for_each_sachs(g, cap, [&](const SachsSubgraph& s) {
        out = s;
        return false;
    });
    return out;
}

SachsExistence has_sachs_subgraph(const Graph& g, const Guards& guards) {
    const int n = g.order();
    if (n > guards.profile_enum_max_n)
        throw GuardError("has_sachs_subgraph", "order " + std::to_string(n) + " exceeds guard " +
                                                   std::to_string(guards.profile_enum_max_n));
    SachsExistence out;
    out.witness = first_sachs_subgraph(g);
    out.exists = out.witness.has_value();

    // Tutte-type route: i(G - S) <= |S| for every S, the empty set included
    bool tutte_ok = true;
    const std::uint64_t total = n > 0 ? (std::uint64_t{1} << n) : 1;
    for (std::uint64_t mask = 0; mask < total && tutte_ok; ++mask) {
        auto s = VertexSet::from_mask(mask);
        int isolated = 0;
        for (int v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            bool neighbor_left = false;
            for (int w : g.neighbors(v)) {
                if (!s.contains(w)) {
                    neighbor_left = true;
                    break;
                }
            }
            if (!neighbor_left) ++isolated;
        }
        if (isolated > s.size()) {
            tutte_ok = false;
            out.absence_certificate = s;
        }
    }

    bool ker_empty = critical_profile(g, guards).ker.empty();

    if (out.exists != tutte_ok || out.exists != ker_empty)
        throw Error("has_sachs_subgraph: the three routes disagree");
    return out;
}

DetFactorizationReport check_det_factorization(const Graph& g, const BABStructure& s,
                                               std::size_t cap) {
    DetFactorizationReport out;
    out.det_g = adjacency_determinant(g);
    auto block_det = [&](const VertexSet& block) {
        return adjacency_determinant(induced_subgraph(g, block).graph);
    };
    out.block_dets.push_back(block_det(s.b));
    for (const auto& p : s.parts) out.block_dets.push_back(block_det(p));
    for (const auto& d : out.block_dets) out.product *= d;
    out.equal = out.det_g == out.product;

    std::vector<int> block(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < s.parts.size(); ++i)
        for (int v : s.parts[i]) block[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    auto same_block = [&](const std::vector<int>& vs) {
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (block[static_cast<std::size_t>(vs[i])] != block[static_cast<std::size_t>(vs[0])])
                return false;
        return true;
    };
    try {
        for_each_sachs(g, cap, [&](const SachsSubgraph& h) {
            ++out.sachs_checked;
            for (auto [u, v] : h.k2_edges) {
                if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(v)])
                    out.no_crossing_components = false;
            }
            for (const auto& c : h.cycles)
                if (!same_block(c)) out.no_crossing_components = false;
            return true;
        });
    } catch (const GuardError&) {
        out.sachs_complete = false;
    }
    return out;
}

}  // namespace bab
