#include "babgraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "babgraph/independence.hpp"

namespace bab {

Matching::Matching(const Graph& g, std::vector<std::pair<int, int>> edges)
    : partner_(static_cast<std::size_t>(g.order())) {
    std::iota(partner_.begin(), partner_.end(), 0);
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v))
            throw StructureError("matching edge " + std::to_string(u) + " " + std::to_string(v) +
                                 " is not an edge of the graph");
        if (partner_[static_cast<std::size_t>(u)] != u || partner_[static_cast<std::size_t>(v)] != v)
            throw StructureError("matching edges are not pairwise disjoint");
        partner_[static_cast<std::size_t>(u)] = v;
        partner_[static_cast<std::size_t>(v)] = u;
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

VertexSet Matching::exposed() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (partner(v) == v) out.push_back(v);
    return VertexSet::of_sorted(std::move(out));
}

namespace {

// Classic label-based blossom algorithm; O(V^3).
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g),
          n_(g.order()),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_)),
          used_(static_cast<std::size_t>(n_)),
          in_blossom_(static_cast<std::size_t>(n_)) {}

    std::vector<int> solve() {
        // greedy warm start
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[static_cast<std::size_t>(w)] == -1) {
                    match_[static_cast<std::size_t>(v)] = w;
                    match_[static_cast<std::size_t>(w)] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            int end = find_augmenting_path(v);
            if (end != -1) augment(end);
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (int v = a;;) {
            v = base_[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = 1;
            if (match_[static_cast<std::size_t>(v)] == -1) break;
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
        for (int v = b;;) {
            v = base_[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(v)]) return v;
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!used_[static_cast<std::size_t>(i)]) {
                                used_[static_cast<std::size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    int mt = match_[static_cast<std::size_t>(to)];
                    used_[static_cast<std::size_t>(mt)] = 1;
                    q.push(mt);
                }
            }
        }
        return -1;
    }

    void augment(int end) {
        int v = end;
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    auto match = BlossomSolver(g).solve();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.order(); ++v) {
        int w = match[static_cast<std::size_t>(v)];
        if (w > v) edges.emplace_back(v, w);
    }
    return Matching(g, std::move(edges));
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

int deficiency(const Graph& g) { return g.order() - 2 * matching_number(g); }

std::vector<Matching> all_maximum_matchings(const Graph& g, std::size_t cap) {
    const int n = g.order();
    const int mu = matching_number(g);
    std::vector<std::vector<std::pair<int, int>>> found;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto residual_mu = [&](int from) {
        std::vector<int> free_vertices;
        for (int w = from; w < n; ++w)
            if (!used[static_cast<std::size_t>(w)]) free_vertices.push_back(w);
        auto sub = induced_subgraph(g, VertexSet::of_sorted(std::move(free_vertices)));
        return matching_number(sub.graph);
    };

    auto rec = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < n && used[static_cast<std::size_t>(v)]) ++v;
        if (v == n) {
            if (static_cast<int>(cur.size()) == mu) {
                found.push_back(cur);
                if (found.size() > cap)
                    throw GuardError("all_maximum_matchings",
                                     "more than " + std::to_string(cap) + " maximum matchings");
            }
            return;
        }
        int free_cnt = 0;
        for (int w = v; w < n; ++w)
            if (!used[static_cast<std::size_t>(w)]) ++free_cnt;
        if (static_cast<int>(cur.size()) + free_cnt / 2 < mu) return;
        if (free_cnt >= 10 && static_cast<int>(cur.size()) + residual_mu(v) < mu) return;

        used[static_cast<std::size_t>(v)] = 1;
        self(self, v + 1);
        for (int w : g.neighbors(v)) {
            if (w < v || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            cur.emplace_back(v, w);
            self(self, v + 1);
            cur.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        used[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end());
    std::vector<Matching> out;
    out.reserve(found.size());
    for (auto& edges : found) out.emplace_back(g, std::move(edges));
    return out;
}

namespace {

struct BlossomInfo {
    const Cycle* cycle;
    int base;
};

// cycle is an M-blossom iff it carries exactly (len-1)/2 matching edges;
// the base is then the unique cycle vertex with no matched cycle edge.
std::optional<int> blossom_base(const Matching& m, const Cycle& c) {
    const auto& vs = c.vertices;
    const std::size_t len = vs.size();
    std::vector<char> covered(len, 0);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < len; ++i) {
        int u = vs[i], v = vs[(i + 1) % len];
        if (m.contains(u, v)) {
            ++matched;
            covered[i] = 1;
            covered[(i + 1) % len] = 1;
        }
    }
    if (matched != len / 2) return std::nullopt;
    for (std::size_t i = 0; i < len; ++i)
        if (!covered[i]) return vs[i];
    return std::nullopt;  // unreachable for a valid odd cycle
}

class CertSearch {
public:
    CertSearch(const Graph& g, const Matching& m) : g_(g), m_(m), flag_(static_cast<std::size_t>(g.order()), 0) {}

    // Lexicographically least stem for the given blossom, or nullopt.
    std::optional<std::vector<int>> least_stem(const std::vector<int>& blossom, int base) {
        set_flags(blossom, kBlossomA);
        std::optional<std::vector<int>> out;
        if (!m_.covers(base)) {
            out = std::vector<int>{base};
        } else {
            int v1 = m_.partner(base);
            if (!flagged(v1)) {
                path_ = {base, v1};
                mark(base);
                mark(v1);
                if (stem_dfs(v1)) out = path_;
                for (int v : path_) unmark(v);
            }
        }
        clear_flags(blossom);
        return out;
    }

    // Lexicographically least alternating path between the two bases that
    // starts and ends with matched edges, or nullopt.
    std::optional<std::vector<int>> least_posy_path(const std::vector<int>& blossom_a, int base_a,
                                                    const std::vector<int>& blossom_b, int base_b) {
        std::optional<std::vector<int>> out;
        if (m_.covers(base_a)) {
            int v1 = m_.partner(base_a);
            if (v1 == base_b) {
                out = std::vector<int>{base_a, base_b};
            } else {
                set_flags(blossom_a, kBlossomA);
                set_flags(blossom_b, kBlossomA);
                if (!flagged(v1)) {
                    path_ = {base_a, v1};
                    mark(base_a);
                    mark(v1);
                    if (posy_dfs(v1, base_b)) out = path_;
                    for (int v : path_) unmark(v);
                }
                clear_flags(blossom_a);
                clear_flags(blossom_b);
            }
        }
        return out;
    }

private:
    static constexpr char kBlossomA = 1;
    static constexpr char kOnPath = 2;

    bool flagged(int v) const { return flag_[static_cast<std::size_t>(v)] != 0; }
    void mark(int v) { flag_[static_cast<std::size_t>(v)] |= kOnPath; }
    void unmark(int v) { flag_[static_cast<std::size_t>(v)] &= ~kOnPath; }
    void set_flags(const std::vector<int>& vs, char f) {
        for (int v : vs) flag_[static_cast<std::size_t>(v)] |= f;
    }
    void clear_flags(const std::vector<int>& vs) {
        for (int v : vs) flag_[static_cast<std::size_t>(v)] &= ~kBlossomA;
    }

    // path ends at an odd-position vertex w (arrived via a matched edge);
    // extend with one unmatched edge and, unless the new vertex is an
    // exposed root, with its matched edge.
    bool stem_dfs(int w) {
        for (int x : g_.neighbors(w)) {
            if (x == m_.partner(w) || flagged(x)) continue;
            mark(x);
            path_.push_back(x);
            if (!m_.covers(x)) return true;
            int y = m_.partner(x);
            if (!flagged(y)) {
                mark(y);
                path_.push_back(y);
                if (stem_dfs(y)) return true;
                path_.pop_back();
                unmark(y);
            }
            path_.pop_back();
            unmark(x);
        }
        return false;
    }

    bool posy_dfs(int w, int target) {
        for (int x : g_.neighbors(w)) {
            if (x == m_.partner(w) || flagged(x)) continue;
            if (!m_.covers(x)) continue;  // internal even vertex must be matched
            int y = m_.partner(x);
            if (y == target) {
                path_.push_back(x);
                path_.push_back(y);
                return true;
            }
            if (flagged(y)) continue;
            mark(x);
            mark(y);
            path_.push_back(x);
            path_.push_back(y);
            if (posy_dfs(y, target)) return true;
            path_.pop_back();
            path_.pop_back();
            unmark(y);
            unmark(x);
        }
        return false;
    }

    const Graph& g_;
    const Matching& m_;
    std::vector<char> flag_;
    std::vector<int> path_;
};

std::optional<SterboulCert> sterboul_search(const Graph& g, const Matching& m,
                                            const CycleList& odd_cycles) {
    std::vector<BlossomInfo> blossoms;
    for (const auto& c : odd_cycles.cycles) {
        if (auto base = blossom_base(m, c)) blossoms.push_back({&c, *base});
    }
    CertSearch search(g, m);
    for (const auto& b : blossoms) {
        if (auto stem = search.least_stem(b.cycle->vertices, b.base)) {
            FlowerCert f;
            f.blossom = b.cycle->vertices;
            f.base = b.base;
            f.stem = *stem;
            f.root = stem->back();
            return SterboulCert{std::move(f)};
        }
    }
    for (std::size_t i = 0; i < blossoms.size(); ++i) {
        for (std::size_t j = i + 1; j < blossoms.size(); ++j) {
            const auto& a = blossoms[i];
            const auto& b = blossoms[j];
            bool disjoint = true;
            for (int v : a.cycle->vertices) {
                if (std::find(b.cycle->vertices.begin(), b.cycle->vertices.end(), v) !=
                    b.cycle->vertices.end()) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            if (auto path = search.least_posy_path(a.cycle->vertices, a.base, b.cycle->vertices,
                                                   b.base)) {
                PosyCert p;
                p.blossom_a = a.cycle->vertices;
                p.blossom_b = b.cycle->vertices;
                p.path = *path;
                return SterboulCert{std::move(p)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SterboulCert> sterboul_certificate(const Graph& g, const Matching& m,
                                                 std::size_t cycle_cap) {
    if (m.size() != matching_number(g))
        throw StructureError("sterboul_certificate: matching is not maximum");
    return sterboul_search(g, m, enumerate_odd_cycles(g, cycle_cap));
}

bool has_sterboul_certificate(const Graph& g, const Matching& m, std::size_t cycle_cap) {
    return sterboul_search(g, m, enumerate_odd_cycles(g, cycle_cap)).has_value();
}

std::optional<SterboulCert> sterboul_certificate_with_cycles(const Graph& g, const Matching& m,
                                                             const CycleList& odd_cycles) {
    return sterboul_search(g, m, odd_cycles);
}

std::vector<std::string> validate_flower(const Graph& g, const Matching& m, const FlowerCert& f) {
    std::vector<std::string> issues;
    if (!is_simple_cycle(g, f.blossom) || f.blossom.size() % 2 == 0) {
        issues.push_back("blossom is not a simple odd cycle");
        return issues;
    }
    auto base = blossom_base(m, Cycle{f.blossom, true});
    if (!base)
        issues.push_back("blossom does not carry exactly k matching edges");
    else if (*base != f.base)
        issues.push_back("base is not the unique cycle vertex free of matched cycle edges");

    const auto& stem = f.stem;
    if (stem.empty() || stem.front() != f.base) issues.push_back("stem must start at the base");
    if (!stem.empty() && stem.back() != f.root) issues.push_back("stem must end at the root");
    if (stem.size() % 2 == 0) issues.push_back("stem must have even length");
    if (m.covers(f.root)) issues.push_back("root is not exposed");
    for (std::size_t i = 0; i + 1 < stem.size(); ++i) {
        if (!g.has_edge(stem[i], stem[i + 1])) issues.push_back("stem uses a non-edge");
        bool matched = m.contains(stem[i], stem[i + 1]);
        if (matched != (i % 2 == 0))
            issues.push_back("stem is not alternating with a matched edge at the base");
    }
    std::vector<int> sorted_stem = stem;
    std::sort(sorted_stem.begin(), sorted_stem.end());
    if (std::adjacent_find(sorted_stem.begin(), sorted_stem.end()) != sorted_stem.end())
        issues.push_back("stem repeats a vertex");
    for (std::size_t i = 1; i < stem.size(); ++i) {
        if (std::find(f.blossom.begin(), f.blossom.end(), stem[i]) != f.blossom.end())
            issues.push_back("stem shares a non-base vertex with the blossom");
    }
    return issues;
}

std::vector<std::string> validate_posy(const Graph& g, const Matching& m, const PosyCert& p) {
    std::vector<std::string> issues;
    for (const auto* blossom : {&p.blossom_a, &p.blossom_b}) {
        if (!is_simple_cycle(g, *blossom) || blossom->size() % 2 == 0) {
            issues.push_back("posy blossom is not a simple odd cycle");
            return issues;
        }
        if (!blossom_base(m, Cycle{*blossom, true}))
            issues.push_back("posy blossom does not carry exactly k matching edges");
    }
    for (int v : p.blossom_a) {
        if (std::find(p.blossom_b.begin(), p.blossom_b.end(), v) != p.blossom_b.end())
            issues.push_back("posy blossoms are not vertex-disjoint");
    }
    auto base_a = blossom_base(m, Cycle{p.blossom_a, true});
    auto base_b = blossom_base(m, Cycle{p.blossom_b, true});
    const auto& path = p.path;
    if (path.size() < 2 || path.size() % 2 != 0) issues.push_back("posy path must have odd length");
    if (base_a && (path.empty() || path.front() != *base_a))
        issues.push_back("posy path must start at the first base");
    if (base_b && (path.empty() || path.back() != *base_b))
        issues.push_back("posy path must end at the second base");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) issues.push_back("posy path uses a non-edge");
        bool matched = m.contains(path[i], path[i + 1]);
        if (matched != (i % 2 == 0)) issues.push_back("posy path is not an mm-alternating path");
    }
    std::vector<int> sorted_path = path;
    std::sort(sorted_path.begin(), sorted_path.end());
    if (std::adjacent_find(sorted_path.begin(), sorted_path.end()) != sorted_path.end())
        issues.push_back("posy path repeats a vertex");
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int v = path[i];
        if (std::find(p.blossom_a.begin(), p.blossom_a.end(), v) != p.blossom_a.end() ||
            std::find(p.blossom_b.begin(), p.blossom_b.end(), v) != p.blossom_b.end())
            issues.push_back("posy path has an internal vertex inside a blossom");
    }
    return issues;
}

bool is_koenig_egervary(const Graph& g) {
    return alpha_value(g) + matching_number(g) == g.order();
}

}  // namespace bab
