#include "babgraph/cycles.hpp"

#include <algorithm>

namespace bab {

bool is_simple_cycle(const Graph& g, const std::vector<int>& vertices) {
    const std::size_t len = vertices.size();
    if (len < 3) return false;
    std::vector<int> sorted_copy = vertices;
    std::sort(sorted_copy.begin(), sorted_copy.end());
    if (std::adjacent_find(sorted_copy.begin(), sorted_copy.end()) != sorted_copy.end())
        return false;
    for (std::size_t i = 0; i < len; ++i) {
        int u = vertices[i];
        int v = vertices[(i + 1) % len];
        if (u < 0 || u >= g.order() || !g.has_edge(u, v)) return false;
    }
    return true;
}

std::vector<int> canonical_cycle(const std::vector<int>& vertices) {
    const std::size_t len = vertices.size();
    auto at = [&](std::size_t start, bool forward, std::size_t i) {
        return forward ? vertices[(start + i) % len] : vertices[(start + len - i % len) % len];
    };
    std::size_t min_pos = 0;
    for (std::size_t i = 1; i < len; ++i)
        if (vertices[i] < vertices[min_pos]) min_pos = i;
    bool forward = at(min_pos, true, 1) < at(min_pos, false, 1);
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = at(min_pos, forward, i);
    return out;
}

CycleList enumerate_odd_cycles(const Graph& g, std::size_t cap) {
    const int n = g.order();
    CycleList out;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<char> banned(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    std::size_t steps = 0;
    const std::size_t step_cap = std::max<std::size_t>(cap, 1) * 64;

    // Every cycle is discovered exactly once: rooted at its minimum vertex,
    // oriented so the second vertex is smaller than the last.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        if (++steps > step_cap)
            throw GuardError("enumerate_odd_cycles",
                             "search exceeded " + std::to_string(step_cap) + " steps");
        for (int w : g.neighbors(v)) {
            if (w == root) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (path.size() % 2 == 1) {
                        out.cycles.push_back({path, true});
                        if (out.cycles.size() > cap)
                            throw GuardError("enumerate_odd_cycles",
                                             "more than " + std::to_string(cap) + " odd cycles");
                    }
                }
                continue;
            }
            if (w <= root || on_path[static_cast<std::size_t>(w)] ||
                banned[static_cast<std::size_t>(w)])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };

    for (int root = 0; root < n; ++root) {
        on_path[static_cast<std::size_t>(root)] = 1;
        path.assign(1, root);
        dfs(dfs, root, root);
        on_path[static_cast<std::size_t>(root)] = 0;
        banned[static_cast<std::size_t>(root)] = 1;
    }

    std::sort(out.cycles.begin(), out.cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

}  // namespace bab
