#include "babgraph/gallai_edmonds.hpp"

#include <algorithm>

namespace bab {

GEDecomposition gallai_edmonds(const Graph& g) {
    const int n = g.order();
    const int mu = matching_number(g);
    std::vector<int> d;
    for (int v = 0; v < n; ++v) {
        auto rest = induced_subgraph(g, VertexSet::full(n) - VertexSet({v}));
        if (matching_number(rest.graph) == mu) d.push_back(v);
    }
    GEDecomposition out;
    out.D = VertexSet::of_sorted(std::move(d));
    out.A = neighborhood(g, out.D, false) - out.D;
    out.C = VertexSet::full(n) - out.D - out.A;

    auto induced_d = induced_subgraph(g, out.D);
    std::vector<int> x;
    for (const auto& comp : components(induced_d.graph).components) {
        std::vector<int> original;
        original.reserve(static_cast<std::size_t>(comp.size()));
        for (int v : comp) original.push_back(induced_d.index_map[static_cast<std::size_t>(v)]);
        auto mapped = VertexSet::of_sorted(std::move(original));
        out.d_components.push_back(mapped);
        if (comp.size() == 1 && induced_d.graph.degree(comp[0]) == 0) x.push_back(mapped[0]);
    }
    std::sort(out.d_components.begin(), out.d_components.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    out.X = VertexSet(std::move(x));
    out.Y = out.D - out.X;

    auto induced_c = induced_subgraph(g, out.C);
    if (auto split = bipartition(induced_c.graph)) {
        auto lift = [&](const VertexSet& s) {
            std::vector<int> mapped;
            mapped.reserve(static_cast<std::size_t>(s.size()));
            for (int v : s) mapped.push_back(induced_c.index_map[static_cast<std::size_t>(v)]);
            return VertexSet::of_sorted(std::move(mapped));
        };
        out.c_bipartition = std::make_pair(lift(split->first), lift(split->second));
    }
    return out;
}

bool is_factor_critical(const Graph& g) {
    const int n = g.order();
    if (n % 2 == 0) return false;
    for (int v = 0; v < n; ++v) {
        auto rest = induced_subgraph(g, VertexSet::full(n) - VertexSet({v}));
        if (matching_number(rest.graph) != (n - 1) / 2) return false;
    }
    return true;
}

std::vector<std::string> validate_ge(const Graph& g, const GEDecomposition& dec,
                                     const Matching& m) {
    std::vector<std::string> issues;
    if ((dec.D | dec.A | dec.C).size() != g.order() || !(dec.D & dec.A).empty() ||
        !(dec.D & dec.C).empty() || !(dec.A & dec.C).empty())
        issues.push_back("D, A, C do not partition the vertex set");

    for (int v : dec.C)
        if (!m.covers(v)) issues.push_back("matching misses C-vertex " + std::to_string(v));

    // component id per vertex of G[D]
    std::vector<int> comp_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < dec.d_components.size(); ++i)
        for (int v : dec.d_components[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

    std::vector<char> used_comp(dec.d_components.size(), 0);
    for (int a : dec.A) {
        int w = m.partner(a);
        if (w == a) {
            issues.push_back("matching misses A-vertex " + std::to_string(a));
            continue;
        }
        if (!dec.D.contains(w)) {
            issues.push_back("A-vertex " + std::to_string(a) + " is matched outside D");
            continue;
        }
        int c = comp_of[static_cast<std::size_t>(w)];
        if (c >= 0) {
            if (used_comp[static_cast<std::size_t>(c)])
                issues.push_back("two A-vertices matched into the same component of G[D]");
            used_comp[static_cast<std::size_t>(c)] = 1;
        }
    }

    for (const auto& comp : dec.d_components) {
        int internal = 0;
        for (int v : comp) {
            int w = m.partner(v);
            if (w != v && comp.contains(w)) ++internal;
        }
        internal /= 2;
        // near-perfect restriction: at most one component vertex is not
        // matched inside the component
        if (comp.size() - 2 * internal > 1)
            issues.push_back("matching is not near-perfect on a component of G[D]");
    }
    return issues;
}

}  // namespace bab
