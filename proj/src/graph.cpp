#include "babgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

namespace bab {

VertexSet::VertexSet(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

VertexSet VertexSet::of_sorted(std::vector<int> vertices) {
    VertexSet s;
    s.vertices_ = std::move(vertices);
    return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return of_sorted(std::move(out));
}

VertexSet VertexSet::full(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return of_sorted(std::move(out));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (int v : vertices_) {
        if (v >= 64) throw Error("VertexSet::mask: member " + std::to_string(v) + " >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of_sorted(std::move(out));
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of_sorted(std::move(out));
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::of_sorted(std::move(out));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw Error("graph order must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

namespace {

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

std::pair<long, long> parse_two_ints(std::string_view line, int lineno) {
    std::istringstream in{std::string(line)};
    long a = 0, b = 0;
    if (!(in >> a >> b)) throw ParseError(lineno, "expected two integers, got '" + std::string(line) + "'");
    std::string rest;
    if (in >> rest) throw ParseError(lineno, "trailing content '" + rest + "'");
    return {a, b};
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    int lineno = 0;
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& line) -> bool {
        while (pos <= text.size()) {
            if (pos == text.size()) return false;
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++lineno;
            if (!is_blank_or_comment(line)) return true;
        }
        return false;
    };

    std::string_view line;
    if (!next_line(line)) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    auto [n_long, m_long] = parse_two_ints(line, lineno);
    if (n_long < 0 || n_long > 65536) throw ParseError(lineno, "bad vertex count " + std::to_string(n_long));
    if (m_long < 0) throw ParseError(lineno, "bad edge count " + std::to_string(m_long));
    const int n = static_cast<int>(n_long);
    const long m = m_long;

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (long i = 0; i < m; ++i) {
        if (!next_line(line)) throw ParseError(lineno + 1, "unexpected end of file, expected " +
                                                               std::to_string(m) + " edges");
        auto [u, v] = parse_two_ints(line, lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex index out of range in edge '" + std::to_string(u) +
                                         " " + std::to_string(v) + "'");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        int lo = static_cast<int>(std::min(u, v)), hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError(lineno,
                             "duplicate edge " + std::to_string(lo) + " " + std::to_string(hi));
        edges.emplace_back(lo, hi);
    }
    if (next_line(line)) throw ParseError(lineno, "unexpected content after " + std::to_string(m) + " edges");
    return Graph(n, edges);
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v) + " out of range (order " + std::to_string(n_) +
                    ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::neighbor_mask(int v) const {
    if (n_ > 64) throw Error("neighbor_mask requires order <= 64");
    std::uint64_t m = 0;
    for (int w : neighbors(v)) m |= std::uint64_t{1} << w;
    return m;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
    std::vector<int> out;
    for (int v : s) {
        const auto& nb = g.neighbors(v);  // range check happens here
        out.insert(out.end(), nb.begin(), nb.end());
    }
    if (closed) out.insert(out.end(), s.begin(), s.end());
    return VertexSet(std::move(out));
}

VertexSet boundary_vertices(const Graph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) {
        for (int w : g.neighbors(v)) {
            if (!s.contains(w)) {
                out.push_back(v);
                break;
            }
        }
    }
    return VertexSet::of_sorted(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> to_new(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> index_map;
    index_map.reserve(static_cast<std::size_t>(vertices.size()));
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw Error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        to_new[static_cast<std::size_t>(v)] = static_cast<int>(index_map.size());
        index_map.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int nu = to_new[static_cast<std::size_t>(u)];
        int nv = to_new[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
    }
    return {Graph(vertices.size(), edges), std::move(index_map)};
}

ComponentSplit components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    ComponentSplit out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<std::size_t>(s)] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = s;
                    stack.push_back(w);
                }
            }
        }
        if (members.size() == 1 && g.degree(members[0]) == 0) ++out.isolated_count;
        out.components.push_back(VertexSet(std::move(members)));
    }
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> u, w;
    for (int v = 0; v < n; ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? u : w).push_back(v);
    }
    return std::make_pair(VertexSet::of_sorted(std::move(u)), VertexSet::of_sorted(std::move(w)));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

Graph with_edge(const Graph& g, int u, int v) {
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

}  // namespace bab
