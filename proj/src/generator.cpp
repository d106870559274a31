#include "babgraph/generator.hpp"

#include <algorithm>
#include <sstream>

#include "babgraph/gallai_edmonds.hpp"
#include "babgraph/rng.hpp"

namespace bab {

namespace {

std::pair<int, int> parse_range(const std::string& value) {
    auto dots = value.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(value);
        return {v, v};
    }
    return {std::stoi(value.substr(0, dots)), std::stoi(value.substr(dots + 2))};
}

void check_params(const BabGenParams& p) {
    if (p.k < 0) throw StructureError("generator: k must be nonnegative");
    if (p.bip_order_lo < 0 || p.bip_order_hi < p.bip_order_lo)
        throw StructureError("generator: bad bipOrder range");
    if (p.k > 0) {
        if (p.cycle_len_lo < 3 || p.cycle_len_hi < p.cycle_len_lo)
            throw StructureError("generator: bad cycleLen range");
        bool any_odd = false;
        for (int l = p.cycle_len_lo; l <= p.cycle_len_hi; ++l)
            if (l % 2 == 1) any_odd = true;
        if (!any_odd) throw StructureError("generator: cycleLen range contains no odd length");
    }
    if (p.depth < 0) throw StructureError("generator: depth must be nonnegative");
    if (p.crossing < 0.0 || p.crossing > 1.0)
        throw StructureError("generator: crossing density must be in [0, 1]");
}

Graph make_bipartite_block(SplitMix64& rng, int order) {
    if (order == 0) return Graph(0, {});
    std::vector<std::pair<int, int>> edges;
    int style = static_cast<int>(rng.next_below(3));
    if (style == 1 && order >= 4) {
        // even cycle, leftover vertices isolated
        int len = order - order % 2;
        for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
        return Graph(order, edges);
    }
    if (style == 2 && order >= 2) {
        // perfect matching on an even prefix plus sparse consistent extras
        int len = order - order % 2;
        for (int i = 0; i + 1 < len; i += 2) edges.emplace_back(i, i + 1);
        for (int i = 0; i < len; i += 2)
            for (int j = 1; j < len; j += 2)
                if (j != i + 1 && rng.next_bool(0.15)) edges.emplace_back(i, j);
        return Graph(order, edges);
    }
    // random bipartition with cross edges
    std::vector<int> side(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) side[static_cast<std::size_t>(v)] = static_cast<int>(rng.next_below(2));
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] &&
                rng.next_bool(0.4))
                edges.emplace_back(u, v);
    return Graph(order, edges);
}

Graph make_part(SplitMix64& rng, const BabGenParams& params) {
    std::vector<int> odd_lengths;
    for (int l = params.cycle_len_lo; l <= params.cycle_len_hi; ++l)
        if (l % 2 == 1) odd_lengths.push_back(l);
    int len = odd_lengths[rng.next_below(odd_lengths.size())];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    int n = len;
    std::vector<int> even_depth;
    for (int i = 0; i < len; ++i) even_depth.push_back(i);
    for (int round = 0; round < params.depth; ++round) {
        int attachments = round == 0 ? 1 + static_cast<int>(rng.next_below(2))
                                     : static_cast<int>(rng.next_below(3));
        for (int a = 0; a < attachments; ++a) {
            int w = even_depth[rng.next_below(even_depth.size())];
            edges.emplace_back(w, n);
            edges.emplace_back(n, n + 1);
            even_depth.push_back(n + 1);
            n += 2;
        }
    }
    return Graph(n, edges);
}

}  // namespace

BabGenParams BabGenParams::parse_config(const std::string& text) {
    BabGenParams p;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw StructureError("generator config: expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        try {
            if (key == "k") {
                p.k = std::stoi(value);
            } else if (key == "bipOrder") {
                std::tie(p.bip_order_lo, p.bip_order_hi) = parse_range(value);
            } else if (key == "cycleLen") {
                std::tie(p.cycle_len_lo, p.cycle_len_hi) = parse_range(value);
            } else if (key == "depth") {
                p.depth = std::stoi(value);
            } else if (key == "crossing") {
                p.crossing = std::stod(value);
            } else if (key == "allowDisconnected") {
                p.allow_disconnected = value == "true" || value == "1";
            } else {
                throw StructureError("generator config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw StructureError("generator config: bad value for '" + key + "'");
        }
    }
    return p;
}

std::string BabGenParams::to_config() const {
    std::ostringstream out;
    out << "k=" << k << " bipOrder=" << bip_order_lo << ".." << bip_order_hi
        << " cycleLen=" << cycle_len_lo << ".." << cycle_len_hi << " depth=" << depth
        << " crossing=" << crossing << " allowDisconnected=" << (allow_disconnected ? "true" : "false");
    return out.str();
}

GeneratedBab generate_random_bab(std::uint64_t seed, const BabGenParams& params) {
    check_params(params);
    SplitMix64 b_rng(derive_seed(seed, 0));
    int b_order = params.bip_order_lo +
                  static_cast<int>(b_rng.next_below(
                      static_cast<std::uint64_t>(params.bip_order_hi - params.bip_order_lo + 1)));
    Graph b = make_bipartite_block(b_rng, b_order);

    std::vector<Graph> parts;
    for (int i = 0; i < params.k; ++i) {
        SplitMix64 part_rng(derive_seed(seed, 1 + static_cast<std::uint64_t>(i)));
        parts.push_back(make_part(part_rng, params));
    }

    // permitted crossing endpoints, block-local
    std::vector<VertexSet> allowed;
    {
        auto ge = gallai_edmonds(b);
        allowed.push_back(ge.A | ge.C);
    }
    for (const auto& part : parts) allowed.push_back(gallai_edmonds(part).A);

    struct Pair {
        int block_u, u, block_v, v;
    };
    std::vector<Pair> candidates;
    for (int j = 1; j <= params.k; ++j)
        for (int u : allowed[0])
            for (int v : allowed[static_cast<std::size_t>(j)])
                candidates.push_back({0, u, j, v});
    for (int i = 1; i <= params.k; ++i)
        for (int j = i + 1; j <= params.k; ++j)
            for (int u : allowed[static_cast<std::size_t>(i)])
                for (int v : allowed[static_cast<std::size_t>(j)])
                    candidates.push_back({i, u, j, v});

    SplitMix64 cross_rng(derive_seed(seed, 1000));
    std::vector<char> selected(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        selected[i] = cross_rng.next_bool(params.crossing) ? 1 : 0;

    if (!params.allow_disconnected) {
        // union-find over blocks and block-internal components; add the
        // earliest unselected candidates until everything is connected
        auto component_count = [&]() {
            std::vector<int> offset(static_cast<std::size_t>(params.k) + 1, 0);
            int n = b.order();
            for (int i = 0; i < params.k; ++i) {
                offset[static_cast<std::size_t>(i) + 1] = n;
                n += parts[static_cast<std::size_t>(i)].order();
            }
            std::vector<std::pair<int, int>> edges = b.edges();
            for (int i = 0; i < params.k; ++i)
                for (auto [u, v] : parts[static_cast<std::size_t>(i)].edges())
                    edges.emplace_back(offset[static_cast<std::size_t>(i) + 1] + u,
                                       offset[static_cast<std::size_t>(i) + 1] + v);
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (!selected[c]) continue;
                const auto& cand = candidates[c];
                edges.emplace_back(offset[static_cast<std::size_t>(cand.block_u)] + cand.u,
                                   offset[static_cast<std::size_t>(cand.block_v)] + cand.v);
            }
            if (n == 0) return 0;
            return static_cast<int>(components(Graph(n, edges)).components.size());
        };
        int comps = component_count();
        for (std::size_t c = 0; c < candidates.size() && comps > 1; ++c) {
            if (selected[c]) continue;
            selected[c] = 1;
            int now = component_count();
            if (now < comps)
                comps = now;
            else
                selected[c] = 0;
        }
        if (comps > 1)
            throw StructureError(
                "generator: parameters admit no connected instance (a block has no permitted "
                "crossing endpoint)");
    }

    std::vector<CrossingSpec> crossing;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (selected[c])
            crossing.push_back(
                {candidates[c].block_u, candidates[c].u, candidates[c].block_v, candidates[c].v});

    auto [graph, structure] = assemble_bab(b, parts, crossing);
    return {std::move(graph), std::move(structure)};
}

Graph random_graph(std::uint64_t seed, int max_n) {
    SplitMix64 rng(seed);
    int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(std::max(1, max_n))));
    static constexpr double kDensities[] = {0.12, 0.2, 0.3, 0.45};
    double p = kDensities[rng.next_below(4)];
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace bab
