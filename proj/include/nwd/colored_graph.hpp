#pragma once

#include <algorithm>
#include <vector>

#include "nwd/errors.hpp"
#include "nwd/graph.hpp"

namespace nwd {

constexpr int kUncolored = -1;

// Graph with pairwise-disjoint colour classes; uncoloured vertices allowed.
struct ColoredGraph {
    Graph graph;
    std::vector<int> color_of;  // per vertex; kUncolored if in no class

    ColoredGraph() = default;
    explicit ColoredGraph(Graph g)
        : graph(std::move(g)),
          color_of(static_cast<std::size_t>(graph.vertex_count()), kUncolored) {}

    ColoredGraph(Graph g, std::vector<int> colors)
        : graph(std::move(g)), color_of(std::move(colors)) {
        if (static_cast<int>(color_of.size()) != graph.vertex_count())
            throw InputError("color map size mismatch");
        for (int c : color_of)
            if (c < kUncolored) throw InputError("negative color index");
    }

    int color_count() const {
        int t = 0;
        for (int c : color_of) t = std::max(t, c + 1);
        return t;
    }

    std::vector<int> color_class(int c) const {
        std::vector<int> out;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (color_of[static_cast<std::size_t>(v)] == c) out.push_back(v);
        return out;
    }

    std::vector<int> colored_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (color_of[static_cast<std::size_t>(v)] != kUncolored) out.push_back(v);
        return out;
    }

    // Colours actually present, ascending.
    std::vector<int> live_colors() const {
        std::vector<int> out(color_of);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (!out.empty() && out.front() == kUncolored) out.erase(out.begin());
        return out;
    }
};

// G • K_k coloured by copy index: vertex (x,y) is id x*k+y and has colour y.
// Copies of one vertex are mutually adjacent; cross edges follow E(G).
inline ColoredGraph lex_product_colored(const Graph& g, int k) {
    if (k < 1) throw InputError("lexicographic product needs k >= 1");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < k; ++y)
            for (int y2 = y + 1; y2 < k; ++y2) edges.emplace_back(x * k + y, x * k + y2);
    for (auto [x, x2] : g.edges())
        for (int y = 0; y < k; ++y)
            for (int y2 = 0; y2 < k; ++y2) edges.emplace_back(x * k + y, x2 * k + y2);
    std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < k; ++y) colors[static_cast<std::size_t>(x * k + y)] = y;
    return {Graph::from_edges(n * k, edges), std::move(colors)};
}

namespace detail {

// Connected vertex sets whose induced subgraph has radius <= r, as bitmasks.
// Candidates for branch sets of a depth-r minor; only for tiny graphs.
inline std::vector<std::uint32_t> branch_set_candidates(const Graph& g, int r) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        // radius of induced subgraph from its best root, via per-root BFS
        int best = -1;
        for (int root = 0; root < n; ++root) {
            if (!(mask & (1u << root))) continue;
            std::uint32_t seen = 1u << root;
            int depth = 0;
            std::uint32_t frontier = seen;
            while (seen != mask && frontier != 0) {
                std::uint32_t next = 0;
                for (int v = 0; v < n; ++v)
                    if (frontier & (1u << v)) next |= nbr[static_cast<std::size_t>(v)] & mask;
                next &= ~seen;
                seen |= next;
                frontier = next;
                ++depth;
            }
            if (seen == mask && (best == -1 || depth < best)) best = depth;
        }
        if (best != -1 && best <= r) out.push_back(mask);
    }
    return out;
}

}  // namespace detail

// Brute-force oracle: K_s =<_r G, by exhaustive search over s disjoint
// connected branch sets of radius <= r with all pairwise connecting edges.
// Hard size guards; exists only to check other code.
inline bool has_shallow_clique_minor(const Graph& g, int s, int r) {
    if (s < 1) throw InputError("clique size must be positive");
    if (r < 0) throw InputError("negative depth");
    const int n = g.vertex_count();
    if (n > 12 || s > 4)
        throw OracleGuardError("shallow-minor oracle guard: need |V| <= 12 and s <= 4");
    if (s > n) return false;

    auto cands = detail::branch_set_candidates(g, r);
    std::vector<std::uint32_t> cand_nbr(cands.size(), 0);
    std::vector<std::uint32_t> vnbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) vnbr[static_cast<std::size_t>(v)] |= 1u << w;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (int v = 0; v < n; ++v)
            if (cands[i] & (1u << v)) cand_nbr[i] |= vnbr[static_cast<std::size_t>(v)];

    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::uint32_t used, std::size_t first) -> bool {
        if (static_cast<int>(chosen.size()) == s) return true;
        for (std::size_t i = first; i < cands.size(); ++i) {
            if (cands[i] & used) continue;
            bool ok = true;
            for (std::size_t j : chosen)
                if (!(cand_nbr[j] & cands[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, used | cands[i], i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace nwd
