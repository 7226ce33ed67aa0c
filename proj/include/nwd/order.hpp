#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "nwd/augmentation.hpp"
#include "nwd/errors.hpp"
#include "nwd/graph.hpp"

namespace nwd {

// A linear order on V(G): pos maps vertex -> rank, by_rank is its inverse.
struct VertexOrder {
    std::vector<int> pos;

    VertexOrder() = default;
    explicit VertexOrder(std::vector<int> positions) : pos(std::move(positions)) {
        std::vector<char> seen(pos.size(), 0);
        for (int p : pos) {
            if (p < 0 || p >= static_cast<int>(pos.size()) || seen[static_cast<std::size_t>(p)])
                throw InputError("positions are not a permutation");
            seen[static_cast<std::size_t>(p)] = 1;
        }
    }

    static VertexOrder identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return VertexOrder(std::move(p));
    }

    // from a sequence of vertices, first = smallest
    static VertexOrder from_sequence(const std::vector<int>& seq) {
        std::vector<int> p(seq.size(), -1);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] < 0 || seq[i] >= static_cast<int>(seq.size()) ||
                p[static_cast<std::size_t>(seq[i])] != -1)
                throw InputError("sequence is not a permutation");
            p[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
        }
        return VertexOrder(std::move(p));
    }

    int size() const { return static_cast<int>(pos.size()); }

    std::vector<int> by_rank() const {
        std::vector<int> seq(pos.size());
        for (std::size_t v = 0; v < pos.size(); ++v)
            seq[static_cast<std::size_t>(pos[v])] = static_cast<int>(v);
        return seq;
    }
};

namespace detail {

// Greedy degeneracy order: repeatedly removes a minimum-degree vertex and
// places it last among the remaining positions, so each vertex has at most
// max_removal_degree smaller neighbours. Ties go to the largest id, which
// puts smaller ids earlier in the final order.
inline VertexOrder degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;  // (degree, -id): largest id first on ties
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.insert({deg[static_cast<std::size_t>(v)], -v});
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int slot = n - 1; slot >= 0; --slot) {
        auto [d, negv] = *queue.begin();
        int v = -negv;
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        pos[static_cast<std::size_t>(v)] = slot;
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            queue.erase({deg[static_cast<std::size_t>(w)], -w});
            --deg[static_cast<std::size_t>(w)];
            queue.insert({deg[static_cast<std::size_t>(w)], -w});
        }
    }
    return VertexOrder(std::move(pos));
}

}  // namespace detail

// Order witnessing the weak-colouring bound from an r-fold augmentation:
// the degeneracy order of the underlying undirected augmented graph, where
// every vertex has at most 2d smaller neighbours (d = max indegree).
struct OrderFromAug {
    VertexOrder order;
    int max_indegree = 0;  // d of the augmentation
};

inline OrderFromAug order_from_aug(const Graph& g, int r,
                                   const AugmentationOptions& opt = {}) {
    if (r < 1) throw InputError("order_from_aug needs r >= 1");
    auto a = aug(g, r, opt);
    return {detail::degeneracy_order(a.digraph.underlying()), a.max_indegree};
}

// wreach_k[G,<,v]: v itself plus every u < v joined to v by a path of length
// <= k whose vertices all lie at or above u. Exhaustive per-source search:
// for each candidate u, a BFS from v that never descends below u.
inline std::vector<int> wreach_set(const Graph& g, const VertexOrder& ord, int k, int v) {
    g.check_vertex(v);
    if (k < 0) throw InputError("negative radius");
    const int n = g.vertex_count();
    std::vector<int> result{v};
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        if (u == v || ord.pos[static_cast<std::size_t>(u)] >= ord.pos[static_cast<std::size_t>(v)])
            continue;
        const int floor_pos = ord.pos[static_cast<std::size_t>(u)];
        mark[static_cast<std::size_t>(v)] = u;
        std::vector<int> frontier{v};
        bool found = false;
        for (int level = 1; level <= k && !frontier.empty() && !found; ++level) {
            std::vector<int> next;
            for (int x : frontier) {
                for (int w : g.neighbors(x)) {
                    if (ord.pos[static_cast<std::size_t>(w)] < floor_pos) continue;
                    if (mark[static_cast<std::size_t>(w)] == u) continue;
                    mark[static_cast<std::size_t>(w)] = u;
                    if (w == u) {
                        found = true;
                        break;
                    }
                    next.push_back(w);
                }
                if (found) break;
            }
            frontier = std::move(next);
        }
        if (found) result.push_back(u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// All wreach_k sets at once via the prefix-deletion identity
// X_k[G,<,u] = N_k^{G \ S(u)}(u): one position-filtered BFS per source u,
// inverted into per-vertex wreach sets.
inline std::vector<std::vector<int>> wreach_all(const Graph& g, const VertexOrder& ord, int k) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> wreach(static_cast<std::size_t>(n));
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        const int floor_pos = ord.pos[static_cast<std::size_t>(u)];
        mark[static_cast<std::size_t>(u)] = u;
        std::vector<int> frontier{u};
        wreach[static_cast<std::size_t>(u)].push_back(u);
        for (int level = 1; level <= k && !frontier.empty(); ++level) {
            std::vector<int> next;
            for (int x : frontier)
                for (int w : g.neighbors(x)) {
                    if (ord.pos[static_cast<std::size_t>(w)] < floor_pos) continue;
                    if (mark[static_cast<std::size_t>(w)] == u) continue;
                    mark[static_cast<std::size_t>(w)] = u;
                    wreach[static_cast<std::size_t>(w)].push_back(u);
                    next.push_back(w);
                }
            frontier = std::move(next);
        }
    }
    for (auto& wr : wreach) std::sort(wr.begin(), wr.end());
    return wreach;
}

// max_v |wreach_k[G,<,v]|; an upper bound on wcol_k(G)
inline int wcol_of_order(const Graph& g, const VertexOrder& ord, int k) {
    if (g.vertex_count() == 0) return 0;
    auto wr = wreach_all(g, ord, k);
    std::size_t best = 0;
    for (const auto& s : wr) best = std::max(best, s.size());
    return static_cast<int>(best);
}

struct BruteWcolResult {
    int value = 0;
    VertexOrder best_order;
};

// Exact wcol_k by minimising over all n! orders. Oracle; n <= 8.
inline BruteWcolResult brute_wcol_with_order(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n > 8) throw OracleGuardError("brute wcol guard: need |V| <= 8");
    if (n == 0) return {0, VertexOrder::identity(0)};
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    BruteWcolResult res{n + 1, VertexOrder::identity(n)};
    do {
        auto ord = VertexOrder::from_sequence(seq);
        int w = wcol_of_order(g, ord, k);
        if (w < res.value) {
            res.value = w;
            res.best_order = ord;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return res;
}

inline int brute_wcol(const Graph& g, int k) { return brute_wcol_with_order(g, k).value; }

}  // namespace nwd
