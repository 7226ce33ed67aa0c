#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "nwd/errors.hpp"

namespace nwd {

constexpr int kUnreached = -1;

// Simple undirected graph with dense 0-based vertex ids and sorted
// adjacency lists. Immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw InputError("negative vertex count");
    }

    // Canonicalizes on construction: sorts adjacency, rejects loops and
    // duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
        g.finish();
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Induced subgraph on `keep` (any order, deduplicated here). Returns the
    // subgraph plus the map new id -> original id.
    std::pair<Graph, std::vector<int>> induced(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<int> newid(static_cast<std::size_t>(vertex_count()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            check_vertex(keep[i]);
            newid[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        }
        Graph g(static_cast<int>(keep.size()));
        for (int u : keep)
            for (int v : neighbors(u))
                if (u < v && newid[static_cast<std::size_t>(v)] >= 0)
                    g.add_edge_unchecked(newid[static_cast<std::size_t>(u)],
                                         newid[static_cast<std::size_t>(v)]);
        g.finish();
        return {std::move(g), std::move(keep)};
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                             std::to_string(vertex_count()) + ")");
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void add_edge_unchecked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    void finish() {
        edge_count_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw InputError("duplicate edge");
            edge_count_ += static_cast<long long>(a.size());
        }
        edge_count_ /= 2;
    }

    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

struct BfsResult {
    std::vector<int> vertices;  // ascending ids, exactly the r-ball
    std::vector<int> dist;      // indexed by vertex id; kUnreached if dist > r
};

// N_r(v) with exact distances. r may exceed the eccentricity; the whole
// component is returned then.
inline BfsResult bfs_neighbourhood(const Graph& g, int v, int r) {
    g.check_vertex(v);
    if (r < 0) throw InputError("negative radius");
    BfsResult res;
    res.dist.assign(static_cast<std::size_t>(g.vertex_count()), kUnreached);
    res.dist[static_cast<std::size_t>(v)] = 0;
    std::vector<int> frontier{v};
    res.vertices.push_back(v);
    for (int level = 1; level <= r && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int u : frontier)
            for (int w : g.neighbors(u))
                if (res.dist[static_cast<std::size_t>(w)] == kUnreached) {
                    res.dist[static_cast<std::size_t>(w)] = level;
                    next.push_back(w);
                    res.vertices.push_back(w);
                }
        frontier = std::move(next);
    }
    std::sort(res.vertices.begin(), res.vertices.end());
    return res;
}

// Distances from v to every vertex (kUnreached for other components).
inline std::vector<int> bfs_distances(const Graph& g, int v) {
    return bfs_neighbourhood(g, v, g.vertex_count()).dist;
}

inline std::vector<int> component_of(const Graph& g, int v) {
    auto d = bfs_distances(g, v);
    std::vector<int> comp;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (d[static_cast<std::size_t>(u)] != kUnreached) comp.push_back(u);
    return comp;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        auto comp = component_of(g, v);
        for (int u : comp) seen[static_cast<std::size_t>(u)] = 1;
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return static_cast<int>(component_of(g, 0).size()) == g.vertex_count();
}

// (rad(G), smallest-id centre vertex). Requires G connected and nonempty.
inline std::pair<int, int> radius_and_center(const Graph& g) {
    if (g.vertex_count() == 0) throw DomainError("radius of empty graph");
    int best_ecc = std::numeric_limits<int>::max();
    int best_v = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto d = bfs_distances(g, v);
        int ecc = 0;
        for (int x : d) {
            if (x == kUnreached) throw DomainError("radius of disconnected graph");
            ecc = std::max(ecc, x);
        }
        if (ecc < best_ecc) {
            best_ecc = ecc;
            best_v = v;
        }
    }
    return {best_ecc, best_v};
}

// Directed simple graph: no self-arcs, at most one of (u,v),(v,u).
// In- and out-lists both kept sorted.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n)
        : in_(static_cast<std::size_t>(n)), out_(static_cast<std::size_t>(n)) {
        if (n < 0) throw InputError("negative vertex count");
    }

    static DiGraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
        DiGraph d(n);
        for (auto [u, v] : arcs) d.add_arc(u, v);
        d.sort_lists();
        return d;
    }

    int vertex_count() const { return static_cast<int>(in_.size()); }
    long long arc_count() const { return arc_count_; }

    const std::vector<int>& in_neighbors(int v) const {
        check_vertex(v);
        return in_[static_cast<std::size_t>(v)];
    }
    const std::vector<int>& out_neighbors(int v) const {
        check_vertex(v);
        return out_[static_cast<std::size_t>(v)];
    }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& o = out_[static_cast<std::size_t>(u)];
        return std::binary_search(o.begin(), o.end(), v);
    }

    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    int max_in_degree() const {
        int m = 0;
        for (int v = 0; v < vertex_count(); ++v) m = std::max(m, in_degree(v));
        return m;
    }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(arc_count_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : out_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
        return out;
    }

    Graph underlying() const { return Graph::from_edges(vertex_count(), arcs()); }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw InputError("vertex id " + std::to_string(v) + " out of range");
    }

    // Construction helpers; callers must sort_lists() when done.
    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-arc at vertex " + std::to_string(u));
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
        ++arc_count_;
    }

    // validate = false skips the simplicity checks for arc sets that are
    // correct by construction
    void sort_lists(bool validate = true) {
        for (auto& a : in_) std::sort(a.begin(), a.end());
        for (auto& a : out_) std::sort(a.begin(), a.end());
        if (!validate) return;
        for (int u = 0; u < vertex_count(); ++u) {
            const auto& o = out_[static_cast<std::size_t>(u)];
            if (std::adjacent_find(o.begin(), o.end()) != o.end())
                throw InputError("duplicate arc");
            for (int v : o)
                if (v < u && std::binary_search(out_[static_cast<std::size_t>(v)].begin(),
                                                out_[static_cast<std::size_t>(v)].end(), u))
                    throw InputError("antiparallel arc pair (" + std::to_string(v) + "," +
                                     std::to_string(u) + ")");
        }
    }

    bool operator==(const DiGraph& o) const { return out_ == o.out_; }

private:
    std::vector<std::vector<int>> in_, out_;
    long long arc_count_ = 0;
};

// Greedy degeneracy orientation: repeatedly removes a minimum-degree vertex
// (ties: smallest id) and orients its remaining incident edges toward it.
// The reported max indegree is the degeneracy under this schedule.
struct OrientationResult {
    DiGraph digraph;
    int max_indegree = 0;
    std::vector<int> removal_order;  // removal_order[i] = i-th removed vertex
};

inline OrientationResult degeneracy_orientation(const Graph& g) {
    const int n = g.vertex_count();
    OrientationResult res;
    res.digraph = DiGraph(n);
    res.removal_order.reserve(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;  // (degree, id)
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.insert({deg[static_cast<std::size_t>(v)], v});
    }
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        res.removal_order.push_back(v);
        res.max_indegree = std::max(res.max_indegree, d);
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            res.digraph.add_arc(w, v);
            queue.erase({deg[static_cast<std::size_t>(w)], w});
            --deg[static_cast<std::size_t>(w)];
            queue.insert({deg[static_cast<std::size_t>(w)], w});
        }
    }
    res.digraph.sort_lists();
    return res;
}

}  // namespace nwd
