#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nwd/errors.hpp"
#include "nwd/graph.hpp"
#include "nwd/order.hpp"

namespace nwd {

// r-neighbourhood cover: connected clusters of radius <= 2r (from their
// centres) such that every r-ball lies inside the cluster assigned to its
// centre vertex.
struct Cover {
    struct Cluster {
        int center;
        std::vector<int> vertices;  // ascending
    };
    std::vector<Cluster> clusters;
    std::vector<int> assignment;  // vertex -> cluster index with N_r(v) inside
    int r = 0;
    VertexOrder order;

    long long total_size() const {
        long long s = 0;
        for (const auto& c : clusters) s += static_cast<long long>(c.vertices.size());
        return s;
    }

    // d^X(v) for every v, recomputed from the cluster lists
    std::vector<int> degrees(int n) const {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (const auto& c : clusters)
            for (int v : c.vertices) ++deg[static_cast<std::size_t>(v)];
        return deg;
    }

    int max_degree(int n) const {
        auto d = degrees(n);
        int m = 0;
        for (int x : d) m = std::max(m, x);
        return m;
    }
};

// Ascending sweep: for each vertex v in order, a 2r-level BFS in the graph
// with all earlier vertices deleted yields the cluster X_2r[G,<,v]; v is
// then deleted. The first r BFS levels assign still-unassigned vertices to
// v's cluster, which makes the assignment use the <-minimal valid centre.
// Adjacency is pre-split into smaller/larger neighbours so the alive test
// is a single position comparison.
inline Cover build_cover(const Graph& g, int r, const VertexOrder& ord) {
    if (r < 0) throw InputError("negative radius");
    const int n = g.vertex_count();
    if (static_cast<int>(ord.pos.size()) != n) throw InputError("order size mismatch");
    Cover cover;
    cover.r = r;
    cover.order = ord;
    cover.assignment.assign(static_cast<std::size_t>(n), -1);

    std::vector<std::vector<int>> smaller(static_cast<std::size_t>(n)),
        larger(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            (ord.pos[static_cast<std::size_t>(w)] < ord.pos[static_cast<std::size_t>(v)]
                 ? smaller[static_cast<std::size_t>(v)]
                 : larger[static_cast<std::size_t>(v)])
                .push_back(w);

    auto seq = ord.by_rank();
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    for (int v : seq) {
        const int vpos = ord.pos[static_cast<std::size_t>(v)];
        Cover::Cluster cluster;
        cluster.center = v;
        cluster.vertices.push_back(v);
        mark[static_cast<std::size_t>(v)] = v;
        if (cover.assignment[static_cast<std::size_t>(v)] == -1)
            cover.assignment[static_cast<std::size_t>(v)] =
                static_cast<int>(cover.clusters.size());
        std::vector<int> frontier{v};
        for (int level = 1; level <= 2 * r && !frontier.empty(); ++level) {
            std::vector<int> next;
            for (int x : frontier) {
                auto visit = [&](int w) {
                    if (ord.pos[static_cast<std::size_t>(w)] < vpos) return;  // deleted
                    if (mark[static_cast<std::size_t>(w)] == v) return;
                    mark[static_cast<std::size_t>(w)] = v;
                    cluster.vertices.push_back(w);
                    if (level <= r && cover.assignment[static_cast<std::size_t>(w)] == -1)
                        cover.assignment[static_cast<std::size_t>(w)] =
                            static_cast<int>(cover.clusters.size());
                    next.push_back(w);
                };
                for (int w : larger[static_cast<std::size_t>(x)]) visit(w);
                for (int w : smaller[static_cast<std::size_t>(x)]) visit(w);
            }
            frontier = std::move(next);
        }
        std::sort(cluster.vertices.begin(), cluster.vertices.end());
        if (!cluster.vertices.empty()) cover.clusters.push_back(std::move(cluster));
    }
    return cover;
}

inline Cover build_cover(const Graph& g, int r, const AugmentationOptions& opt = {}) {
    // Lemma-level default: the cover needs a wcol_{2r} witness
    return build_cover(g, r, order_from_aug(g, 2 * r, opt).order);
}

struct CoverStats {
    int max_degree = 0;
    int max_radius = 0;
    long long total_size = 0;
    long long cluster_count = 0;
};

struct CoverReport {
    std::vector<std::string> violations;
    long long violation_count = 0;
    CoverStats stats;

    bool ok() const { return violation_count == 0; }
    void add(std::string msg) {
        ++violation_count;
        if (violations.size() < 100) violations.push_back(std::move(msg));
    }
};

// Independent validation: cover property via the assignment, per-cluster
// radius (inside the induced cluster subgraph) and connectivity, plus
// recomputed degree and size statistics.
inline CoverReport verify_cover(const Graph& g, int r, const Cover& cover) {
    CoverReport rep;
    const int n = g.vertex_count();
    rep.stats.cluster_count = static_cast<long long>(cover.clusters.size());
    rep.stats.total_size = cover.total_size();
    rep.stats.max_degree = cover.max_degree(n);

    if (static_cast<int>(cover.assignment.size()) != n) {
        rep.add("assignment size mismatch");
        return rep;
    }
    for (int v = 0; v < n; ++v) {
        int idx = cover.assignment[static_cast<std::size_t>(v)];
        if (idx < 0 || idx >= static_cast<int>(cover.clusters.size())) {
            rep.add("vertex " + std::to_string(v) + " has no assigned cluster");
            continue;
        }
        const auto& cl = cover.clusters[static_cast<std::size_t>(idx)].vertices;
        for (int w : bfs_neighbourhood(g, v, r).vertices)
            if (!std::binary_search(cl.begin(), cl.end(), w)) {
                rep.add("cover property fails at vertex " + std::to_string(v) + ": " +
                        std::to_string(w) + " outside assigned cluster");
                break;
            }
    }
    for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
        const auto& c = cover.clusters[i];
        auto [sub, ids] = g.induced(c.vertices);
        int center_new = static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), c.center) - ids.begin());
        if (center_new >= static_cast<int>(ids.size()) ||
            ids[static_cast<std::size_t>(center_new)] != c.center) {
            rep.add("cluster " + std::to_string(i) + " does not contain its center");
            continue;
        }
        auto dist = bfs_distances(sub, center_new);
        int ecc = 0;
        bool connected = true;
        for (int x : dist) {
            if (x == kUnreached) connected = false;
            ecc = std::max(ecc, x);
        }
        if (!connected) rep.add("cluster " + std::to_string(i) + " is disconnected");
        else {
            rep.stats.max_radius = std::max(rep.stats.max_radius, ecc);
            if (ecc > 2 * r)
                rep.add("cluster " + std::to_string(i) + " has radius " + std::to_string(ecc) +
                        " > 2r");
        }
    }
    return rep;
}

// Lemma-level identity: the number of clusters containing v equals
// |wreach_2r[G,<,v]|, the latter computed by the independent per-source
// search. Throws on the first mismatch.
inline void cover_degree_equals_wreach(const Graph& g, int r, const VertexOrder& ord) {
    auto cover = build_cover(g, r, ord);
    auto deg = cover.degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto wr = wreach_set(g, ord, 2 * r, v);
        if (static_cast<int>(wr.size()) != deg[static_cast<std::size_t>(v)])
            throw PropertyViolation("cover degree " + std::to_string(deg[static_cast<std::size_t>(v)]) +
                                    " != |wreach| " + std::to_string(wr.size()) + " at vertex " +
                                    std::to_string(v));
    }
}

// Simple independent route to the same clusters: X_2r[G,<,v] as a fresh
// position-filtered BFS ball (no deletion bookkeeping).
inline std::vector<int> cluster_by_bfs(const Graph& g, const VertexOrder& ord, int r, int v) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    const int vpos = ord.pos[static_cast<std::size_t>(v)];
    seen[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out{v}, frontier{v};
    for (int level = 1; level <= 2 * r && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int x : frontier)
            for (int w : g.neighbors(x)) {
                if (ord.pos[static_cast<std::size_t>(w)] < vpos || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = 1;
                out.push_back(w);
                next.push_back(w);
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nwd
