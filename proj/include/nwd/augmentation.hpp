#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nwd/errors.hpp"
#include "nwd/graph.hpp"

namespace nwd {

enum class ArcTag : std::uint8_t { Original, Transitive, Fraternal };

// A tight transitive fraternal augmentation: the arc set, how many rounds
// produced it, and a per-arc provenance tag.
struct AugmentationResult {
    DiGraph digraph;
    int rounds = 0;
    int max_indegree = 0;
    // aligned with digraph.out_neighbors(u)
    std::vector<std::vector<ArcTag>> out_tags;

    ArcTag arc_tag(int u, int v) const {
        const auto& o = digraph.out_neighbors(u);
        auto it = std::lower_bound(o.begin(), o.end(), v);
        if (it == o.end() || *it != v) throw InputError("arc not present");
        return out_tags[static_cast<std::size_t>(u)]
                       [static_cast<std::size_t>(it - o.begin())];
    }

    long long count_tag(ArcTag t) const {
        long long c = 0;
        for (const auto& row : out_tags)
            for (ArcTag x : row)
                if (x == t) ++c;
        return c;
    }
};

struct AugmentationOptions {
    // Abort when the indegree grows past this; the sparse-class guarantees do
    // not apply to the input then.
    int indegree_ceiling = 1 << 20;
};

namespace detail {

struct TaggedArcs {
    std::vector<std::pair<int, int>> arcs;
    std::vector<ArcTag> tags;
};

// One tight round. Fraternal arcs are oriented toward the endpoint of
// smaller `rank`; when every arc of `d` already points from larger to
// smaller rank (true for the aug pipeline), no round can ever demand an
// antiparallel pair. Inputs whose directed 2-paths force both (u,v) and
// (v,u) are rejected: no tight augmentation exists for them inside the
// antiparallel-free digraph class.
inline TaggedArcs tight_round(const DiGraph& d, const std::vector<ArcTag>& tags_in,
                              const std::vector<int>& rank) {
    const int n = d.vertex_count();
    TaggedArcs out;
    out.arcs = d.arcs();
    out.tags = tags_in;

    // transitive demands, deduplicated per source via stamping
    std::vector<std::vector<int>> trans(static_cast<std::size_t>(n));
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        stamp[static_cast<std::size_t>(u)] = u;
        for (int w : d.out_neighbors(u)) stamp[static_cast<std::size_t>(w)] = u;
        for (int w : d.out_neighbors(u))
            for (int v : d.out_neighbors(w)) {
                if (stamp[static_cast<std::size_t>(v)] == u) continue;
                stamp[static_cast<std::size_t>(v)] = u;
                trans[static_cast<std::size_t>(u)].push_back(v);
            }
        std::sort(trans[static_cast<std::size_t>(u)].begin(),
                  trans[static_cast<std::size_t>(u)].end());
    }
    auto in_trans = [&](int a, int b) {
        const auto& t = trans[static_cast<std::size_t>(a)];
        return std::binary_search(t.begin(), t.end(), b);
    };
    for (int u = 0; u < n; ++u)
        for (int v : trans[static_cast<std::size_t>(u)]) {
            if (d.has_arc(v, u) || in_trans(v, u))
                throw DomainError("tight augmentation would need both (" + std::to_string(u) +
                                  "," + std::to_string(v) +
                                  ") and its reverse; input has short directed cycles");
            out.arcs.emplace_back(u, v);
            out.tags.push_back(ArcTag::Transitive);
        }

    // fraternal step: one arc per common-in-neighbour pair not already
    // covered by the input or the transitive arcs; directions are fixed by
    // rank, so duplicates can be removed by a plain sort
    auto covered = [&](int a, int b) {
        return d.has_arc(a, b) || d.has_arc(b, a) || in_trans(a, b) || in_trans(b, a);
    };
    std::vector<std::pair<int, int>> fraternal;
    for (int w = 0; w < n; ++w) {
        const auto& ins = d.in_neighbors(w);
        for (std::size_t i = 0; i < ins.size(); ++i)
            for (std::size_t j = i + 1; j < ins.size(); ++j) {
                int u = ins[i], v = ins[j];
                if (covered(u, v)) continue;
                if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)])
                    std::swap(u, v);  // arc points to the smaller rank
                fraternal.emplace_back(u, v);
            }
    }
    std::sort(fraternal.begin(), fraternal.end());
    fraternal.erase(std::unique(fraternal.begin(), fraternal.end()), fraternal.end());
    for (auto [u, v] : fraternal) {
        out.arcs.emplace_back(u, v);
        out.tags.push_back(ArcTag::Fraternal);
    }
    return out;
}

inline AugmentationResult assemble(int n, const TaggedArcs& ta, int rounds,
                                   const AugmentationOptions& opt) {
    AugmentationResult res;
    res.rounds = rounds;
    res.digraph = DiGraph(n);
    for (auto [u, v] : ta.arcs) res.digraph.add_arc(u, v);
    // sort out-lists together with their tags; the round construction keeps
    // arcs simple, so skip revalidation
    std::vector<std::vector<std::pair<int, ArcTag>>> rows(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ta.arcs.size(); ++i)
        rows[static_cast<std::size_t>(ta.arcs[i].first)].emplace_back(ta.arcs[i].second,
                                                                      ta.tags[i]);
    res.digraph.sort_lists(false);
    res.out_tags.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        auto& row = rows[static_cast<std::size_t>(u)];
        std::sort(row.begin(), row.end());
        auto& tags = res.out_tags[static_cast<std::size_t>(u)];
        tags.reserve(row.size());
        for (auto& [v, t] : row) tags.push_back(t);
    }
    res.max_indegree = res.digraph.max_in_degree();
    if (res.max_indegree > opt.indegree_ceiling)
        throw BudgetExceeded("augmentation indegree " + std::to_string(res.max_indegree) +
                             " exceeds ceiling; input too dense");
    return res;
}

// Peel order for a standalone digraph: repeatedly take a vertex of minimum
// remaining out-degree (0 for any DAG), smallest id first. Every arc of a
// DAG points from larger to smaller rank under this order.
inline std::vector<int> peel_rank(const DiGraph& d) {
    const int n = d.vertex_count();
    std::vector<int> outdeg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        outdeg[static_cast<std::size_t>(v)] = static_cast<int>(d.out_neighbors(v).size());
        queue.insert({outdeg[static_cast<std::size_t>(v)], v});
    }
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int next = 0; !queue.empty(); ++next) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        rank[static_cast<std::size_t>(v)] = next;
        for (int u : d.in_neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            queue.erase({outdeg[static_cast<std::size_t>(u)], u});
            --outdeg[static_cast<std::size_t>(u)];
            queue.insert({outdeg[static_cast<std::size_t>(u)], u});
        }
    }
    return rank;
}

}  // namespace detail

// Tight 1-transitive fraternal augmentation of a digraph. The returned arc
// set contains the input, closes every directed 2-path, covers every
// common-in-neighbour pair in one direction, and adds nothing unjustified.
inline AugmentationResult tight_one_aug(const DiGraph& d,
                                        const AugmentationOptions& opt = {}) {
    std::vector<ArcTag> tags(static_cast<std::size_t>(d.arc_count()), ArcTag::Original);
    auto ta = detail::tight_round(d, tags, detail::peel_rank(d));
    return detail::assemble(d.vertex_count(), ta, 1, opt);
}

// tags in d.arcs() order (out-lists ascending)
inline std::vector<ArcTag> flatten_tags(const AugmentationResult& r) {
    std::vector<ArcTag> out;
    out.reserve(static_cast<std::size_t>(r.digraph.arc_count()));
    for (const auto& row : r.out_tags) out.insert(out.end(), row.begin(), row.end());
    return out;
}

// aug(G, r): degeneracy orientation followed by r tight rounds. r = 0 returns
// the initial orientation unchanged. Fraternal arcs follow the degeneracy
// removal order, so every round stays acyclic and conflict-free.
inline AugmentationResult aug(const Graph& g, int r, const AugmentationOptions& opt = {}) {
    if (r < 0) throw InputError("negative round count");
    auto orient = degeneracy_orientation(g);
    const int n = g.vertex_count();
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(orient.removal_order[static_cast<std::size_t>(i)])] = i;

    detail::TaggedArcs ta;
    ta.arcs = orient.digraph.arcs();
    ta.tags.assign(ta.arcs.size(), ArcTag::Original);
    AugmentationResult res = detail::assemble(n, ta, 0, opt);
    for (int round = 1; round <= r; ++round) {
        ta = detail::tight_round(res.digraph, flatten_tags(res), rank);
        res = detail::assemble(n, ta, round, opt);
    }
    return res;
}

// Exhaustive check of the four tight-augmentation conditions between an
// input D and a claimed augmentation H.
struct AugReport {
    std::vector<std::string> violations;
    long long violation_count = 0;

    bool ok() const { return violation_count == 0; }
    void add(std::string msg) {
        ++violation_count;
        if (violations.size() < 100) violations.push_back(std::move(msg));
    }
};

inline AugReport verify_aug(const DiGraph& d, const DiGraph& h) {
    if (d.vertex_count() != h.vertex_count()) throw InputError("vertex set mismatch");
    AugReport rep;
    for (auto [u, v] : d.arcs())
        if (!h.has_arc(u, v))
            rep.add("(a) lost arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const int n = d.vertex_count();
    for (int w = 0; w < n; ++w) {
        for (int u : d.in_neighbors(w))
            for (int v : d.out_neighbors(w)) {
                if (u == v) continue;
                if (!h.has_arc(u, v))
                    rep.add("(b) missing transitive arc (" + std::to_string(u) + "," +
                            std::to_string(v) + ") via " + std::to_string(w));
            }
        const auto& ins = d.in_neighbors(w);
        for (std::size_t i = 0; i < ins.size(); ++i)
            for (std::size_t j = i + 1; j < ins.size(); ++j)
                if (!h.has_arc(ins[i], ins[j]) && !h.has_arc(ins[j], ins[i]))
                    rep.add("(c) uncovered fraternal pair {" + std::to_string(ins[i]) + "," +
                            std::to_string(ins[j]) + "} via " + std::to_string(w));
    }
    auto intersects = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
        return false;
    };
    for (auto [u, v] : h.arcs()) {
        if (d.has_arc(u, v)) continue;
        if (intersects(d.out_neighbors(u), d.in_neighbors(v))) continue;  // (u,w),(w,v)
        if (intersects(d.out_neighbors(u), d.out_neighbors(v))) continue;  // (u,w),(v,w)
        rep.add("(d) unjustified arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return rep;
}

// Witness for the augmentation neighbourhood property: for v, w at distance
// <= r in G and H = aug(G, r), one of the three forms below exists.
struct NeighbourhoodWitness {
    enum class Kind { ForwardArc, BackwardArc, CommonInNeighbor } kind;
    int common = -1;  // the in-neighbour for the third form
};

inline NeighbourhoodWitness check_neighbourhood_witness(const Graph& g, const DiGraph& h,
                                                        int v, int w, int r) {
    auto ball = bfs_neighbourhood(g, v, r);
    if (ball.dist[static_cast<std::size_t>(w)] == kUnreached)
        throw InputError("vertices are not within distance r");
    if (h.has_arc(v, w)) return {NeighbourhoodWitness::Kind::ForwardArc, -1};
    if (h.has_arc(w, v)) return {NeighbourhoodWitness::Kind::BackwardArc, -1};
    const auto& a = h.in_neighbors(v);
    const auto& b = h.in_neighbors(w);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return {NeighbourhoodWitness::Kind::CommonInNeighbor, a[i]};
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    throw PropertyViolation("no augmentation witness for pair (" + std::to_string(v) + "," +
                            std::to_string(w) + ")");
}

}  // namespace nwd
