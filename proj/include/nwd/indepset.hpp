#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nwd/colored_graph.hpp"
#include "nwd/errors.hpp"
#include "nwd/graph.hpp"
#include "nwd/splitter.hpp"

namespace nwd {

constexpr int kFar = -1;  // distance entry "> r"

// Recolouring atom: original colour index plus the vector of capped
// distances to the removed set M.
struct DistanceVectorColor {
    int base = kUncolored;
    std::vector<int> dvec;  // entries in 1..r, or kFar

    auto operator<=>(const DistanceVectorColor&) const = default;
};

struct DisBudgets {
    int rounds;   // splitter game length l
    int removal;  // splitter removal budget m
};

struct DisConfig {
    int brute_threshold = 12;                   // n_0: solve directly below this
    long long partition_work_cap = 10'000'000;  // colour-partition enumeration guard
};

struct DISInstance {
    ColoredGraph colored;
    int k = 0;
    int r = 1;
    DisBudgets budget{1, 1};
    int depth = 0;
};

// Splitter strategy handle used by the solver; the default extracts the
// stored-tree answer of the game engine.
using SplitterHandle = std::function<std::vector<int>(const GameState&, int)>;

inline SplitterHandle paper_splitter() {
    return [](const GameState& s, int v) { return s.splitter_move(v); };
}

namespace detail {

// Vertex-subset view of a coloured graph. All searches filter by `alive`;
// ids never change, so game moves and witnesses need no translation.
struct Arena {
    const Graph* base = nullptr;
    std::vector<char> alive;
    std::vector<int> color;  // kUncolored when dead or uncoloured
    int alive_count = 0;

    static Arena full(const ColoredGraph& cg) {
        Arena a;
        a.base = &cg.graph;
        a.alive.assign(static_cast<std::size_t>(cg.graph.vertex_count()), 1);
        a.color = cg.color_of;
        a.alive_count = cg.graph.vertex_count();
        return a;
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(alive_count));
        for (int v = 0; v < base->vertex_count(); ++v)
            if (alive[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    void kill(int v) {
        if (alive[static_cast<std::size_t>(v)]) {
            alive[static_cast<std::size_t>(v)] = 0;
            color[static_cast<std::size_t>(v)] = kUncolored;
            --alive_count;
        }
    }

    void keep_only(const std::vector<char>& mask) {
        for (int v = 0; v < base->vertex_count(); ++v)
            if (alive[static_cast<std::size_t>(v)] && !mask[static_cast<std::size_t>(v)]) kill(v);
    }

    void drop_color_class(int c) {
        for (auto& x : color)
            if (x == c) x = kUncolored;
    }

    std::vector<int> live_colors() const {
        std::vector<int> out;
        for (int v = 0; v < base->vertex_count(); ++v)
            if (alive[static_cast<std::size_t>(v)] && color[static_cast<std::size_t>(v)] != kUncolored)
                out.push_back(color[static_cast<std::size_t>(v)]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // coloured alive vertices sorted by (colour, id): the greedy scan order
    std::vector<int> colored_by_color() const {
        std::vector<std::pair<int, int>> tmp;
        for (int v = 0; v < base->vertex_count(); ++v)
            if (alive[static_cast<std::size_t>(v)] && color[static_cast<std::size_t>(v)] != kUncolored)
                tmp.emplace_back(color[static_cast<std::size_t>(v)], v);
        std::sort(tmp.begin(), tmp.end());
        std::vector<int> out;
        out.reserve(tmp.size());
        for (auto& [c, v] : tmp) out.push_back(v);
        return out;
    }
};

// multi-source BFS within the arena, depth-capped; kUnreached beyond cap
inline std::vector<int> arena_bfs(const Arena& a, const std::vector<int>& sources, int cap) {
    std::vector<int> dist(static_cast<std::size_t>(a.base->vertex_count()), kUnreached);
    std::vector<int> frontier;
    for (int s : sources)
        if (a.alive[static_cast<std::size_t>(s)] && dist[static_cast<std::size_t>(s)] != 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            frontier.push_back(s);
        }
    for (int level = 1; level <= cap && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : a.base->neighbors(x)) {
                if (!a.alive[static_cast<std::size_t>(y)] ||
                    dist[static_cast<std::size_t>(y)] != kUnreached)
                    continue;
                dist[static_cast<std::size_t>(y)] = level;
                next.push_back(y);
            }
        frontier = std::move(next);
    }
    return dist;
}

inline bool pairwise_far(const Arena& a, const std::vector<int>& xs, int r) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto d = arena_bfs(a, {xs[i]}, r);
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (d[static_cast<std::size_t>(xs[j])] != kUnreached) return false;
    }
    return true;
}

// Greedy inclusion-maximal rainbow r-independent set: scan coloured vertices
// ascending by (colour, id), keep a vertex if its colour is unused and it is
// farther than r from everything chosen.
inline std::vector<int> greedy_rainbow(const Arena& a, int r) {
    std::vector<char> blocked(static_cast<std::size_t>(a.base->vertex_count()), 0);
    std::vector<char> used_color;
    std::vector<int> chosen;
    for (int v : a.colored_by_color()) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        int c = a.color[static_cast<std::size_t>(v)];
        if (c >= static_cast<int>(used_color.size())) used_color.resize(c + 1, 0);
        if (used_color[static_cast<std::size_t>(c)]) continue;
        used_color[static_cast<std::size_t>(c)] = 1;
        chosen.push_back(v);
        auto d = arena_bfs(a, {v}, r);
        for (int x = 0; x < a.base->vertex_count(); ++x)
            if (d[static_cast<std::size_t>(x)] != kUnreached) blocked[static_cast<std::size_t>(x)] = 1;
    }
    return chosen;
}

// first rainbow r-independent k-subset of the coloured vertices in
// lexicographic order; the small-instance base case
inline std::optional<std::vector<int>> brute_rainbow(const Arena& a, int k, int r) {
    if (k == 0) return std::vector<int>{};
    std::vector<int> cand;
    for (int v = 0; v < a.base->vertex_count(); ++v)
        if (a.alive[static_cast<std::size_t>(v)] && a.color[static_cast<std::size_t>(v)] != kUncolored)
            cand.push_back(v);
    if (static_cast<int>(cand.size()) < k) return std::nullopt;
    std::map<int, std::vector<int>> dist_memo;
    auto dist_of = [&](int v) -> const std::vector<int>& {
        auto it = dist_memo.find(v);
        if (it == dist_memo.end()) it = dist_memo.emplace(v, arena_bfs(a, {v}, r)).first;
        return it->second;
    };
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t first) -> bool {
        if (static_cast<int>(pick.size()) == k) return true;
        for (std::size_t i = first; i < cand.size(); ++i) {
            int v = cand[i];
            bool ok = true;
            for (int u : pick) {
                if (a.color[static_cast<std::size_t>(u)] == a.color[static_cast<std::size_t>(v)] ||
                    dist_of(u)[static_cast<std::size_t>(v)] != kUnreached) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return pick;
    return std::nullopt;
}

struct RecolorOutput {
    std::vector<int> color;                    // new colour ids on survivors
    std::vector<DistanceVectorColor> palette;  // palette[id] = (base, dvec)
};

// distance-vector recolouring of the coloured vertices outside M, with
// distances measured in the arena (M still present)
inline RecolorOutput recolor_by_distance(const Arena& a, const std::vector<int>& m_set, int r) {
    if (m_set.empty()) throw InputError("recolouring needs a nonempty removed set");
    std::vector<std::vector<int>> dists;
    dists.reserve(m_set.size());
    for (int m : m_set) dists.push_back(arena_bfs(a, {m}, r));
    std::vector<char> in_m(static_cast<std::size_t>(a.base->vertex_count()), 0);
    for (int m : m_set) in_m[static_cast<std::size_t>(m)] = 1;

    RecolorOutput out;
    out.color.assign(static_cast<std::size_t>(a.base->vertex_count()), kUncolored);
    std::map<DistanceVectorColor, int> ids;
    std::vector<std::pair<DistanceVectorColor, int>> pending;  // (colour, vertex)
    for (int v = 0; v < a.base->vertex_count(); ++v) {
        if (!a.alive[static_cast<std::size_t>(v)] || in_m[static_cast<std::size_t>(v)]) continue;
        if (a.color[static_cast<std::size_t>(v)] == kUncolored) continue;
        DistanceVectorColor c;
        c.base = a.color[static_cast<std::size_t>(v)];
        c.dvec.reserve(m_set.size());
        for (std::size_t j = 0; j < m_set.size(); ++j) {
            int d = dists[j][static_cast<std::size_t>(v)];
            c.dvec.push_back(d == kUnreached ? kFar : d);
        }
        ids.emplace(c, 0);
        pending.emplace_back(std::move(c), v);
    }
    int next = 0;
    for (auto& [c, id] : ids) id = next++;
    out.palette.resize(ids.size());
    for (auto& [c, id] : ids) out.palette[static_cast<std::size_t>(id)] = c;
    for (auto& [c, v] : pending) out.color[static_cast<std::size_t>(v)] = ids[c];
    return out;
}

// Valid sub-colouring compatibility: distinct bases, and no shared anchor
// m_j through which two chosen vertices could sit at distance <= r.
inline bool colors_compatible(const DistanceVectorColor& x, const DistanceVectorColor& y, int r) {
    if (x.base == y.base) return false;
    for (std::size_t j = 0; j < x.dvec.size(); ++j) {
        int a = x.dvec[j], b = y.dvec[j];
        if (a != kFar && b != kFar && a + b <= r) return false;
    }
    return true;
}

// All maximal valid sub-colourings (maximal cliques of the compatibility
// graph); restricting to maximal ones loses nothing since validity is a
// pairwise, downward-closed condition.
inline std::vector<std::vector<int>> maximal_valid_subcolorings(
    const std::vector<DistanceVectorColor>& palette, int r) {
    const int t = static_cast<int>(palette.size());
    std::vector<std::vector<char>> compat(static_cast<std::size_t>(t),
                                          std::vector<char>(static_cast<std::size_t>(t), 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    colors_compatible(palette[static_cast<std::size_t>(i)],
                                      palette[static_cast<std::size_t>(j)], r);
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    // Bron-Kerbosch without pivoting, candidates in ascending colour id
    auto rec = [&](auto&& self, std::vector<int> cand, std::vector<int> excluded) -> void {
        if (cand.empty() && excluded.empty()) {
            result.push_back(current);
            return;
        }
        while (!cand.empty()) {
            int v = cand.front();
            cand.erase(cand.begin());
            std::vector<int> cand2, excl2;
            for (int x : cand)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)])
                    cand2.push_back(x);
            for (int x : excluded)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)])
                    excl2.push_back(x);
            current.push_back(v);
            self(self, std::move(cand2), std::move(excl2));
            current.pop_back();
            excluded.push_back(v);
        }
    };
    std::vector<int> all(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) all[static_cast<std::size_t>(i)] = i;
    rec(rec, all, {});
    if (result.empty()) result.push_back({});  // empty palette still recurses once
    return result;
}

// rainbow r-independent subsets of M in the arena, sizes <= cap, in
// deterministic order (extension by ascending id), empty set first
inline std::vector<std::vector<int>> rainbow_subsets(const Arena& a, const std::vector<int>& m_set,
                                                     int r, int cap) {
    std::vector<int> colored;
    for (int v : m_set)
        if (a.color[static_cast<std::size_t>(v)] != kUncolored) colored.push_back(v);
    std::sort(colored.begin(), colored.end());
    std::map<int, std::vector<int>> dist_memo;
    auto far = [&](int u, int v) {
        auto it = dist_memo.find(u);
        if (it == dist_memo.end()) it = dist_memo.emplace(u, arena_bfs(a, {u}, r)).first;
        return it->second[static_cast<std::size_t>(v)] == kUnreached;
    };
    std::vector<std::vector<int>> out{{}};
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t first) -> void {
        if (static_cast<int>(pick.size()) == cap) return;
        for (std::size_t i = first; i < colored.size(); ++i) {
            int v = colored[i];
            bool ok = true;
            for (int u : pick)
                if (a.color[static_cast<std::size_t>(u)] == a.color[static_cast<std::size_t>(v)] ||
                    !far(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            out.push_back(pick);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

// Exhaustive plain oracle: first (lexicographically least) k-subset of W
// with pairwise distance > r in G. Hard guards; test oracle only.
inline std::optional<std::vector<int>> brute_dis(const Graph& g, const std::vector<int>& w, int k,
                                                 int r) {
    if (static_cast<int>(w.size()) > 20 || k > 4)
        throw OracleGuardError("brute DIS guard: need |W| <= 20 and k <= 4");
    if (k < 0 || r < 0) throw InputError("bad k or r");
    if (k == 0) return std::vector<int>{};
    std::vector<int> cand(w);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int v : cand) g.check_vertex(v);
    if (static_cast<int>(cand.size()) < k) return std::nullopt;
    std::map<int, std::vector<int>> dists;
    for (int v : cand) dists.emplace(v, bfs_neighbourhood(g, v, r).dist);
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t first) -> bool {
        if (static_cast<int>(pick.size()) == k) return true;
        for (std::size_t i = first; i < cand.size(); ++i) {
            bool ok = true;
            for (int u : pick)
                if (dists[u][static_cast<std::size_t>(cand[i])] != kUnreached) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(cand[i]);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) return pick;
    return std::nullopt;
}

// Inclusion-maximal rainbow r-independent set by the (colour, id) greedy scan.
inline std::vector<int> greedy_max_rainbow_independent(const ColoredGraph& cg, int r) {
    return detail::greedy_rainbow(detail::Arena::full(cg), r);
}

struct RecoloredGraph {
    ColoredGraph colored;                      // same vertex set; M uncoloured
    std::vector<DistanceVectorColor> palette;  // new colour id -> (base, dvec)
};

// Public distance-vector recolouring on a whole coloured graph.
inline RecoloredGraph recolor_with_distance_vectors(const ColoredGraph& cg,
                                                    const std::vector<int>& m_set, int r) {
    auto arena = detail::Arena::full(cg);
    auto rec = detail::recolor_by_distance(arena, m_set, r);
    return {ColoredGraph(cg.graph, rec.color), std::move(rec.palette)};
}

// Independent post-hoc witness check: right size, within the candidate set
// when given, pairwise distance > r by fresh BFS, and (rainbow mode)
// pairwise distinct instance colours with no uncoloured member.
inline void verify_rainbow_witness(const ColoredGraph& cg, const std::vector<int>& witness, int k,
                                   int r) {
    if (static_cast<int>(witness.size()) != k)
        throw PropertyViolation("witness has wrong size");
    std::vector<int> seen_colors;
    for (int v : witness) {
        cg.graph.check_vertex(v);
        int c = cg.color_of[static_cast<std::size_t>(v)];
        if (c == kUncolored) throw PropertyViolation("witness vertex is uncoloured");
        seen_colors.push_back(c);
    }
    std::sort(seen_colors.begin(), seen_colors.end());
    if (std::adjacent_find(seen_colors.begin(), seen_colors.end()) != seen_colors.end())
        throw PropertyViolation("witness repeats a colour");
    for (std::size_t i = 0; i < witness.size(); ++i) {
        auto d = bfs_neighbourhood(cg.graph, witness[i], r).dist;
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (d[static_cast<std::size_t>(witness[j])] != kUnreached)
                throw PropertyViolation("witness vertices within distance r");
    }
}

inline void verify_plain_witness(const Graph& g, const std::vector<int>& w_candidates,
                                 const std::vector<int>& witness, int k, int r) {
    if (static_cast<int>(witness.size()) != k)
        throw PropertyViolation("witness has wrong size");
    for (int v : witness)
        if (!std::binary_search(w_candidates.begin(), w_candidates.end(), v))
            throw PropertyViolation("witness vertex outside the candidate set");
    for (std::size_t i = 0; i < witness.size(); ++i) {
        auto d = bfs_neighbourhood(g, witness[i], r).dist;
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (d[static_cast<std::size_t>(witness[j])] != kUnreached)
                throw PropertyViolation("witness vertices within distance r");
    }
}

namespace detail {

struct Solver {
    const DisConfig& cfg;
    const SplitterHandle& splitter;
    int game_radius;

    std::optional<std::vector<int>> solve(Arena a, int k, int r, GameState game,
                                          int rounds_left) {
        if (k == 0) return std::vector<int>{};
        if (a.alive_count == 0) return std::nullopt;
        if (a.alive_count <= cfg.brute_threshold) return brute_rainbow(a, k, r);

        // peeling: repeated greedy sets, each shaving its 2r-halo
        Arena cur = a;
        std::vector<char> y_union(static_cast<std::size_t>(a.base->vertex_count()), 0);
        std::vector<int> prev;
        bool equality_stop = false;
        std::vector<int> forced;
        for (int iter = 1;; ++iter) {
            auto greedy = greedy_rainbow(cur, r);
            if (static_cast<int>(greedy.size()) >= k)
                return std::vector<int>(greedy.begin(), greedy.begin() + k);
            if (iter > 1 && greedy.size() == prev.size()) {
                equality_stop = true;
                forced = greedy;
                break;
            }
            auto dist_x = arena_bfs(cur, greedy, r);   // X_i = N_r(I_i)
            std::vector<int> x_set;
            for (int v = 0; v < a.base->vertex_count(); ++v)
                if (dist_x[static_cast<std::size_t>(v)] != kUnreached) x_set.push_back(v);
            auto dist_y = arena_bfs(cur, x_set, r);    // Y_i = N_r(X_i)
            for (int v = 0; v < a.base->vertex_count(); ++v)
                if (dist_y[static_cast<std::size_t>(v)] != kUnreached) {
                    y_union[static_cast<std::size_t>(v)] = 1;
                    cur.kill(v);
                }
            if (cur.alive_count == 0) break;
            prev = std::move(greedy);
        }

        Arena rest = a;
        rest.keep_only(y_union);
        if (equality_stop) {
            // the last greedy set is forced into the solution; its colours
            // leave the residual problem
            for (int v : forced) rest.drop_color_class(a.color[static_cast<std::size_t>(v)]);
            auto sub = solve(std::move(rest), k - static_cast<int>(forced.size()), r,
                             std::move(game), rounds_left);
            if (!sub) return std::nullopt;
            auto witness = forced;
            witness.insert(witness.end(), sub->begin(), sub->end());
            std::sort(witness.begin(), witness.end());
            return witness;
        }
        return solve_on_rest(std::move(rest), k, r, std::move(game), rounds_left);
    }

    // the G'' stage: component split or the connected splitter-round case
    std::optional<std::vector<int>> solve_on_rest(Arena rest, int k, int r, GameState game,
                                                  int rounds_left) {
        if (k == 0) return std::vector<int>{};
        if (rest.alive_count == 0) return std::nullopt;

        auto comps = arena_components(rest);
        if (comps.size() > 1) return solve_components(rest, comps, k, r, game, rounds_left);

        // connected: one splitter round
        if (rounds_left <= 0)
            throw BudgetExceeded("splitter game budget l exhausted in the DIS recursion");
        auto alive = rest.alive_vertices();
        auto [sub, ids] = rest.base->induced(alive);
        auto [rad, center_sub] = radius_and_center(sub);
        int diameter = graph_diameter(sub);
        if (diameter > 4 * k * k * r)
            throw PropertyViolation("connected residual graph has diameter " +
                                    std::to_string(diameter) + " > 4k^2 r; instance outside " +
                                    "the analyzed regime");
        (void)rad;
        int center = ids[static_cast<std::size_t>(center_sub)];

        game.restrict_to(alive);
        auto m_set = splitter(game, center);
        game.apply_round(center, m_set);  // shared round for every branch below

        for (const auto& x : rainbow_subsets(rest, m_set, r, k)) {
            Arena a3 = rest;
            // colours of X leave entirely; the r-halo of X loses its colours
            for (int v : x) a3.drop_color_class(rest.color[static_cast<std::size_t>(v)]);
            if (!x.empty()) {
                auto dx = arena_bfs(rest, x, r);
                for (int v = 0; v < rest.base->vertex_count(); ++v)
                    if (dx[static_cast<std::size_t>(v)] != kUnreached)
                        a3.color[static_cast<std::size_t>(v)] = kUncolored;
            }
            auto rec = recolor_by_distance(a3, m_set, r);
            for (int v : m_set) a3.kill(v);
            a3.color = rec.color;
            for (int v = 0; v < a3.base->vertex_count(); ++v)
                if (!a3.alive[static_cast<std::size_t>(v)])
                    a3.color[static_cast<std::size_t>(v)] = kUncolored;

            for (const auto& retained : maximal_valid_subcolorings(rec.palette, r)) {
                Arena a4 = a3;
                std::vector<char> keep_color(rec.palette.size(), 0);
                for (int c : retained) keep_color[static_cast<std::size_t>(c)] = 1;
                for (int v = 0; v < a4.base->vertex_count(); ++v) {
                    int c = a4.color[static_cast<std::size_t>(v)];
                    if (c != kUncolored && !keep_color[static_cast<std::size_t>(c)])
                        a4.color[static_cast<std::size_t>(v)] = kUncolored;
                }
                auto subw = solve(std::move(a4), k - static_cast<int>(x.size()), r, game,
                                  rounds_left - 1);
                if (subw) {
                    auto witness = x;
                    witness.insert(witness.end(), subw->begin(), subw->end());
                    std::sort(witness.begin(), witness.end());
                    return witness;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<std::vector<int>> solve_components(const Arena& rest,
                                                     const std::vector<std::vector<int>>& comps,
                                                     int k, int r, const GameState& game,
                                                     int rounds_left) {
        auto colors = rest.live_colors();
        const int c = static_cast<int>(comps.size());
        std::vector<int> comp_of(static_cast<std::size_t>(rest.base->vertex_count()), -1);
        for (int i = 0; i < c; ++i)
            for (int v : comps[static_cast<std::size_t>(i)])
                comp_of[static_cast<std::size_t>(v)] = i;

        // each colour may only go to a component where it occurs
        std::vector<std::vector<int>> choices;
        long long work = 1;
        for (int col : colors) {
            std::vector<int> occ;
            for (int v = 0; v < rest.base->vertex_count(); ++v)
                if (rest.alive[static_cast<std::size_t>(v)] &&
                    rest.color[static_cast<std::size_t>(v)] == col)
                    occ.push_back(comp_of[static_cast<std::size_t>(v)]);
            std::sort(occ.begin(), occ.end());
            occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
            choices.push_back(std::move(occ));
            work *= static_cast<long long>(choices.back().size());
            if (work > cfg.partition_work_cap)
                throw BudgetExceeded("colour-partition enumeration exceeds the work cap");
        }

        std::vector<std::size_t> idx(colors.size(), 0);
        for (;;) {
            // colour assignment for this partition
            std::vector<int> assigned_comp(colors.size());
            for (std::size_t i = 0; i < colors.size(); ++i)
                assigned_comp[i] = choices[i][idx[i]];

            std::vector<int> witness;
            int total = 0;
            for (int i = 0; i < c && total < k; ++i) {
                Arena comp_arena = rest;
                std::vector<char> mask(static_cast<std::size_t>(rest.base->vertex_count()), 0);
                for (int v : comps[static_cast<std::size_t>(i)])
                    mask[static_cast<std::size_t>(v)] = 1;
                comp_arena.keep_only(mask);
                std::vector<char> color_ok;  // colours assigned to this component
                for (std::size_t ci = 0; ci < colors.size(); ++ci)
                    if (assigned_comp[ci] == i) {
                        if (colors[ci] >= static_cast<int>(color_ok.size()))
                            color_ok.resize(static_cast<std::size_t>(colors[ci]) + 1, 0);
                        color_ok[static_cast<std::size_t>(colors[ci])] = 1;
                    }
                int comp_colors = 0;
                for (int v : comps[static_cast<std::size_t>(i)]) {
                    int col = comp_arena.color[static_cast<std::size_t>(v)];
                    if (col != kUncolored &&
                        (col >= static_cast<int>(color_ok.size()) || !color_ok[static_cast<std::size_t>(col)]))
                        comp_arena.color[static_cast<std::size_t>(v)] = kUncolored;
                }
                comp_colors = static_cast<int>(comp_arena.live_colors().size());

                // largest k'' this component can contribute
                for (int want = std::min(k - total, comp_colors); want >= 1; --want) {
                    auto sub = solve(comp_arena, want, r, game, rounds_left);
                    if (sub) {
                        total += want;
                        witness.insert(witness.end(), sub->begin(), sub->end());
                        break;
                    }
                }
            }
            if (total >= k) {
                witness.resize(static_cast<std::size_t>(k));
                std::sort(witness.begin(), witness.end());
                return witness;
            }

            // next assignment
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
        return std::nullopt;
    }

    static std::vector<std::vector<int>> arena_components(const Arena& a) {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(static_cast<std::size_t>(a.base->vertex_count()), 0);
        for (int v = 0; v < a.base->vertex_count(); ++v) {
            if (!a.alive[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
            auto d = arena_bfs(a, {v}, a.base->vertex_count());
            std::vector<int> comp;
            for (int u = 0; u < a.base->vertex_count(); ++u)
                if (d[static_cast<std::size_t>(u)] != kUnreached) {
                    comp.push_back(u);
                    seen[static_cast<std::size_t>(u)] = 1;
                }
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    static int graph_diameter(const Graph& g) {
        int diam = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int d : bfs_distances(g, v))
                if (d != kUnreached) diam = std::max(diam, d);
        }
        return diam;
    }
};

}  // namespace detail

// The full rainbow Distance Independent Set recursion: greedy peeling,
// component partitioning, one splitter round per connected stage, subset
// branching over the removed set, distance-vector recolouring and valid
// sub-colourings. Returns a verified witness or nothing.
inline std::optional<std::vector<int>> rainbow_dis(const DISInstance& inst,
                                                   const SplitterHandle& splitter = paper_splitter(),
                                                   const DisConfig& cfg = {}) {
    if (inst.k < 0 || inst.r < 1) throw InputError("need k >= 0 and r >= 1");
    if (inst.k == 0) return std::vector<int>{};
    const int radius = std::max(1, 4 * inst.k * inst.k * inst.r);
    GameState game(inst.colored.graph, {inst.budget.rounds, inst.budget.removal, radius});
    detail::Solver solver{cfg, splitter, radius};
    auto witness = solver.solve(detail::Arena::full(inst.colored), inst.k, inst.r, std::move(game),
                                inst.budget.rounds);
    if (witness) verify_rainbow_witness(inst.colored, *witness, inst.k, inst.r);
    return witness;
}

// Plain DIS via the lexicographic-product reduction: G has an r-independent
// k-set inside W iff G * K_k, coloured on copies of W only, has a rainbow
// one. The witness projects back to V(G).
inline std::optional<std::vector<int>> dis(const Graph& g, const std::vector<int>& w_candidates,
                                           int k, int r, DisBudgets budgets,
                                           const DisConfig& cfg = {}) {
    if (k < 0 || r < 1) throw InputError("need k >= 0 and r >= 1");
    if (k == 0) return std::vector<int>{};
    std::vector<int> w_sorted(w_candidates);
    std::sort(w_sorted.begin(), w_sorted.end());
    w_sorted.erase(std::unique(w_sorted.begin(), w_sorted.end()), w_sorted.end());
    for (int v : w_sorted) g.check_vertex(v);
    if (w_sorted.empty()) return std::nullopt;

    auto product = lex_product_colored(g, k);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (!std::binary_search(w_sorted.begin(), w_sorted.end(), x))
            for (int y = 0; y < k; ++y)
                product.color_of[static_cast<std::size_t>(x * k + y)] = kUncolored;

    DISInstance inst;
    inst.colored = std::move(product);
    inst.k = k;
    inst.r = r;
    inst.budget = {budgets.rounds, budgets.removal * k};
    auto witness = rainbow_dis(inst, paper_splitter(), cfg);
    if (!witness) return std::nullopt;
    std::vector<int> projected;
    projected.reserve(witness->size());
    for (int v : *witness) projected.push_back(v / k);
    std::sort(projected.begin(), projected.end());
    verify_plain_witness(g, w_sorted, projected, k, r);
    return projected;
}

}  // namespace nwd
