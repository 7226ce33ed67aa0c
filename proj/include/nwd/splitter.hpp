#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nwd/errors.hpp"
#include "nwd/generators.hpp"
#include "nwd/graph.hpp"

namespace nwd {

struct GameParams {
    int rounds;   // l
    int removal;  // m
    int radius;   // r
};

struct GameRound {
    int connector_v;
    std::vector<int> splitter_w;  // ascending
    int size_after;
};

// State of an (l,m,r)-splitter game. The current graph is a vertex subset of
// the original with induced edges; one BFS tree per past round is kept so
// Splitter's answer can be assembled from stored tree paths.
class GameState {
public:
    GameState(Graph g, GameParams params)
        : graph_(std::move(g)),
          params_(params),
          alive_(static_cast<std::size_t>(graph_.vertex_count()), 1),
          alive_count_(graph_.vertex_count()) {
        if (params.rounds < 1 || params.removal < 1 || params.radius < 1)
            throw InputError("game parameters must be positive");
    }

    const Graph& original() const { return graph_; }
    const GameParams& params() const { return params_; }
    int alive_count() const { return alive_count_; }
    bool is_alive(int v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
    const std::vector<GameRound>& history() const { return history_; }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(alive_count_));
        for (int v = 0; v < graph_.vertex_count(); ++v)
            if (alive_[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    // Replace the current graph by an induced subgraph (superset removal;
    // the strategy stays winning).
    void restrict_to(const std::vector<int>& subset) {
        for (int v : subset)
            if (!is_alive(v)) throw InputError("restriction is not a subset of the current graph");
        std::fill(alive_.begin(), alive_.end(), 0);
        for (int v : subset) alive_[static_cast<std::size_t>(v)] = 1;
        alive_count_ = static_cast<int>(subset.size());
    }

    // Splitter's answer to Connector picking v: the union over past rounds j
    // of the stored tree path from v up to the root v_j, intersected with
    // N_r(v) in the current graph. First round: {v}. The caller enforces the
    // size budget. Does not modify the state.
    std::vector<int> splitter_move(int v) const {
        require_alive(v);
        auto [ball, parent] = bfs_tree(v);
        if (history_.empty()) return {v};
        std::vector<char> in_ball(static_cast<std::size_t>(graph_.vertex_count()), 0);
        for (int x : ball) in_ball[static_cast<std::size_t>(x)] = 1;
        std::vector<int> w;
        for (const auto& tree : trees_) {
            if (tree[static_cast<std::size_t>(v)].depth < 0)
                throw PropertyViolation("vertex " + std::to_string(v) +
                                        " escaped an earlier round's ball");
            int x = v;
            while (x != -1) {  // walk to the round's root
                if (in_ball[static_cast<std::size_t>(x)]) w.push_back(x);
                x = tree[static_cast<std::size_t>(x)].parent;
            }
        }
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        return w;
    }

    // Apply a full round: G_{i+1} = G_i[N_r(v) \ W]. Stores the BFS tree of
    // this round for later path extractions.
    void apply_round(int v, const std::vector<int>& w) {
        require_alive(v);
        if (static_cast<int>(w.size()) > params_.removal)
            throw BudgetExceeded("splitter set of size " + std::to_string(w.size()) +
                                 " exceeds budget m=" + std::to_string(params_.removal));
        auto [ball, parent] = bfs_tree(v);
        trees_.push_back(std::move(parent));
        std::fill(alive_.begin(), alive_.end(), 0);
        alive_count_ = 0;
        for (int x : ball) {
            alive_[static_cast<std::size_t>(x)] = 1;
            ++alive_count_;
        }
        for (int x : w) {
            if (alive_[static_cast<std::size_t>(x)]) {
                alive_[static_cast<std::size_t>(x)] = 0;
                --alive_count_;
            }
        }
        GameRound round;
        round.connector_v = v;
        round.splitter_w = w;
        std::sort(round.splitter_w.begin(), round.splitter_w.end());
        round.size_after = alive_count_;
        history_.push_back(std::move(round));
    }

private:
    struct TreeNode {
        int parent = -1;  // -1 at the root and outside the tree
        int depth = -1;   // -1 outside the tree
    };

    void require_alive(int v) const {
        graph_.check_vertex(v);
        if (!is_alive(v)) throw InputError("vertex " + std::to_string(v) + " not in current graph");
    }

    // BFS in the current graph to depth r; neighbours visited ascending by
    // id, so the tree (and thus every extracted path) is deterministic.
    std::pair<std::vector<int>, std::vector<TreeNode>> bfs_tree(int root) const {
        std::vector<TreeNode> tree(static_cast<std::size_t>(graph_.vertex_count()));
        std::vector<int> ball{root}, frontier{root};
        tree[static_cast<std::size_t>(root)].depth = 0;
        for (int level = 1; level <= params_.radius && !frontier.empty(); ++level) {
            std::vector<int> next;
            for (int x : frontier)
                for (int y : graph_.neighbors(x)) {
                    if (!alive_[static_cast<std::size_t>(y)] ||
                        tree[static_cast<std::size_t>(y)].depth >= 0)
                        continue;
                    tree[static_cast<std::size_t>(y)].depth = level;
                    tree[static_cast<std::size_t>(y)].parent = x;
                    ball.push_back(y);
                    next.push_back(y);
                }
            frontier = std::move(next);
        }
        std::sort(ball.begin(), ball.end());
        return {std::move(ball), std::move(tree)};
    }

    Graph graph_;
    GameParams params_;
    std::vector<char> alive_;
    int alive_count_;
    std::vector<GameRound> history_;
    std::vector<std::vector<TreeNode>> trees_;
};

// Connector strategy: picks a vertex of the current graph.
using ConnectorStrategy = std::function<int(const GameState&)>;

inline ConnectorStrategy random_connector(std::uint64_t seed) {
    auto rng = std::make_shared<Rng>(seed);
    return [rng](const GameState& s) {
        auto alive = s.alive_vertices();
        return alive[rng->next_below(alive.size())];
    };
}

// Centre of the largest component of the current graph (ties: the component
// with the smallest vertex, then the smallest-id centre).
inline ConnectorStrategy center_connector() {
    return [](const GameState& s) {
        auto [sub, ids] = s.original().induced(s.alive_vertices());
        auto comps = components(sub);
        std::size_t best = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[best].size()) best = i;
        auto [comp_graph, comp_ids] = sub.induced(comps[best]);
        auto [rad, center] = radius_and_center(comp_graph);
        (void)rad;
        return ids[static_cast<std::size_t>(
            comp_ids[static_cast<std::size_t>(center)])];
    };
}

struct Transcript {
    bool splitter_wins = false;
    std::vector<GameRound> rounds;
};

// Play the (l,m,r)-game: Connector moves, Splitter answers with the stored
// strategy. Splitter wins when the graph empties within l rounds.
inline Transcript play_game(const Graph& g, GameParams params, const ConnectorStrategy& connector) {
    GameState state(g, params);
    Transcript t;
    for (int round = 0; round < params.rounds && state.alive_count() > 0; ++round) {
        int v = connector(state);
        auto w = state.splitter_move(v);
        state.apply_round(v, w);
        t.rounds.push_back(state.history().back());
        if (state.alive_count() == 0) {
            t.splitter_wins = true;
            return t;
        }
    }
    t.splitter_wins = state.alive_count() == 0;
    return t;
}

// Re-run a transcript's connector moves through the strategy; the recomputed
// splitter sets and survivor counts must match exactly.
inline bool replay_matches(const Graph& g, GameParams params, const Transcript& t) {
    GameState state(g, params);
    for (const auto& round : t.rounds) {
        if (!state.is_alive(round.connector_v)) return false;
        auto w = state.splitter_move(round.connector_v);
        if (w != round.splitter_w) return false;
        state.apply_round(round.connector_v, w);
        if (state.history().back().size_after != round.size_after) return false;
    }
    return true;
}

// Exhaustive game solver: does Splitter (moving any W of size <= m inside
// the ball) win against optimal Connector within l rounds? Tiny graphs only.
inline bool splitter_wins_exhaustive(const Graph& g, GameParams params) {
    if (g.vertex_count() > 10)
        throw OracleGuardError("exhaustive splitter guard: need |V| <= 10");
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;

    std::vector<std::vector<char>> memo(
        static_cast<std::size_t>(params.rounds + 1),
        std::vector<char>(static_cast<std::size_t>(1) << n, 0));  // 0 unknown, 1 win, 2 loss

    auto ball = [&](std::uint32_t alive, int v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = seen;
        for (int level = 1; level <= params.radius && frontier; ++level) {
            std::uint32_t next = 0;
            for (int x = 0; x < n; ++x)
                if (frontier & (1u << x)) next |= nbr[static_cast<std::size_t>(x)] & alive;
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    };

    // Splitter wins from `alive` with `left` rounds remaining iff for every
    // Connector vertex there is a W that empties or wins recursively.
    auto solve = [&](auto&& self, std::uint32_t alive, int left) -> bool {
        if (alive == 0) return true;
        if (left == 0) return false;
        char& slot = memo[static_cast<std::size_t>(left)][alive];
        if (slot) return slot == 1;
        bool all_good = true;
        for (int v = 0; v < n && all_good; ++v) {
            if (!(alive & (1u << v))) continue;
            std::uint32_t b = ball(alive, v);
            // enumerate W subsets of b with |W| <= m
            bool some_w = false;
            std::vector<int> members;
            for (int x = 0; x < n; ++x)
                if (b & (1u << x)) members.push_back(x);
            const std::uint32_t subsets = 1u << members.size();
            for (std::uint32_t sel = 0; sel < subsets && !some_w; ++sel) {
                if (std::popcount(sel) > params.removal) continue;
                std::uint32_t w = 0;
                for (std::size_t i = 0; i < members.size(); ++i)
                    if (sel & (1u << i)) w |= 1u << members[i];
                if (self(self, b & ~w, left - 1)) some_w = true;
            }
            all_good = some_w;
        }
        slot = all_good ? 1 : 2;
        return all_good;
    };
    return solve(solve, (n == 32 ? ~0u : (1u << n) - 1u), params.rounds);
}

// Connector playing optimally against an optimal Splitter, via the
// exhaustive solver: picks the smallest vertex from which no Splitter answer
// leads to a winning position, if one exists. Tiny graphs only.
inline ConnectorStrategy adversarial_connector() {
    return [](const GameState& s) {
        if (s.original().vertex_count() > 10)
            throw OracleGuardError("adversarial connector guard: need |V| <= 10");
        auto alive = s.alive_vertices();
        const int rounds_left = s.params().rounds - static_cast<int>(s.history().size());
        auto [sub, ids] = s.original().induced(alive);
        for (int v_sub = 0; v_sub < sub.vertex_count(); ++v_sub) {
            auto ball_vec = bfs_neighbourhood(sub, v_sub, s.params().radius).vertices;
            bool splitter_can_win = false;
            const std::uint32_t subsets = 1u << ball_vec.size();
            for (std::uint32_t sel = 0; sel < subsets && !splitter_can_win; ++sel) {
                if (std::popcount(sel) > s.params().removal) continue;
                std::vector<int> keep;
                for (std::size_t i = 0; i < ball_vec.size(); ++i)
                    if (!(sel & (1u << i))) keep.push_back(ball_vec[i]);
                auto [next_sub, next_ids] = sub.induced(keep);
                (void)next_ids;
                if (next_sub.vertex_count() == 0)
                    splitter_can_win = true;
                else if (rounds_left - 1 > 0 &&
                         splitter_wins_exhaustive(
                             next_sub, {rounds_left - 1, s.params().removal, s.params().radius}))
                    splitter_can_win = true;
            }
            if (!splitter_can_win) return ids[static_cast<std::size_t>(v_sub)];
        }
        return alive.front();
    };
}

inline std::string format_set(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    out += "}";
    return out;
}

}  // namespace nwd
