#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nwd/colored_graph.hpp"
#include "nwd/errors.hpp"
#include "nwd/formula.hpp"
#include "nwd/graph.hpp"
#include "nwd/indepset.hpp"

namespace nwd {

using BigInt = boost::multiprecision::cpp_int;

// f_q(l) = (4q)^(q+l), the largest distance threshold of q-rank-l formulas
inline BigInt f_q(int q, int l) {
    if (q < 1 || l < 0) throw InputError("f_q needs q >= 1 and l >= 0");
    return boost::multiprecision::pow(BigInt(4 * q), static_cast<unsigned>(q + l));
}

// Coloured graph seen as a relational structure: symmetric irreflexive E
// plus named unary predicates (overlap allowed, unlike colour classes).
struct Structure {
    Graph graph;
    std::map<std::string, std::vector<int>> predicates;  // sorted vertex lists

    Structure() = default;
    explicit Structure(Graph g) : graph(std::move(g)) {}

    static Structure from_colored(const ColoredGraph& cg) {
        Structure s(cg.graph);
        for (int v = 0; v < cg.graph.vertex_count(); ++v) {
            int c = cg.color_of[static_cast<std::size_t>(v)];
            if (c != kUncolored) s.predicates["P" + std::to_string(c)].push_back(v);
        }
        return s;
    }

    bool holds(const std::string& pred, int v) const {
        auto it = predicates.find(pred);
        if (it == predicates.end()) return false;  // absent predicate is empty
        return std::binary_search(it->second.begin(), it->second.end(), v);
    }
};

namespace detail {

struct EvalContext {
    const Structure* s;
    std::map<int, std::vector<int>> dist_cache;

    const std::vector<int>& dist_from(int v) {
        auto it = dist_cache.find(v);
        if (it == dist_cache.end()) it = dist_cache.emplace(v, bfs_distances(s->graph, v)).first;
        return it->second;
    }

    int lookup(const std::map<std::string, int>& env, const std::string& var) {
        auto it = env.find(var);
        if (it == env.end()) throw InputError("unbound variable '" + var + "'");
        return it->second;
    }

    bool eval(const Formula& f, std::map<std::string, int>& env) {
        switch (f->kind) {
            case FKind::True:
                return true;
            case FKind::False:
                return false;
            case FKind::Eq:
                return lookup(env, f->var_a) == lookup(env, f->var_b);
            case FKind::Edge:
                return s->graph.has_edge(lookup(env, f->var_a), lookup(env, f->var_b));
            case FKind::Pred:
                return s->holds(f->pred, lookup(env, f->var_a));
            case FKind::DistLE: {
                int u = lookup(env, f->var_a), v = lookup(env, f->var_b);
                int d = dist_from(u)[static_cast<std::size_t>(v)];
                return d != kUnreached && d <= f->bound;
            }
            case FKind::Not:
                return !eval(f->kids[0], env);
            case FKind::And:
                for (const auto& k : f->kids)
                    if (!eval(k, env)) return false;
                return true;
            case FKind::Or:
                for (const auto& k : f->kids)
                    if (eval(k, env)) return true;
                return false;
            case FKind::Exists:
            case FKind::Forall: {
                auto saved = env.find(f->var_a) != env.end()
                                 ? std::optional<int>(env[f->var_a])
                                 : std::nullopt;
                bool result = f->kind == FKind::Forall;
                for (int v = 0; v < s->graph.vertex_count(); ++v) {
                    env[f->var_a] = v;
                    bool x = eval(f->kids[0], env);
                    if (f->kind == FKind::Exists && x) {
                        result = true;
                        break;
                    }
                    if (f->kind == FKind::Forall && !x) {
                        result = false;
                        break;
                    }
                }
                if (saved)
                    env[f->var_a] = *saved;
                else
                    env.erase(f->var_a);
                return result;
            }
        }
        throw InputError("unreachable formula kind");
    }
};

}  // namespace detail

// naive recursive evaluation; distance atoms answered from cached BFS
inline bool eval(const Formula& f, const Structure& a, std::map<std::string, int> assignment) {
    for (auto& [var, v] : assignment) a.graph.check_vertex(v);
    detail::EvalContext ctx{&a, {}};
    return ctx.eval(f, assignment);
}

// q-rank check: quantifier rank <= l and every distance atom under i
// quantifiers bounded by (4q)^(q+l-i)
inline bool q_rank_check(const Formula& f, int q, int l) {
    if (q < 1 || l < 0) throw InputError("q_rank_check needs q >= 1 and l >= 0");
    if (quantifier_rank(f) > l) return false;
    auto rec = [&](auto&& self, const Formula& g, int depth) -> bool {
        switch (g->kind) {
            case FKind::DistLE:
                return BigInt(g->bound) <=
                       boost::multiprecision::pow(BigInt(4 * q), static_cast<unsigned>(q + l - depth));
            case FKind::Not:
                return self(self, g->kids[0], depth);
            case FKind::And:
            case FKind::Or:
                for (const auto& k : g->kids)
                    if (!self(self, k, depth)) return false;
                return true;
            case FKind::Exists:
            case FKind::Forall:
                return self(self, g->kids[0], depth + 1);
            default:
                return true;
        }
    };
    return rec(rec, f, 0);
}

namespace detail {

// partial d-isomorphism: the tuple map is well defined, injective, preserves
// atoms over the union vocabulary and distances up to d
inline bool partial_d_isomorphism(const Structure& a, const std::vector<int>& ta,
                                  const Structure& b, const std::vector<int>& tb,
                                  const BigInt& d, EvalContext& ca, EvalContext& cb) {
    const std::size_t k = ta.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            if ((ta[i] == ta[j]) != (tb[i] == tb[j])) return false;
            if (i != j &&
                a.graph.has_edge(ta[i], ta[j]) != b.graph.has_edge(tb[i], tb[j]))
                return false;
            int da = ca.dist_from(ta[i])[static_cast<std::size_t>(ta[j])];
            int db = cb.dist_from(tb[i])[static_cast<std::size_t>(tb[j])];
            bool fara = da == kUnreached || BigInt(da) > d;
            bool farb = db == kUnreached || BigInt(db) > d;
            if (fara != farb) return false;
            if (!fara && da != db) return false;
        }
    for (const auto& [name, members] : a.predicates)
        for (std::size_t i = 0; i < k; ++i)
            if (a.holds(name, ta[i]) != b.holds(name, tb[i])) return false;
    for (const auto& [name, members] : b.predicates)
        for (std::size_t i = 0; i < k; ++i)
            if (a.holds(name, ta[i]) != b.holds(name, tb[i])) return false;
    return true;
}

}  // namespace detail

// Exhaustive search of the l-round EF+ game on (A, a, B, b): Duplicator must
// keep a partial f_q(l-i)-isomorphism after every round i. Guarded sizes.
inline bool ef_plus_equivalent(const Structure& a, std::vector<int> ta, const Structure& b,
                               std::vector<int> tb, int q, int l) {
    if (q < 1 || l < 0 || l > q) throw InputError("ef game needs q >= 1 and 0 <= l <= q");
    if (a.graph.vertex_count() > 8 || b.graph.vertex_count() > 8)
        throw OracleGuardError("ef game guard: need |V| <= 8 on both sides");
    if (ta.size() != tb.size()) throw InputError("tuple length mismatch");
    for (int v : ta) a.graph.check_vertex(v);
    for (int v : tb) b.graph.check_vertex(v);

    detail::EvalContext ca{&a, {}}, cb{&b, {}};
    std::vector<BigInt> thresholds;
    for (int j = 0; j <= l; ++j) thresholds.push_back(f_q(q, j));

    std::map<std::vector<int>, bool> memo;
    auto key_of = [](int j, const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> key{j, -1};
        key.insert(key.end(), x.begin(), x.end());
        key.push_back(-1);
        key.insert(key.end(), y.begin(), y.end());
        return key;
    };
    auto rec = [&](auto&& self, std::vector<int>& x, std::vector<int>& y, int j) -> bool {
        if (!detail::partial_d_isomorphism(a, x, b, y, thresholds[static_cast<std::size_t>(j)],
                                           ca, cb))
            return false;
        if (j == 0) return true;
        auto key = key_of(j, x, y);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = true;
        for (int va = 0; va < a.graph.vertex_count() && ok; ++va) {  // Spoiler in A
            bool answered = false;
            for (int vb = 0; vb < b.graph.vertex_count() && !answered; ++vb) {
                x.push_back(va);
                y.push_back(vb);
                answered = self(self, x, y, j - 1);
                x.pop_back();
                y.pop_back();
            }
            ok = answered;
        }
        for (int vb = 0; vb < b.graph.vertex_count() && ok; ++vb) {  // Spoiler in B
            bool answered = false;
            for (int va = 0; va < a.graph.vertex_count() && !answered; ++va) {
                x.push_back(va);
                y.push_back(vb);
                answered = self(self, x, y, j - 1);
                x.pop_back();
                y.pop_back();
            }
            ok = answered;
        }
        memo.emplace(std::move(key), ok);
        return ok;
    };
    return rec(rec, ta, tb, l);
}

namespace detail {

inline std::string tuple_var(std::size_t i) { return "x" + std::to_string(i + 1); }

// exact-distance constraint encoded with <= atoms only
inline Formula exact_distance(const std::string& x, const std::string& y, long long d) {
    if (d == 0) return f_distle(x, y, 0);
    return f_and({f_distle(x, y, d), f_not(f_distle(x, y, d - 1))});
}

struct HintikkaBuilder {
    const Structure* a;
    int q;
    EvalContext ctx;
    std::map<std::pair<std::vector<int>, int>, Formula> memo;

    // theta: the distance profile of the tuple up to f_q(l)
    Formula theta(const std::vector<int>& tuple, int l) {
        BigInt cap = f_q(q, l);
        std::vector<Formula> parts;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                int d = ctx.dist_from(tuple[i])[static_cast<std::size_t>(tuple[j])];
                if (d != kUnreached && BigInt(d) <= cap)
                    parts.push_back(exact_distance(tuple_var(i), tuple_var(j), d));
                else
                    parts.push_back(
                        f_not(f_distle(tuple_var(i), tuple_var(j), static_cast<long long>(cap))));
            }
        return f_and(std::move(parts));
    }

    // complete atomic description of the tuple over A's vocabulary
    Formula atomic_type(const std::vector<int>& tuple) {
        std::vector<Formula> parts;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                auto eq = f_eq(tuple_var(i), tuple_var(j));
                parts.push_back(tuple[i] == tuple[j] ? eq : f_not(eq));
                auto edge = f_edge(tuple_var(i), tuple_var(j));
                parts.push_back(a->graph.has_edge(tuple[i], tuple[j]) ? edge : f_not(edge));
            }
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (const auto& [name, members] : a->predicates) {
                auto at = f_pred(name, tuple_var(i));
                parts.push_back(a->holds(name, tuple[i]) ? at : f_not(at));
            }
        return f_and(std::move(parts));
    }

    Formula build(std::vector<int>& tuple, int l) {
        auto key = std::make_pair(tuple, l);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Formula result;
        if (l == 0) {
            result = f_and({theta(tuple, 0), atomic_type(tuple)});
        } else {
            std::vector<Formula> parts{theta(tuple, l)};
            std::vector<Formula> branches;
            for (int v = 0; v < a->graph.vertex_count(); ++v) {
                tuple.push_back(v);
                branches.push_back(build(tuple, l - 1));
                tuple.pop_back();
            }
            auto next_var = tuple_var(tuple.size());
            std::vector<Formula> exist_parts;
            for (const auto& br : branches) exist_parts.push_back(f_exists(next_var, br));
            parts.insert(parts.end(), exist_parts.begin(), exist_parts.end());
            parts.push_back(f_forall(next_var, f_or(branches)));
            result = f_and(std::move(parts));
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

}  // namespace detail

// Hintikka formula of the pointed structure: satisfied by exactly the
// (q,l)+-equivalent tuples. Guarded sizes; thresholds stay within int64.
inline Formula hintikka(const Structure& a, const std::vector<int>& tuple, int q, int l) {
    if (q < 1 || l < 0 || l > q) throw InputError("hintikka needs q >= 1 and 0 <= l <= q");
    if (a.graph.vertex_count() > 8 || q > 3)
        throw OracleGuardError("hintikka guard: need |V| <= 8 and q <= 3");
    for (int v : tuple) a.graph.check_vertex(v);
    detail::HintikkaBuilder builder{&a, q, detail::EvalContext{&a, {}}, {}};
    std::vector<int> t(tuple);
    return builder.build(t, l);
}

// distance formula delta_{<=d}(x,y) in plain FO, by threshold halving
inline Formula distance_formula(const std::string& x, const std::string& y, long long d,
                                int& fresh) {
    if (d < 0) throw InputError("negative distance");
    if (d == 0) return f_eq(x, y);
    if (d == 1) return f_or({f_eq(x, y), f_edge(x, y)});
    std::string z = "_d" + std::to_string(fresh++);
    auto left = distance_formula(x, z, d / 2, fresh);
    auto right = distance_formula(z, y, d - d / 2, fresh);
    return f_exists(z, f_and({left, right}));
}

// FO translation: replace every distance atom by the distance formula
inline Formula fo_translation(const Formula& f, int& fresh) {
    switch (f->kind) {
        case FKind::DistLE:
            return distance_formula(f->var_a, f->var_b, f->bound, fresh);
        case FKind::Not:
            return f_not(fo_translation(f->kids[0], fresh));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> kids;
            for (const auto& k : f->kids) kids.push_back(fo_translation(k, fresh));
            return f->kind == FKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
        }
        case FKind::Exists:
            return f_exists(f->var_a, fo_translation(f->kids[0], fresh));
        case FKind::Forall:
            return f_forall(f->var_a, fo_translation(f->kids[0], fresh));
        default:
            return f;
    }
}

// (q,r)-independence sentence: q vertices pairwise farther than 2r, each
// satisfying a quantifier-free one-variable formula.
struct IndependenceSentence {
    int q = 1;
    int r = 1;
    Formula phi;  // quantifier-free, one free variable
};

inline bool eval_independence_sentence(const ColoredGraph& cg, const IndependenceSentence& psi,
                                       DisBudgets budgets, const DisConfig& cfg = {}) {
    if (psi.q < 1 || psi.r < 1) throw InputError("independence sentence needs q, r >= 1");
    if (quantifier_rank(psi.phi) != 0)
        throw InputError("independence sentence core must be quantifier-free");
    auto fv = free_variables(psi.phi);
    if (fv.size() > 1) throw InputError("independence sentence core must have one free variable");
    std::string var = fv.empty() ? "x" : *fv.begin();

    auto structure = Structure::from_colored(cg);
    std::vector<int> candidates;
    for (int v = 0; v < cg.graph.vertex_count(); ++v)
        if (eval(psi.phi, structure, {{var, v}})) candidates.push_back(v);
    return dis(cg.graph, candidates, psi.q, 2 * psi.r, budgets, cfg).has_value();
}

// Element removal with distance marks: G minus the removed tuple, expanded
// with predicates Q_<i>_<j> marking original-graph distance i to the j-th
// removed vertex (1-based j), materialized sparsely for i up to
// min(f_q(l), |V|).
struct MarkedStructure {
    Structure structure;
    std::vector<int> orig_of_new;  // new id -> original id
    std::vector<int> new_of_orig;  // original id -> new id, -1 for removed
};

inline MarkedStructure remove_and_mark(const Structure& s, const std::vector<int>& removed, int q,
                                       int l) {
    for (int v : removed) s.graph.check_vertex(v);
    {
        std::vector<int> sorted(removed);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("removed vertices must be distinct");
    }
    BigInt cap = f_q(q, l);
    const int n = s.graph.vertex_count();
    long long bound = cap > n ? n : static_cast<long long>(cap);

    MarkedStructure out;
    out.new_of_orig.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> is_removed(static_cast<std::size_t>(n), 0);
    for (int v : removed) is_removed[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!is_removed[static_cast<std::size_t>(v)]) {
            out.new_of_orig[static_cast<std::size_t>(v)] = static_cast<int>(out.orig_of_new.size());
            out.orig_of_new.push_back(v);
        }

    auto [sub, ids] = s.graph.induced(out.orig_of_new);
    out.structure = Structure(std::move(sub));
    for (const auto& [name, members] : s.predicates) {
        std::vector<int> remapped;
        for (int v : members)
            if (out.new_of_orig[static_cast<std::size_t>(v)] >= 0)
                remapped.push_back(out.new_of_orig[static_cast<std::size_t>(v)]);
        if (!remapped.empty()) out.structure.predicates[name] = std::move(remapped);
    }
    for (std::size_t j = 0; j < removed.size(); ++j) {
        auto dist = bfs_distances(s.graph, removed[j]);
        for (int v = 0; v < n; ++v) {
            if (is_removed[static_cast<std::size_t>(v)]) continue;
            int d = dist[static_cast<std::size_t>(v)];
            if (d == kUnreached || d < 1 || d > bound) continue;
            out.structure
                .predicates["Q_" + std::to_string(d) + "_" + std::to_string(j + 1)]
                .push_back(out.new_of_orig[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

}  // namespace nwd
