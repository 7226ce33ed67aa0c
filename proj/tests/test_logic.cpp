#include <catch2/catch_amalgamated.hpp>

#include "nwd/generators.hpp"
#include "nwd/logic.hpp"

using namespace nwd;

namespace {

// all graphs on exactly n labelled vertices
std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

Formula paper_rank_example() {
    // exists x exists y ( dist(x,y) <= 12^5 and
    //   exists z ( dist(x,z) <= 12^6 and
    //     forall z' ( not dist(z,z') <= 12^4 or dist(z',y) <= 12^4 ) ) )
    long long p4 = 12LL * 12 * 12 * 12;
    long long p5 = p4 * 12;
    long long p6 = p5 * 12;
    auto inner = f_forall(
        "zp", f_or({f_not(f_distle("z", "zp", p4)), f_distle("zp", "y", p4)}));
    auto mid = f_exists("z", f_and({f_distle("x", "z", p6), inner}));
    return f_exists("x", f_exists("y", f_and({f_distle("x", "y", p5), mid})));
}

}  // namespace

TEST_CASE("f_q values") {
    CHECK(f_q(3, 6) == BigInt("5159780352"));  // 12^9
    CHECK(f_q(1, 0) == 4);
    for (int q = 1; q <= 4; ++q)
        for (int l = 0; l <= 5; ++l) CHECK(f_q(q, l + 1) == 4 * q * f_q(q, l));
    CHECK_THROWS_AS(f_q(0, 1), InputError);
}

TEST_CASE("q-rank check") {
    auto phi = paper_rank_example();
    CHECK(quantifier_rank(phi) == 4);
    CHECK(q_rank_check(phi, 3, 6));
    CHECK_FALSE(q_rank_check(phi, 3, 5));

    // boundary at zero quantifiers
    long long cap = static_cast<long long>(f_q(2, 2));
    CHECK(q_rank_check(f_distle("x", "y", cap), 2, 2));
    CHECK_FALSE(q_rank_check(f_distle("x", "y", cap + 1), 2, 2));

    // no distance atoms: only the quantifier rank matters
    auto fo = parse_formula("(exists x (forall y (E x y)))");
    CHECK(q_rank_check(fo, 1, 2));
    CHECK_FALSE(q_rank_check(fo, 1, 1));
}

TEST_CASE("evaluation") {
    Structure p3(make_path(3));
    // dominating set formula
    auto dom = parse_formula(
        "(forall y (or (= x1 y) (= x2 y) (E x1 y) (E x2 y)))");
    CHECK(eval(dom, p3, {{"x1", 0}, {"x2", 2}}));
    CHECK(eval(dom, p3, {{"x1", 1}, {"x2", 1}}));
    CHECK_FALSE(eval(dom, p3, {{"x1", 0}, {"x2", 0}}));

    CHECK(eval(parse_formula("(exists x (= x x))"), p3, {}));

    Structure p5(make_path(5));
    CHECK_FALSE(eval(parse_formula("(distle x y 2)"), p5, {{"x", 0}, {"y", 3}}));
    CHECK(eval(parse_formula("(distle x y 3)"), p5, {{"x", 0}, {"y", 3}}));

    CHECK_THROWS_AS(eval(parse_formula("(E x y)"), p3, {{"x", 0}}), InputError);

    // colour predicates via the coloured-graph view
    auto cg = ColoredGraph(make_path(3), {0, kUncolored, 1});
    auto s = Structure::from_colored(cg);
    CHECK(eval(parse_formula("(P0 x)"), s, {{"x", 0}}));
    CHECK_FALSE(eval(parse_formula("(P0 x)"), s, {{"x", 1}}));
    CHECK(eval(parse_formula("(P1 x)"), s, {{"x", 2}}));
}

TEST_CASE("ef game basics") {
    Structure p2(make_path(2)), p3(make_path(3));
    CHECK(ef_plus_equivalent(p3, {1}, p3, {1}, 2, 2));

    // endpoint of P_2 vs middle of P_3: spoiler plays both neighbours
    CHECK_FALSE(ef_plus_equivalent(p2, {0}, p3, {1}, 2, 2));

    // differing atomic types fail already at l = 0
    CHECK_FALSE(ef_plus_equivalent(p2, {0, 1}, p3, {0, 0}, 1, 0));

    CHECK_THROWS_AS(ef_plus_equivalent(Structure(make_grid(3, 3)), {0},
                                       Structure(make_grid(3, 3)), {0}, 1, 1),
                    OracleGuardError);
}

TEST_CASE("ef game is reflexive and symmetric; equivalence fixes profiles") {
    Rng rng(88);
    for (int it = 0; it < 25; ++it) {
        int n = rng.next_int(1, 5);
        auto a = make_random_sparse(n, rng.next_int(0, 2 * n), rng);
        auto b = make_random_sparse(n, rng.next_int(0, 2 * n), rng);
        Structure sa(a), sb(b);
        int q = rng.next_int(1, 2);
        int l = rng.next_int(0, q);
        std::vector<int> ta{rng.next_int(0, n - 1), rng.next_int(0, n - 1)};
        std::vector<int> tb{rng.next_int(0, n - 1), rng.next_int(0, n - 1)};
        CHECK(ef_plus_equivalent(sa, ta, sa, ta, q, l));
        bool ab = ef_plus_equivalent(sa, ta, sb, tb, q, l);
        CHECK(ab == ef_plus_equivalent(sb, tb, sa, ta, q, l));
        if (ab) {
            // distance profiles truncated at f_q(l) coincide
            auto da = bfs_distances(a, ta[0])[ta[1]];
            auto db = bfs_distances(b, tb[0])[tb[1]];
            BigInt cap = f_q(q, l);
            bool fara = da == kUnreached || BigInt(da) > cap;
            bool farb = db == kUnreached || BigInt(db) > cap;
            CHECK(fara == farb);
            if (!fara) CHECK(da == db);
        }
    }
}

TEST_CASE("hintikka formula characterises the equivalence class") {
    // the structure satisfies its own formula
    Structure p3(make_path(3));
    for (int v = 0; v < 3; ++v)
        for (int q = 1; q <= 2; ++q)
            for (int l = 0; l <= q; ++l) {
                auto phi = hintikka(p3, {v}, q, l);
                CHECK(eval(phi, p3, {{"x1", v}}));
            }

    // cross-validation against the game on all graphs with up to 3 vertices
    std::vector<Graph> graphs;
    for (int n = 1; n <= 3; ++n)
        for (auto& g : all_graphs(n)) graphs.push_back(g);
    for (const auto& ga : graphs)
        for (const auto& gb : graphs) {
            Structure sa(ga), sb(gb);
            for (int q = 1; q <= 2; ++q)
                for (int l = 0; l <= q; ++l)
                    for (int a = 0; a < ga.vertex_count(); ++a) {
                        auto phi = hintikka(sa, {a}, q, l);
                        for (int b = 0; b < gb.vertex_count(); ++b) {
                            bool game = ef_plus_equivalent(sa, {a}, sb, {b}, q, l);
                            bool form = eval(phi, sb, {{"x1", b}});
                            CHECK(game == form);
                        }
                    }
        }

    CHECK_THROWS_AS(hintikka(Structure(make_grid(3, 3)), {0}, 2, 2), OracleGuardError);
}

TEST_CASE("FO+ equals its FO translation") {
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        int n = rng.next_int(1, 6);
        Structure s(make_random_sparse(n, rng.next_int(0, 2 * n), rng));
        // random small formulas over dist atoms
        for (long long d = 0; d <= 4; ++d) {
            auto fplus = f_and({f_distle("x", "y", d), f_not(f_distle("x", "y", d / 2))});
            int fresh = 0;
            auto fo = fo_translation(fplus, fresh);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    CHECK(eval(fplus, s, {{"x", u}, {"y", v}}) ==
                          eval(fo, s, {{"x", u}, {"y", v}}));
        }
    }
}

TEST_CASE("independence sentence evaluation") {
    auto p5 = make_path(5);
    ColoredGraph reds{p5, {0, kUncolored, kUncolored, kUncolored, 0}};
    IndependenceSentence psi{2, 1, parse_formula("(P0 x)")};
    CHECK(eval_independence_sentence(reds, psi, {10, 10}));

    // q = 1: true iff some vertex satisfies phi
    IndependenceSentence one{1, 1, parse_formula("(P0 x)")};
    CHECK(eval_independence_sentence(reds, one, {10, 10}));
    ColoredGraph none{p5, std::vector<int>(5, kUncolored)};
    CHECK_FALSE(eval_independence_sentence(none, one, {10, 10}));

    // K_4 has diameter 1: no two vertices at distance > 2
    IndependenceSentence always{2, 1, parse_formula("true")};
    CHECK_FALSE(eval_independence_sentence(ColoredGraph(make_complete(4)), always, {10, 10}));

    IndependenceSentence quantified{1, 1, parse_formula("(exists y (E x y))")};
    CHECK_THROWS_AS(eval_independence_sentence(reds, quantified, {10, 10}), InputError);
}

TEST_CASE("remove and mark") {
    Structure p3(make_path(3));
    auto marked = remove_and_mark(p3, {1}, 1, 1);
    CHECK(marked.structure.graph.vertex_count() == 2);
    CHECK(marked.structure.graph.edge_count() == 0);
    CHECK(marked.orig_of_new == std::vector<int>{0, 2});
    REQUIRE(marked.structure.predicates.count("Q_1_1"));
    CHECK(marked.structure.predicates.at("Q_1_1") == std::vector<int>{0, 1});

    // removing an isolated vertex leaves no marks
    auto iso = remove_and_mark(Structure(Graph(3)), {1}, 1, 1);
    CHECK(iso.structure.predicates.empty());

    // removing everything leaves the empty structure
    auto none = remove_and_mark(p3, {0, 1, 2}, 1, 1);
    CHECK(none.structure.graph.vertex_count() == 0);

    CHECK_THROWS_AS(remove_and_mark(p3, {1, 1}, 1, 1), InputError);

    // marks match distances: dist(v, w_j) <= d on G iff some Q_i_j with
    // i <= d holds at v on G'
    Rng rng(5);
    for (int it = 0; it < 25; ++it) {
        int n = rng.next_int(2, 30);
        auto g = make_random_sparse(n, rng.next_int(0, 2 * n), rng);
        Structure s(g);
        int m = rng.next_int(1, std::min(3, n));
        std::vector<int> removed;
        while (static_cast<int>(removed.size()) < m) {
            int v = rng.next_int(0, n - 1);
            if (std::find(removed.begin(), removed.end(), v) == removed.end())
                removed.push_back(v);
        }
        auto marked = remove_and_mark(s, removed, 2, 2);
        long long bound = std::min<long long>(static_cast<long long>(f_q(2, 2)), n);
        for (std::size_t j = 0; j < removed.size(); ++j) {
            auto dist = bfs_distances(g, removed[j]);
            for (std::size_t nv = 0; nv < marked.orig_of_new.size(); ++nv) {
                int v = marked.orig_of_new[nv];
                for (int d = 1; d <= bound; ++d) {
                    bool on_g = dist[v] != kUnreached && dist[v] <= d;
                    bool on_marks = false;
                    for (int i = 1; i <= d; ++i) {
                        auto it2 = marked.structure.predicates.find(
                            "Q_" + std::to_string(i) + "_" + std::to_string(j + 1));
                        if (it2 != marked.structure.predicates.end() &&
                            std::binary_search(it2->second.begin(), it2->second.end(),
                                               static_cast<int>(nv)))
                            on_marks = true;
                    }
                    CHECK(on_g == on_marks);
                }
            }
        }
    }
}
