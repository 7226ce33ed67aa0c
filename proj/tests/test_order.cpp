#include <catch2/catch_amalgamated.hpp>

#include "nwd/generators.hpp"
#include "nwd/order.hpp"

using namespace nwd;

TEST_CASE("wreach basics") {
    auto p3 = make_path(3);
    auto nat = VertexOrder::identity(3);
    CHECK(wreach_set(p3, nat, 0, 1) == std::vector<int>{1});
    CHECK(wreach_set(p3, nat, 2, 2) == std::vector<int>{0, 1, 2});
    CHECK(wreach_set(p3, nat, 3, 0) == std::vector<int>{0});  // minimum of the order

    auto p5 = make_path(5);
    auto nat5 = VertexOrder::identity(5);
    CHECK(wcol_of_order(p5, nat5, 2) == 3);
    CHECK(wcol_of_order(make_complete(4), VertexOrder::identity(4), 1) == 4);
    CHECK(wcol_of_order(Graph(6), VertexOrder::identity(6), 3) == 1);
}

TEST_CASE("wreach monotone in radius and matches bulk route") {
    Rng rng(31);
    for (int it = 0; it < 25; ++it) {
        int n = rng.next_int(1, 18);
        auto g = make_random_sparse(n, rng.next_int(0, 2 * n), rng);
        std::vector<int> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        rng.shuffle(seq);
        auto ord = VertexOrder::from_sequence(seq);
        for (int k = 0; k <= 3; ++k) {
            auto bulk = wreach_all(g, ord, k);
            for (int v = 0; v < n; ++v) {
                auto a = wreach_set(g, ord, k, v);
                CHECK(a == bulk[v]);
                auto b = wreach_set(g, ord, k + 1, v);
                CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
            }
        }
    }
}

TEST_CASE("order_from_aug achieves the augmentation bound") {
    auto star = order_from_aug(make_star(6), 2);
    CHECK(wcol_of_order(make_star(6), star.order, 2) <= 2);

    auto k4 = order_from_aug(make_complete(4), 2);
    CHECK(wcol_of_order(make_complete(4), k4.order, 2) == 4);

    auto p6 = order_from_aug(make_path(6), 2);
    CHECK(wcol_of_order(make_path(6), p6.order, 2) <= 3);

    // wcol_r(G) <= 2(d+1)^2 for the returned order
    Rng rng(77);
    for (int it = 0; it < 30; ++it) {
        int n = rng.next_int(2, 50);
        auto g = make_random_sparse(n, rng.next_int(0, 2 * n), rng);
        for (int r = 1; r <= 3; ++r) {
            auto res = order_from_aug(g, r);
            int bound = 2 * (res.max_indegree + 1) * (res.max_indegree + 1);
            CHECK(wcol_of_order(g, res.order, r) <= bound);
        }
    }
}

TEST_CASE("brute wcol oracle") {
    CHECK(brute_wcol(make_star(6), 1) == 2);
    CHECK(brute_wcol(make_star(6), 3) == 2);
    CHECK(brute_wcol(make_complete(4), 2) == 4);
    CHECK(brute_wcol(make_path(4), 1) == 2);
    CHECK_THROWS_AS(brute_wcol(make_path(9), 1), OracleGuardError);

    // any order is at least the optimum; the minimiser achieves it
    Rng rng(13);
    for (int it = 0; it < 12; ++it) {
        int n = rng.next_int(1, 6);
        auto g = make_random_graph(n, rng.next_int(0, n * (n - 1) / 2), rng);
        int k = rng.next_int(1, 3);
        auto res = brute_wcol_with_order(g, k);
        CHECK(wcol_of_order(g, res.best_order, k) == res.value);
        std::vector<int> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        rng.shuffle(seq);
        CHECK(wcol_of_order(g, VertexOrder::from_sequence(seq), k) >= res.value);
    }
}
