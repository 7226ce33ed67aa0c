#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "nwd/errors.hpp"
#include "nwd/graph.hpp"

namespace nwd {

// Deterministic RNG wrapper. All randomness in the artifact flows through
// this so that a seed pins every output bit, independent of the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, bound) by rejection
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw InputError("rng bound must be positive");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[next_below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

inline Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

// a x b grid, vertex (i,j) = i*b + j
inline Graph make_grid(int a, int b) {
    if (a < 1 || b < 1) throw InputError("grid sides must be positive");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (i + 1 < a) e.emplace_back(i * b + j, (i + 1) * b + j);
            if (j + 1 < b) e.emplace_back(i * b + j, i * b + j + 1);
        }
    return Graph::from_edges(a * b, e);
}

// K_{1,n-1} with centre 0
inline Graph make_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edges(n, e);
}

inline Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// Sparse Erdos-Renyi with the edge request clamped to what fits.
inline Graph make_random_sparse(int n, long long m, Rng& rng);

// Sparse Erdos-Renyi: exactly m distinct edges, sampled by rejection.
inline Graph make_random_graph(int n, long long m, Rng& rng) {
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges) throw InputError("too many edges requested");
    std::set<std::pair<int, int>> chosen;
    while (static_cast<long long>(chosen.size()) < m) {
        int u = rng.next_int(0, n - 1);
        int v = rng.next_int(0, n - 1);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edges(n, {chosen.begin(), chosen.end()});
}

inline Graph make_random_sparse(int n, long long m, Rng& rng) {
    return make_random_graph(n, std::min(m, static_cast<long long>(n) * (n - 1) / 2), rng);
}

// Random 3-regular graph via the pairing model, retried until simple.
inline Graph make_random_cubic(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0) throw InputError("3-regular graph needs even n >= 4");
    for (;;) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(3 * n));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> chosen;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !chosen.insert({std::min(u, v), std::max(u, v)}).second) {
                ok = false;
                break;
            }
        }
        if (ok) return Graph::from_edges(n, {chosen.begin(), chosen.end()});
    }
}

// Random maximal outerplanar graph: a cycle triangulated by recursive
// chord insertion. Used as a minor-free test family.
inline Graph make_random_outerplanar(int n, Rng& rng) {
    if (n < 3) throw InputError("outerplanar sample needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    // triangulate the polygon region between cycle positions lo and hi
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo < 2) return;
        int mid = rng.next_int(lo + 1, hi - 1);
        if (mid > lo + 1) e.emplace_back(lo, mid);
        if (hi > mid + 1) e.emplace_back(mid, hi);
        self(self, lo, mid);
        self(self, mid, hi);
    };
    rec(rec, 0, n - 1);
    return Graph::from_edges(n, e);
}

// Random labelled tree from a Pruefer-like attachment process.
inline Graph make_random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, rng.next_int(0, v - 1));
    return Graph::from_edges(n, e);
}

}  // namespace nwd
