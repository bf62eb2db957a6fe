#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walkcount/exact.hpp"
#include "walkcount/graph.hpp"

namespace walkcount {

using CountVector = std::vector<BigCount>;

// One exact adjacency application: y[i] = sum of x over the neighbors of i.
inline CountVector adjacency_apply(const Graph& g, const CountVector& x) {
    if (static_cast<int>(x.size()) != g.vertex_count()) {
        throw std::invalid_argument("adjacency_apply: vector length " + std::to_string(x.size()) +
                                    " does not match vertex count " + std::to_string(g.vertex_count()));
    }
    CountVector y(x.size());
    for (int i = 0; i < g.vertex_count(); ++i) {
        BigCount acc = 0;
        for (int v : g.neighbors(i)) {
            acc += x[v];
        }
        y[i] = std::move(acc);
    }
    return y;
}

// A^k applied to the all-ones vector; entry i counts the k-walks starting
// at i. Never forms A^k itself.
inline CountVector walk_vector(const Graph& g, int k) {
    if (k < 0) {
        throw std::invalid_argument("walk_vector: k must be >= 0");
    }
    CountVector x(static_cast<std::size_t>(g.vertex_count()), BigCount(1));
    for (int step = 0; step < k; ++step) {
        x = adjacency_apply(g, x);
    }
    return x;
}

// Total number of k-walks: the grand sum of A^k.
inline BigCount total_walks(const Graph& g, int k) {
    BigCount total = 0;
    for (const auto& entry : walk_vector(g, k)) {
        total += entry;
    }
    return total;
}

// Grand sum of A^r D^s: start from entries d_i^s, then apply A r times.
// These are the intermediate quantities of the telescoping chain between
// the walk count and the degree power sum.
inline BigCount mixed_walk_sum(const Graph& g, int r, int s) {
    if (r < 0 || s < 0) {
        throw std::invalid_argument("mixed_walk_sum: r and s must be >= 0");
    }
    CountVector x(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        x[i] = int_pow(BigCount(g.degree(i)), s);
    }
    for (int step = 0; step < r; ++step) {
        x = adjacency_apply(g, x);
    }
    BigCount total = 0;
    for (const auto& entry : x) {
        total += entry;
    }
    return total;
}

// Hard caps keeping the exhaustive oracle on desk-sized inputs.
struct WalkEnumLimits {
    int max_n = 8;
    int max_k = 8;
};

// Differential-testing oracle: counts walks by enumerating every vertex
// sequence (v_0, ..., v_k) with consecutive vertices adjacent. Shares no
// code path with adjacency_apply.
inline BigCount brute_force_walks(const Graph& g, int k, const WalkEnumLimits& limits = {}) {
    if (k < 0) {
        throw std::invalid_argument("brute_force_walks: k must be >= 0");
    }
    if (g.vertex_count() > limits.max_n || k > limits.max_k) {
        throw std::invalid_argument("brute_force_walks: input exceeds enumeration limits (n <= " +
                                    std::to_string(limits.max_n) + ", k <= " +
                                    std::to_string(limits.max_k) + ")");
    }
    BigCount count = 0;
    auto extend = [&](auto&& self, int v, int remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int w : g.neighbors(v)) {
            self(self, w, remaining - 1);
        }
    };
    for (int start = 0; start < g.vertex_count(); ++start) {
        extend(extend, start, k);
    }
    return count;
}

}  // namespace walkcount
