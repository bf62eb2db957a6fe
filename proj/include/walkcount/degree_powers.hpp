#pragma once

#include <concepts>
#include <stdexcept>
#include <vector>

#include "walkcount/exact.hpp"
#include "walkcount/graph.hpp"

namespace walkcount {

// Sum of the k-th powers of the vertex degrees, with 0^0 = 1 so the k = 0
// sum is always the vertex count.
inline BigCount degree_power_sum(const Graph& g, int k) {
    if (k < 0) {
        throw std::invalid_argument("degree_power_sum: k must be >= 0");
    }
    BigCount total = 0;
    for (int i = 0; i < g.vertex_count(); ++i) {
        total += int_pow(BigCount(g.degree(i)), k);
    }
    return total;
}

// Laplacian quadratic form: sum over edges {u, v} of (f[u] - f[v])^2.
// Zero exactly when f is constant on every connected component.
template <std::integral T>
BigCount laplacian_quadratic(const Graph& g, const std::vector<T>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count()) {
        throw std::invalid_argument("laplacian_quadratic: vector length does not match vertex count");
    }
    BigCount total = 0;
    for (const auto& [u, v] : g.edges()) {
        const BigCount diff = BigCount(f[u]) - BigCount(f[v]);
        total += diff * diff;
    }
    return total;
}

// Albertson irregularity: the Laplacian quadratic form evaluated at the
// degree vector. Equals the exact gap between the degree cube sum and the
// 3-walk count.
inline BigCount albertson_irregularity(const Graph& g) {
    return laplacian_quadratic(g, degree_vector(g));
}

// Slack of the two-term power inequality a^r b + a b^r <= a^{r+1} + b^{r+1}:
// returns (a^r - b^r)(a - b), which is >= 0 for a, b >= 0 and zero iff the
// two terms agree.
inline BigCount power_lemma_gap(const BigCount& a, const BigCount& b, int r) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("power_lemma_gap: a and b must be non-negative");
    }
    if (r < 1) {
        throw std::invalid_argument("power_lemma_gap: r must be >= 1");
    }
    return (int_pow(a, r) - int_pow(b, r)) * (a - b);
}

}  // namespace walkcount
