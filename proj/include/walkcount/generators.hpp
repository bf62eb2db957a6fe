#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "walkcount/graph.hpp"

namespace walkcount {

enum class GraphFamily {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    random_connected,
    random_regular,
};

inline std::string family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::star: return "star";
        case GraphFamily::complete: return "complete";
        case GraphFamily::complete_bipartite: return "complete_bipartite";
        case GraphFamily::random_connected: return "random_connected";
        case GraphFamily::random_regular: return "random_regular";
    }
    return "unknown";
}

inline std::optional<GraphFamily> family_from_name(std::string_view name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "star") return GraphFamily::star;
    if (name == "complete") return GraphFamily::complete;
    if (name == "complete_bipartite") return GraphFamily::complete_bipartite;
    if (name == "random_connected") return GraphFamily::random_connected;
    if (name == "random_regular") return GraphFamily::random_regular;
    return std::nullopt;
}

namespace detail {

// Uniform double in [0, 1), 53 random bits.
inline double random_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) via rejection.
inline std::size_t random_below(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t min = (-b) % b;
    std::uint64_t draw = rng();
    while (draw < min) {
        draw = rng();
    }
    return static_cast<std::size_t>(draw % b);
}

template <typename T>
void shuffle_vector(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[random_below(rng, i)]);
    }
}

}  // namespace detail

inline Graph make_path(int n) {
    if (n < 1) {
        throw std::invalid_argument("make_path: n must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

inline Graph make_cycle(int n) {
    if (n < 3) {
        throw std::invalid_argument("make_cycle: n must be >= 3");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

// Star on n vertices: center 0, leaves 1..n-1 (K_{1,n-1}).
inline Graph make_star(int n) {
    if (n < 2) {
        throw std::invalid_argument("make_star: n must be >= 2");
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
    }
    return Graph(n, std::move(edges));
}

inline Graph make_complete(int n) {
    if (n < 1) {
        throw std::invalid_argument("make_complete: n must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

// Parts {0..a-1} and {a..a+b-1} with every cross edge.
inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("make_complete_bipartite: both parts must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            edges.emplace_back(i, a + j);
        }
    }
    return Graph(a + b, std::move(edges));
}

// Erdos-Renyi G(n, p) draws, retried until connected.
inline Graph make_random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("make_random_connected: n must be >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("make_random_connected: p must lie in [0, 1]");
    }
    constexpr int kRetryBudget = 1000;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (detail::random_unit(rng) < p) {
                    edges.emplace_back(i, j);
                }
            }
        }
        Graph g(n, std::move(edges));
        if (is_connected(g)) {
            return g;
        }
    }
    throw std::runtime_error("make_random_connected: retry budget exhausted (n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ")");
}

// Pairing model: each vertex contributes d stubs, a uniform perfect matching
// of the stubs is drawn and rejected until the result is a simple graph.
inline Graph make_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) {
        throw std::invalid_argument("make_random_regular: need n >= 1 and 0 <= d < n");
    }
    if ((static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("make_random_regular: n*d must be even");
    }
    if (d == 0) {
        return Graph(n, {});
    }
    constexpr int kRetryBudget = 5000;
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < d; ++i) {
                stubs.push_back(v);
            }
        }
        detail::shuffle_vector(stubs, rng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!simple) {
            continue;
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            continue;
        }
        return Graph(n, std::move(edges));
    }
    throw std::runtime_error("make_random_regular: retry budget exhausted (n=" + std::to_string(n) +
                             ", d=" + std::to_string(d) + ")");
}

// Parameter bundle for the family dispatcher. `n` is the vertex count
// (first part size for complete_bipartite), `b` the second part size,
// `d` the target degree, `p` the edge probability.
struct FamilySpec {
    GraphFamily family = GraphFamily::path;
    int n = 0;
    int b = 0;
    int d = 0;
    double p = 0.0;
};

inline Graph generate(const FamilySpec& spec, std::uint64_t seed) {
    switch (spec.family) {
        case GraphFamily::path: return make_path(spec.n);
        case GraphFamily::cycle: return make_cycle(spec.n);
        case GraphFamily::star: return make_star(spec.n);
        case GraphFamily::complete: return make_complete(spec.n);
        case GraphFamily::complete_bipartite: return make_complete_bipartite(spec.n, spec.b);
        case GraphFamily::random_connected: return make_random_connected(spec.n, spec.p, seed);
        case GraphFamily::random_regular: return make_random_regular(spec.n, spec.d, seed);
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace walkcount
