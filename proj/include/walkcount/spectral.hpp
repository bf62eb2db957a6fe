#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkcount/graph.hpp"

namespace walkcount {

// Approximate Perron pair of a connected graph. nu is normalized so its
// smallest entry is 1, which makes it an entrywise upper bound on the
// all-ones vector.
struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> nu;
    int iterations = 0;
    // infinity norm of A*nu - lambda*nu, divided by lambda
    double residual = 0.0;
};

inline constexpr double kDefaultSpectralTol = 1e-12;

// Power iteration on the shifted operator A + I. The shift keeps bipartite
// graphs from oscillating between the +lambda and -lambda eigendirections.
// Starts from the all-ones vector, which is never orthogonal to the Perron
// direction. max_iters <= 0 selects the default 100*n + 1000.
inline SpectralResult perron(const Graph& g, double tol = kDefaultSpectralTol, int max_iters = 0) {
    const int n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("perron: graph is empty");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("perron: graph must be connected");
    }
    if (g.edge_count() == 0) {
        throw std::invalid_argument("perron: graph has no edges, Perron value undefined");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("perron: tolerance must be positive");
    }
    if (max_iters <= 0) {
        max_iters = 100 * n + 1000;
    }

    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    for (int iter = 1; iter <= max_iters; ++iter) {
        // y = A x, fixed sequential order for determinism
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int v : g.neighbors(i)) {
                acc += x[v];
            }
            y[i] = acc;
        }
        double xy = 0.0;
        double xx = 0.0;
        for (int i = 0; i < n; ++i) {
            xy += x[i] * y[i];
            xx += x[i] * x[i];
        }
        const double lambda = xy / xx;

        // Residual of the min-normalized candidate nu = x / min(x):
        // |A nu - lambda nu|_inf / lambda = max|y - lambda x| / (min(x) * lambda).
        double min_x = x[0];
        for (int i = 1; i < n; ++i) {
            min_x = std::min(min_x, x[i]);
        }
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
        }
        const double residual = worst / (min_x * lambda);
        if (residual <= tol) {
            SpectralResult result;
            result.lambda = lambda;
            result.nu.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                result.nu[i] = x[i] / min_x;
            }
            result.iterations = iter;
            result.residual = residual;
            return result;
        }

        // Shifted step z = (A + I) x, renormalized to max entry 1.
        double max_z = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] += x[i];
            max_z = std::max(max_z, y[i]);
        }
        for (int i = 0; i < n; ++i) {
            x[i] = y[i] / max_z;
        }
    }
    throw std::runtime_error("perron: no convergence within " + std::to_string(max_iters) +
                             " iterations (tol=" + std::to_string(tol) + ")");
}

// ||nu||^2 * lambda^k, the spectral upper bound on the total k-walk count.
inline double spectral_walk_bound(const Graph& g, int k, const SpectralResult& sr) {
    if (static_cast<int>(sr.nu.size()) != g.vertex_count()) {
        throw std::invalid_argument("spectral_walk_bound: result does not match graph");
    }
    if (k < 0) {
        throw std::invalid_argument("spectral_walk_bound: k must be >= 0");
    }
    double norm2 = 0.0;
    for (double value : sr.nu) {
        norm2 += value * value;
    }
    double power = 1.0;
    for (int i = 0; i < k; ++i) {
        power *= sr.lambda;
    }
    return norm2 * power;
}

namespace detail {

// Sign of log(norm2 * (lambda/delta)^k) with a tie band of width tie_tol.
// Log space keeps the comparison meaningful when delta^k overflows double.
inline int spectral_bound_side(double norm2, double lambda, double delta, long long k, double tie_tol) {
    const double t = std::log(norm2) + static_cast<double>(k) * (std::log(lambda) - std::log(delta));
    if (t < -tie_tol) {
        return -1;
    }
    if (t > tie_tol) {
        return 1;
    }
    return 0;
}

}  // namespace detail

// Smallest k >= 1 with ||nu||^2 lambda^k strictly below Delta^k, or nullopt
// for regular graphs where lambda = Delta and no such k exists. Comparisons
// within relative tolerance 1e-9 count as ties and resolve to the next k;
// a lambda indistinguishable from Delta on a non-regular graph is reported
// as indeterminate rather than silently classified.
inline std::optional<long long> crossover_k(const Graph& g, const SpectralResult& sr) {
    const int n = g.vertex_count();
    if (static_cast<int>(sr.nu.size()) != n) {
        throw std::invalid_argument("crossover_k: result does not match graph");
    }
    constexpr double kTieTol = 1e-9;
    const double delta = static_cast<double>(g.max_degree());
    const double lambda = sr.lambda;
    if (std::abs(lambda - delta) <= kTieTol * delta) {
        if (regular_degree(g)) {
            return std::nullopt;
        }
        throw std::runtime_error(
            "crossover_k: lambda within tolerance of the maximum degree on a non-regular graph; indeterminate");
    }
    if (lambda > delta) {
        throw std::invalid_argument("crossover_k: lambda exceeds the maximum degree");
    }

    double norm2 = 0.0;
    for (double value : sr.nu) {
        norm2 += value * value;
    }
    // Closed-form candidate, then adjusted by direct comparison around it.
    const double gap = std::log(delta) - std::log(lambda);
    long long k = std::max<long long>(1, static_cast<long long>(std::ceil(std::log(norm2) / gap)) - 2);
    while (k > 1 && detail::spectral_bound_side(norm2, lambda, delta, k - 1, kTieTol) < 0) {
        --k;
    }
    while (detail::spectral_bound_side(norm2, lambda, delta, k, kTieTol) >= 0) {
        ++k;
    }
    return k;
}

}  // namespace walkcount
