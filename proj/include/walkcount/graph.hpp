#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkcount/errors.hpp"

namespace walkcount {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once constructed;
// edges are stored canonically (u < v, sorted lexicographically) and each
// neighbor list is strictly increasing.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edge_list) : n_(n) {
        if (n < 0) {
            throw std::invalid_argument("Graph: vertex count must be non-negative");
        }
        for (auto& [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw std::invalid_argument("Graph: vertex index out of range");
            }
            if (u == v) {
                throw std::invalid_argument("Graph: self-loops are not allowed");
            }
            if (u > v) {
                std::swap(u, v);
            }
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
            throw std::invalid_argument("Graph: duplicate edge");
        }
        edges_ = std::move(edge_list);
        adj_.resize(static_cast<std::size_t>(n));
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
        }
    }

    int vertex_count() const noexcept { return n_; }

    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int max_degree() const {
        int result = 0;
        for (const auto& list : adj_) {
            result = std::max(result, static_cast<int>(list.size()));
        }
        return result;
    }

    bool has_edge(int u, int v) const {
        const auto& list = adj_.at(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline std::vector<int> degree_vector(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        d[i] = g.degree(i);
    }
    return d;
}

// Common degree if the graph is regular, nullopt otherwise.
inline std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) {
        return std::nullopt;
    }
    const int d = g.degree(0);
    for (int i = 1; i < g.vertex_count(); ++i) {
        if (g.degree(i) != d) {
            return std::nullopt;
        }
    }
    return d;
}

// Component label per vertex, assigned in breadth-first order from vertex 0.
inline std::vector<int> component_labels(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (label[start] != -1) {
            continue;
        }
        std::queue<int> frontier;
        frontier.push(start);
        label[start] = next;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int w : g.neighbors(v)) {
                if (label[w] == -1) {
                    label[w] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) {
        return true;
    }
    const auto label = component_labels(g);
    return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

// True when, within each connected component, all degrees agree.
inline bool every_component_regular(const Graph& g) {
    const auto label = component_labels(g);
    std::vector<int> comp_degree;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int c = label[v];
        if (c >= static_cast<int>(comp_degree.size())) {
            comp_degree.resize(c + 1, -1);
        }
        if (comp_degree[c] == -1) {
            comp_degree[c] = g.degree(v);
        } else if (comp_degree[c] != g.degree(v)) {
            return false;
        }
    }
    return true;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(s.substr(start, i - start));
        }
    }
    return tokens;
}

inline std::optional<long long> parse_int(std::string_view token) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        return std::nullopt;
    }
    return value;
}

}  // namespace detail

// Edge-list text format: '#' lines are comments, the first significant line
// is the vertex count n >= 1, every following significant line is one edge
// "u v" with 0 <= u,v < n and u != v. Rejects duplicates (either order).
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_n = false;
    long long n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto tokens = detail::split_ws(body);
        if (!have_n) {
            if (tokens.size() != 1) {
                throw ParseError(line_no, "expected a single vertex count");
            }
            const auto value = detail::parse_int(tokens[0]);
            if (!value) {
                throw ParseError(line_no, "malformed vertex count '" + std::string(tokens[0]) + "'");
            }
            if (*value < 1) {
                throw ParseError(line_no, "vertex count must be at least 1");
            }
            n = *value;
            seen.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
            have_n = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected an edge 'u v'");
        }
        const auto u = detail::parse_int(tokens[0]);
        const auto v = detail::parse_int(tokens[1]);
        if (!u || !v) {
            throw ParseError(line_no, "malformed vertex index");
        }
        if (*u < 0 || *u >= n || *v < 0 || *v >= n) {
            throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
        }
        if (*u == *v) {
            throw ParseError(line_no, "self-loop " + std::to_string(*u) + " " + std::to_string(*v));
        }
        const int a = static_cast<int>(std::min(*u, *v));
        const int b = static_cast<int>(std::max(*u, *v));
        if (seen[a][b]) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
        }
        seen[a][b] = true;
        edges.emplace_back(a, b);
    }
    if (!have_n) {
        throw ParseError(line_no, "missing vertex count");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

// Canonical form: n on the first line, then one edge "u v" (u < v) per line,
// sorted lexicographically.
inline void serialize_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    serialize_edge_list(g, out);
    return out.str();
}

}  // namespace walkcount
