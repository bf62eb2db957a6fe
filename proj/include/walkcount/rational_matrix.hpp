#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkcount/errors.hpp"
#include "walkcount/exact.hpp"
#include "walkcount/graph.hpp"

namespace walkcount {

// Dense symmetric matrix with exact rational entries. Symmetry is validated
// on construction and exact thereafter.
class SymMatrix {
public:
    SymMatrix() = default;

    SymMatrix(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
        if (n < 0) {
            throw std::invalid_argument("SymMatrix: dimension must be non-negative");
        }
        if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
            throw std::invalid_argument("SymMatrix: entry count does not match dimension");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (at(i, j) != at(j, i)) {
                    throw std::invalid_argument("SymMatrix: asymmetric at (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
                }
            }
        }
    }

    static SymMatrix zero(int n) {
        return SymMatrix(n, std::vector<Rational>(static_cast<std::size_t>(n) * n, Rational(0)));
    }

    int size() const noexcept { return n_; }

    const Rational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

namespace detail {

inline std::optional<BigCount> parse_bigint(std::string_view token) {
    if (token.empty()) {
        return std::nullopt;
    }
    std::size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (start == token.size()) {
        return std::nullopt;
    }
    for (std::size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
            return std::nullopt;
        }
    }
    return BigCount(std::string(token));
}

// Accepts "p" or "p/q". The denominator must be strictly positive.
inline Rational parse_rational_token(std::string_view token, int line_no) {
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        const auto value = parse_bigint(token);
        if (!value) {
            throw ParseError(line_no, "malformed entry '" + std::string(token) + "'");
        }
        return Rational(*value);
    }
    const auto num = parse_bigint(token.substr(0, slash));
    const auto den = parse_bigint(token.substr(slash + 1));
    if (!num || !den) {
        throw ParseError(line_no, "malformed entry '" + std::string(token) + "'");
    }
    if (*den == 0) {
        throw ParseError(line_no, "zero denominator in '" + std::string(token) + "'");
    }
    if (*den < 0) {
        throw ParseError(line_no, "denominator must be positive in '" + std::string(token) + "'");
    }
    return Rational(*num, *den);
}

}  // namespace detail

// Matrix text format: '#' lines are comments, the first significant line is
// the dimension n >= 1, then n significant lines of n entries each. Entries
// are integers or fractions "p/q" with q > 0. Symmetry is mandatory; the
// first offending pair is reported.
inline SymMatrix parse_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Rational> entries;
    std::vector<int> row_lines;
    int rows_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto tokens = detail::split_ws(body);
        if (!have_n) {
            if (tokens.size() != 1) {
                throw ParseError(line_no, "expected a single dimension");
            }
            const auto value = detail::parse_int(tokens[0]);
            if (!value || *value < 1) {
                throw ParseError(line_no, "dimension must be an integer >= 1");
            }
            n = static_cast<int>(*value);
            entries.reserve(static_cast<std::size_t>(n) * n);
            have_n = true;
            continue;
        }
        if (rows_read >= n) {
            throw ParseError(line_no, "more than " + std::to_string(n) + " matrix rows");
        }
        if (static_cast<int>(tokens.size()) != n) {
            throw ParseError(line_no, "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(tokens.size()));
        }
        for (const auto& token : tokens) {
            entries.push_back(detail::parse_rational_token(token, line_no));
        }
        row_lines.push_back(line_no);
        ++rows_read;
    }
    if (!have_n) {
        throw ParseError(line_no, "missing dimension");
    }
    if (rows_read < n) {
        throw ParseError(line_no, "expected " + std::to_string(n) + " matrix rows, got " +
                                      std::to_string(rows_read));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& upper = entries[static_cast<std::size_t>(i) * n + j];
            const auto& lower = entries[static_cast<std::size_t>(j) * n + i];
            if (upper != lower) {
                throw ParseError(row_lines[j], "asymmetric entry at (" + std::to_string(i) + ", " +
                                                   std::to_string(j) + ") vs (" + std::to_string(j) + ", " +
                                                   std::to_string(i) + ")");
            }
        }
    }
    return SymMatrix(n, std::move(entries));
}

inline SymMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

// Generalized degrees: d_i = sum_j |a_ij|, exactly.
inline std::vector<Rational> abs_row_sums(const SymMatrix& m) {
    std::vector<Rational> d(static_cast<std::size_t>(m.size()), Rational(0));
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            d[i] += abs(m.at(i, j));
        }
    }
    return d;
}

// Grand sum of A^k (equivalently tr(A^k J)), via k exact matrix-vector
// applications to the all-ones vector.
inline Rational grand_sum_power(const SymMatrix& m, int k) {
    if (k < 0) {
        throw std::invalid_argument("grand_sum_power: k must be >= 0");
    }
    const int n = m.size();
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(1));
    std::vector<Rational> y(static_cast<std::size_t>(n));
    for (int step = 0; step < k; ++step) {
        for (int i = 0; i < n; ++i) {
            Rational acc = 0;
            for (int j = 0; j < n; ++j) {
                acc += m.at(i, j) * x[j];
            }
            y[i] = std::move(acc);
        }
        x.swap(y);
    }
    Rational total = 0;
    for (const auto& entry : x) {
        total += entry;
    }
    return total;
}

struct MatrixCheckRecord {
    int k = 0;
    Rational walk_sum;     // grand sum of A^k
    Rational degree_sum;   // sum of d_i^k with d_i the absolute row sums
    bool holds = false;    // walk_sum <= degree_sum
    bool equal = false;

    friend bool operator==(const MatrixCheckRecord&, const MatrixCheckRecord&) = default;
};

// Checks tr(A^k J) <= sum_i d_i^k for k = 1..kmax. A false `holds` is a
// counterexample record, not an error.
inline std::vector<MatrixCheckRecord> verify_matrix_inequality(const SymMatrix& m, int kmax) {
    if (kmax < 1) {
        throw std::invalid_argument("verify_matrix_inequality: kmax must be >= 1");
    }
    const auto degrees = abs_row_sums(m);
    std::vector<MatrixCheckRecord> records;
    records.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        MatrixCheckRecord record;
        record.k = k;
        record.walk_sum = grand_sum_power(m, k);
        record.degree_sum = 0;
        for (const auto& d : degrees) {
            record.degree_sum += rational_pow(d, k);
        }
        record.holds = record.walk_sum <= record.degree_sum;
        record.equal = record.walk_sum == record.degree_sum;
        records.push_back(std::move(record));
    }
    return records;
}

// 0/1 adjacency matrix of a graph, for cross-checking the two walk-count
// routes against each other.
inline SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(0));
    for (const auto& [u, v] : g.edges()) {
        entries[static_cast<std::size_t>(u) * n + v] = 1;
        entries[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return SymMatrix(n, std::move(entries));
}

}  // namespace walkcount
