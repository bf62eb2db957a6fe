#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkcount/degree_powers.hpp"
#include "walkcount/exact.hpp"
#include "walkcount/graph.hpp"
#include "walkcount/rational_matrix.hpp"
#include "walkcount/walks.hpp"

namespace walkcount {

// One row of the per-k verification table. Counts are exact; JSON carries
// them as decimal strings.
struct WalkRecord {
    int k = 0;
    BigCount walks;
    BigCount degree_power_sum;
    BigCount gap;                    // degree_power_sum - walks, never negative
    bool equality = false;           // gap == 0
    bool predicted_equality = false; // k <= 2 or (every component) regular
    bool match = false;              // equality == predicted_equality

    friend bool operator==(const WalkRecord&, const WalkRecord&) = default;
};

struct WalkReport {
    int n = 0;
    std::size_t m = 0;
    bool regular = false;
    bool connected = false;
    // Set on disconnected inputs: the equality prediction then uses the
    // per-component rule, which extends past the connected setting the
    // characterization was stated for.
    bool extrapolated = false;
    std::vector<WalkRecord> records;

    bool all_match() const {
        for (const auto& record : records) {
            if (!record.match) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const WalkReport&, const WalkReport&) = default;
};

// Per-k inequality check for k = 0..kmax. The walk vector is extended one
// adjacency application at a time, so the whole table costs kmax products.
inline WalkReport verify_inequality(const Graph& g, int kmax) {
    if (kmax < 1) {
        throw std::invalid_argument("verify_inequality: kmax must be >= 1");
    }
    WalkReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.regular = regular_degree(g).has_value();
    report.connected = is_connected(g);
    report.extrapolated = !report.connected;
    const bool balanced = report.connected ? report.regular : every_component_regular(g);

    CountVector x(static_cast<std::size_t>(g.vertex_count()), BigCount(1));
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            x = adjacency_apply(g, x);
        }
        WalkRecord record;
        record.k = k;
        record.walks = 0;
        for (const auto& entry : x) {
            record.walks += entry;
        }
        record.degree_power_sum = degree_power_sum(g, k);
        record.gap = record.degree_power_sum - record.walks;
        record.equality = record.gap == 0;
        record.predicted_equality = k <= 2 || balanced;
        record.match = record.equality == record.predicted_equality;
        report.records.push_back(std::move(record));
    }
    return report;
}

struct K3Report {
    BigCount gap;           // degree cube sum minus 3-walk count
    BigCount irregularity;  // Albertson irregularity
    bool match = false;

    friend bool operator==(const K3Report&, const K3Report&) = default;
};

// The k = 3 gap has a closed form: it equals the Albertson irregularity.
inline K3Report verify_k3(const Graph& g) {
    K3Report report;
    report.gap = degree_power_sum(g, 3) - total_walks(g, 3);
    report.irregularity = albertson_irregularity(g);
    report.match = report.gap == report.irregularity;
    return report;
}

struct ChainReport {
    int k = 0;
    std::vector<BigCount> terms;  // T_m = grand sum of A^{k-m} D^m, m = 1..k
    bool monotone = false;        // T_1 <= T_2 <= ... <= T_k
    bool endpoints_ok = false;    // T_1 == W_k and T_k == D_k

    friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

// The telescoping chain between the walk count and the degree power sum.
// Every step trades one adjacency factor for one degree factor and can only
// grow the sum.
inline ChainReport verify_chain(const Graph& g, int k) {
    if (k < 1) {
        throw std::invalid_argument("verify_chain: k must be >= 1");
    }
    ChainReport report;
    report.k = k;
    report.terms.reserve(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) {
        report.terms.push_back(mixed_walk_sum(g, k - m, m));
    }
    report.monotone = true;
    for (std::size_t i = 1; i < report.terms.size(); ++i) {
        if (report.terms[i - 1] > report.terms[i]) {
            report.monotone = false;
            break;
        }
    }
    report.endpoints_ok =
        report.terms.front() == total_walks(g, k) && report.terms.back() == degree_power_sum(g, k);
    return report;
}

inline void to_json(nlohmann::json& j, const WalkRecord& record) {
    j = nlohmann::json{
        {"k", record.k},
        {"walks", record.walks.str()},
        {"degree_power_sum", record.degree_power_sum.str()},
        {"gap", record.gap.str()},
        {"equality", record.equality},
        {"predicted_equality", record.predicted_equality},
        {"match", record.match},
    };
}

inline void from_json(const nlohmann::json& j, WalkRecord& record) {
    record.k = j.at("k").get<int>();
    record.walks = BigCount(j.at("walks").get<std::string>());
    record.degree_power_sum = BigCount(j.at("degree_power_sum").get<std::string>());
    record.gap = BigCount(j.at("gap").get<std::string>());
    record.equality = j.at("equality").get<bool>();
    record.predicted_equality = j.at("predicted_equality").get<bool>();
    record.match = j.at("match").get<bool>();
}

inline void to_json(nlohmann::json& j, const WalkReport& report) {
    j = nlohmann::json{
        {"n", report.n},
        {"m", report.m},
        {"regular", report.regular},
        {"connected", report.connected},
        {"extrapolated", report.extrapolated},
        {"records", report.records},
    };
}

inline void from_json(const nlohmann::json& j, WalkReport& report) {
    report.n = j.at("n").get<int>();
    report.m = j.at("m").get<std::size_t>();
    report.regular = j.at("regular").get<bool>();
    report.connected = j.at("connected").get<bool>();
    report.extrapolated = j.at("extrapolated").get<bool>();
    report.records = j.at("records").get<std::vector<WalkRecord>>();
}

inline void to_json(nlohmann::json& j, const K3Report& report) {
    j = nlohmann::json{
        {"gap", report.gap.str()},
        {"irregularity", report.irregularity.str()},
        {"match", report.match},
    };
}

inline void to_json(nlohmann::json& j, const ChainReport& report) {
    std::vector<std::string> terms;
    terms.reserve(report.terms.size());
    for (const auto& term : report.terms) {
        terms.push_back(term.str());
    }
    j = nlohmann::json{
        {"k", report.k},
        {"terms", terms},
        {"monotone", report.monotone},
        {"endpoints_ok", report.endpoints_ok},
    };
}

inline void to_json(nlohmann::json& j, const MatrixCheckRecord& record) {
    j = nlohmann::json{
        {"k", record.k},
        {"walk_sum", record.walk_sum.str()},
        {"degree_sum", record.degree_sum.str()},
        {"holds", record.holds},
        {"equal", record.equal},
    };
}

// Flat projection of the per-k records.
inline std::string to_csv(const WalkReport& report) {
    std::string out = "k,walks,degree_power_sum,gap,equality,predicted_equality,match\n";
    for (const auto& record : report.records) {
        out += std::to_string(record.k);
        out += ',';
        out += record.walks.str();
        out += ',';
        out += record.degree_power_sum.str();
        out += ',';
        out += record.gap.str();
        out += ',';
        out += record.equality ? "true" : "false";
        out += ',';
        out += record.predicted_equality ? "true" : "false";
        out += ',';
        out += record.match ? "true" : "false";
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const std::vector<MatrixCheckRecord>& records) {
    std::string out = "k,walk_sum,degree_sum,holds,equal\n";
    for (const auto& record : records) {
        out += std::to_string(record.k);
        out += ',';
        out += record.walk_sum.str();
        out += ',';
        out += record.degree_sum.str();
        out += ',';
        out += record.holds ? "true" : "false";
        out += ',';
        out += record.equal ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace walkcount
