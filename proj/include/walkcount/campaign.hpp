#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkcount/generators.hpp"
#include "walkcount/report.hpp"
#include "walkcount/spectral.hpp"

namespace walkcount {

// Sweep configuration. Defaults match the standing verification corpus:
// every deterministic family up to n_max plus seeded random draws, checked
// against every identity the library computes.
struct CampaignConfig {
    std::vector<GraphFamily> families = {
        GraphFamily::path,
        GraphFamily::cycle,
        GraphFamily::star,
        GraphFamily::complete,
        GraphFamily::complete_bipartite,
        GraphFamily::random_connected,
        GraphFamily::random_regular,
    };
    int n_max = 12;
    std::vector<double> p_list = {0.2, 0.5, 0.8};
    int seeds_per_p = 50;
    std::vector<int> regular_degrees = {2, 3, 4};
    int seeds_per_regular = 15;

    int kmax = 12;
    int chain_kmax = 8;
    int oracle_n_max = 7;
    int oracle_k_max = 6;
    int spectral_kmax = 20;
    double spectral_tol = 1e-12;

    int matrix_count = 1000;
    int matrix_n_max = 6;
    int matrix_numer_max = 3;
    int matrix_denom_max = 3;
    int matrix_kmax = 8;
    std::uint64_t matrix_seed = 1;
};

namespace detail {

inline std::vector<std::string> split_csv(std::string_view value) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string_view::npos ? value.size() : comma;
        const auto part = trim(value.substr(start, end - start));
        if (!part.empty()) {
            parts.emplace_back(part);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

}  // namespace detail

// Flat key = value format, one setting per line, '#' comments. List-valued
// settings are comma separated.
inline CampaignConfig parse_campaign_config(std::istream& in) {
    CampaignConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const auto key = std::string(detail::trim(body.substr(0, eq)));
        const auto value = std::string(detail::trim(body.substr(eq + 1)));
        if (value.empty()) {
            throw ParseError(line_no, "empty value for '" + key + "'");
        }
        try {
            if (key == "families") {
                config.families.clear();
                for (const auto& name : detail::split_csv(value)) {
                    const auto family = family_from_name(name);
                    if (!family) {
                        throw ParseError(line_no, "unknown family '" + name + "'");
                    }
                    config.families.push_back(*family);
                }
            } else if (key == "n_max") {
                config.n_max = std::stoi(value);
            } else if (key == "p_list") {
                config.p_list.clear();
                for (const auto& item : detail::split_csv(value)) {
                    config.p_list.push_back(std::stod(item));
                }
            } else if (key == "seeds_per_p") {
                config.seeds_per_p = std::stoi(value);
            } else if (key == "regular_degrees") {
                config.regular_degrees.clear();
                for (const auto& item : detail::split_csv(value)) {
                    config.regular_degrees.push_back(std::stoi(item));
                }
            } else if (key == "seeds_per_regular") {
                config.seeds_per_regular = std::stoi(value);
            } else if (key == "kmax") {
                config.kmax = std::stoi(value);
            } else if (key == "chain_kmax") {
                config.chain_kmax = std::stoi(value);
            } else if (key == "oracle_n_max") {
                config.oracle_n_max = std::stoi(value);
            } else if (key == "oracle_k_max") {
                config.oracle_k_max = std::stoi(value);
            } else if (key == "spectral_kmax") {
                config.spectral_kmax = std::stoi(value);
            } else if (key == "spectral_tol") {
                config.spectral_tol = std::stod(value);
            } else if (key == "matrix_count") {
                config.matrix_count = std::stoi(value);
            } else if (key == "matrix_n_max") {
                config.matrix_n_max = std::stoi(value);
            } else if (key == "matrix_numer_max") {
                config.matrix_numer_max = std::stoi(value);
            } else if (key == "matrix_denom_max") {
                config.matrix_denom_max = std::stoi(value);
            } else if (key == "matrix_kmax") {
                config.matrix_kmax = std::stoi(value);
            } else if (key == "matrix_seed") {
                config.matrix_seed = std::stoull(value);
            } else {
                throw ParseError(line_no, "unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed value '" + value + "' for '" + key + "'");
        }
    }
    return config;
}

inline CampaignConfig parse_campaign_config(const std::string& text) {
    std::istringstream in(text);
    return parse_campaign_config(in);
}

struct CorpusItem {
    std::string label;
    Graph graph;
};

namespace detail {

inline bool has_family(const CampaignConfig& config, GraphFamily family) {
    for (auto f : config.families) {
        if (f == family) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Deterministic corpus enumeration: fixed family order, fixed parameter
// sweeps, fixed seeds. Two runs over the same config see the same graphs
// in the same order.
inline std::vector<CorpusItem> build_corpus(const CampaignConfig& config) {
    std::vector<CorpusItem> corpus;
    const int n_max = config.n_max;
    if (detail::has_family(config, GraphFamily::path)) {
        for (int n = 1; n <= n_max; ++n) {
            corpus.push_back({"path_n" + std::to_string(n), make_path(n)});
        }
    }
    if (detail::has_family(config, GraphFamily::cycle)) {
        for (int n = 3; n <= n_max; ++n) {
            corpus.push_back({"cycle_n" + std::to_string(n), make_cycle(n)});
        }
    }
    if (detail::has_family(config, GraphFamily::star)) {
        for (int n = 2; n <= n_max; ++n) {
            corpus.push_back({"star_n" + std::to_string(n), make_star(n)});
        }
    }
    if (detail::has_family(config, GraphFamily::complete)) {
        for (int n = 1; n <= n_max; ++n) {
            corpus.push_back({"complete_n" + std::to_string(n), make_complete(n)});
        }
    }
    if (detail::has_family(config, GraphFamily::complete_bipartite)) {
        for (int a = 1; a <= n_max; ++a) {
            for (int b = a; a + b <= n_max; ++b) {
                corpus.push_back({"complete_bipartite_a" + std::to_string(a) + "_b" + std::to_string(b),
                                  make_complete_bipartite(a, b)});
            }
        }
    }
    if (detail::has_family(config, GraphFamily::random_connected) && n_max >= 3) {
        for (double p : config.p_list) {
            for (int seed = 0; seed < config.seeds_per_p; ++seed) {
                const int n = 3 + seed % (n_max - 2);
                std::ostringstream label;
                label << "random_connected_n" << n << "_p" << p << "_seed" << seed;
                corpus.push_back({label.str(), make_random_connected(n, p, static_cast<std::uint64_t>(seed))});
            }
        }
    }
    if (detail::has_family(config, GraphFamily::random_regular)) {
        for (int d : config.regular_degrees) {
            for (int n = d + 1; n <= n_max; ++n) {
                if ((static_cast<long long>(n) * d) % 2 != 0) {
                    continue;
                }
                for (int seed = 0; seed < config.seeds_per_regular; ++seed) {
                    corpus.push_back({"random_regular_n" + std::to_string(n) + "_d" + std::to_string(d) +
                                          "_seed" + std::to_string(seed),
                                      make_random_regular(n, d, static_cast<std::uint64_t>(seed))});
                }
            }
        }
    }
    return corpus;
}

// Symmetric rational test matrix: dimension 1..n_max, entries p/q with
// |p| <= numer_max and 1 <= q <= denom_max, mirrored across the diagonal.
inline SymMatrix random_symmetric_matrix(std::mt19937_64& rng, int n_max, int numer_max, int denom_max) {
    const int n = 1 + static_cast<int>(detail::random_below(rng, static_cast<std::size_t>(n_max)));
    std::vector<Rational> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const long long numer =
                static_cast<long long>(detail::random_below(rng, static_cast<std::size_t>(2 * numer_max + 1))) -
                numer_max;
            const long long denom =
                1 + static_cast<long long>(detail::random_below(rng, static_cast<std::size_t>(denom_max)));
            const Rational value(numer, denom);
            entries[static_cast<std::size_t>(i) * n + j] = value;
            entries[static_cast<std::size_t>(j) * n + i] = value;
        }
    }
    return SymMatrix(n, std::move(entries));
}

struct CheckSuite {
    std::string name;
    long long passed = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // first few failure descriptions

    void record(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 10) {
                failures.push_back(what);
            }
        }
    }
};

struct CampaignSummary {
    std::size_t corpus_size = 0;
    std::vector<CheckSuite> suites;

    long long total_passed() const {
        long long total = 0;
        for (const auto& suite : suites) {
            total += suite.passed;
        }
        return total;
    }

    long long total_failed() const {
        long long total = 0;
        for (const auto& suite : suites) {
            total += suite.failed;
        }
        return total;
    }

    bool ok() const { return total_failed() == 0; }
};

inline void to_json(nlohmann::json& j, const CheckSuite& suite) {
    j = nlohmann::json{
        {"name", suite.name},
        {"passed", suite.passed},
        {"failed", suite.failed},
        {"failures", suite.failures},
    };
}

inline void to_json(nlohmann::json& j, const CampaignSummary& summary) {
    j = nlohmann::json{
        {"corpus_size", summary.corpus_size},
        {"suites", summary.suites},
        {"total_passed", summary.total_passed()},
        {"total_failed", summary.total_failed()},
        {"ok", summary.ok()},
    };
}

// Runs every check the library knows over the configured corpus and matrix
// ensemble. Results are deterministic and ordered by corpus index.
inline CampaignSummary run_campaign(const CampaignConfig& config) {
    CampaignSummary summary;
    const auto corpus = build_corpus(config);
    summary.corpus_size = corpus.size();

    CheckSuite inequality{"inequality_gap"};
    CheckSuite equality{"equality_characterization"};
    CheckSuite extrapolated{"extrapolated_equality"};
    CheckSuite k3{"k3_identity"};
    CheckSuite regular{"regular_identity"};
    CheckSuite oracle{"oracle_equivalence"};
    CheckSuite chain{"chain_monotonicity"};
    CheckSuite spectral{"spectral_bounds"};
    CheckSuite matrix{"matrix_inequality"};
    CheckSuite consistency{"matrix_graph_consistency"};

    for (const auto& item : corpus) {
        const Graph& g = item.graph;
        const auto report = verify_inequality(g, config.kmax);
        for (const auto& record : report.records) {
            inequality.record(record.gap >= 0, item.label + " k=" + std::to_string(record.k) + " gap<0");
            auto& characterization = report.connected ? equality : extrapolated;
            characterization.record(record.match, item.label + " k=" + std::to_string(record.k) +
                                                      " equality mismatch");
        }

        const auto k3_report = verify_k3(g);
        k3.record(k3_report.match, item.label + " k3 gap != irregularity");

        if (const auto d = regular_degree(g)) {
            for (const auto& record : report.records) {
                regular.record(record.walks == BigCount(g.vertex_count()) * int_pow(BigCount(*d), record.k),
                               item.label + " k=" + std::to_string(record.k) + " walks != n*d^k");
            }
        }

        if (g.vertex_count() <= config.oracle_n_max) {
            for (int k = 0; k <= config.oracle_k_max; ++k) {
                WalkEnumLimits limits{config.oracle_n_max, config.oracle_k_max};
                oracle.record(total_walks(g, k) == brute_force_walks(g, k, limits),
                              item.label + " k=" + std::to_string(k) + " oracle disagrees");
            }
        }

        for (int k = 1; k <= config.chain_kmax; ++k) {
            const auto chain_report = verify_chain(g, k);
            chain.record(chain_report.monotone && chain_report.endpoints_ok,
                         item.label + " k=" + std::to_string(k) + " chain not monotone");
        }

        if (report.connected && g.edge_count() > 0) {
            const auto sr = perron(g, config.spectral_tol);
            const double delta = g.max_degree();
            spectral.record(sr.residual <= config.spectral_tol, item.label + " residual above tol");
            spectral.record(sr.lambda <= delta * (1 + 1e-9), item.label + " lambda above max degree");
            if (!report.regular) {
                spectral.record(sr.lambda <= delta - 1e-6, item.label + " lambda not separated from max degree");
            }
            for (int k = 0; k <= config.spectral_kmax; ++k) {
                const double walks = to_double(total_walks(g, k));
                const double bound = spectral_walk_bound(g, k, sr);
                spectral.record(walks <= bound * (1 + 1e-6),
                                item.label + " k=" + std::to_string(k) + " spectral bound violated");
            }
            const auto crossover = crossover_k(g, sr);
            if (report.regular) {
                spectral.record(!crossover.has_value(), item.label + " regular graph reported a crossover");
            } else {
                spectral.record(crossover.has_value(), item.label + " missing crossover");
                if (crossover) {
                    double norm2 = 0.0;
                    for (double value : sr.nu) {
                        norm2 += value * value;
                    }
                    for (long long k = *crossover; k <= *crossover + 10; ++k) {
                        spectral.record(
                            detail::spectral_bound_side(norm2, sr.lambda, delta, k, 1e-9) < 0,
                            item.label + " k=" + std::to_string(k) + " bound not below Delta^k");
                    }
                    if (*crossover > 1) {
                        spectral.record(
                            detail::spectral_bound_side(norm2, sr.lambda, delta, *crossover - 1, 1e-9) >= 0,
                            item.label + " crossover not minimal");
                    }
                }
            }
        }

        const auto adj = adjacency_matrix(g);
        bool degrees_agree = true;
        const auto sums = abs_row_sums(adj);
        const auto degrees = degree_vector(g);
        for (int i = 0; i < g.vertex_count(); ++i) {
            degrees_agree = degrees_agree && sums[i] == Rational(degrees[i]);
        }
        consistency.record(degrees_agree, item.label + " abs row sums != degrees");
        for (int k = 0; k <= config.matrix_kmax; ++k) {
            consistency.record(grand_sum_power(adj, k) == Rational(total_walks(g, k)),
                               item.label + " k=" + std::to_string(k) + " grand sum != walk count");
        }
    }

    std::mt19937_64 rng(config.matrix_seed);
    for (int t = 0; t < config.matrix_count; ++t) {
        const auto m =
            random_symmetric_matrix(rng, config.matrix_n_max, config.matrix_numer_max, config.matrix_denom_max);
        const auto records = verify_matrix_inequality(m, config.matrix_kmax);
        bool all_hold = true;
        for (const auto& record : records) {
            all_hold = all_hold && record.holds;
        }
        matrix.record(all_hold, "ensemble matrix " + std::to_string(t) + " violates the inequality");
    }

    summary.suites = {inequality, equality, extrapolated, k3,      regular,
                      oracle,     chain,    spectral,     matrix, consistency};
    return summary;
}

}  // namespace walkcount
