// Command line front end: analyze graphs, generate corpus families, verify
// the walk-count identities, and sweep whole campaigns.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkcount/campaign.hpp"
#include "walkcount/degree_powers.hpp"
#include "walkcount/generators.hpp"
#include "walkcount/graph.hpp"
#include "walkcount/report.hpp"
#include "walkcount/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nlohmann::json spectral_json(const walkcount::Graph& g, const walkcount::SpectralResult& sr) {
    nlohmann::json j{
        {"lambda", sr.lambda},
        {"nu", sr.nu},
        {"iterations", sr.iterations},
        {"residual", sr.residual},
        {"max_degree", g.max_degree()},
    };
    try {
        const auto crossover = walkcount::crossover_k(g, sr);
        if (crossover) {
            j["crossover_k"] = *crossover;
        } else {
            j["crossover_k"] = nullptr;
        }
    } catch (const std::runtime_error& err) {
        j["crossover_k"] = "indeterminate";
        j["crossover_error"] = err.what();
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact walk counts, degree power sums, and identity verification for graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    int kmax = 8;
    std::string format = "json";
    double tol = walkcount::kDefaultSpectralTol;
    std::uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "Full per-graph report: inequality table, k=3 gap, chain, spectrum");
    analyze->add_option("--input", input, "edge-list file, or - for stdin");
    analyze->add_option("-k,--kmax", kmax, "largest walk length to check");
    analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--tol", tol, "spectral residual tolerance");

    auto* generate = app.add_subcommand("generate", "Emit a family graph as an edge list on stdout");
    std::string family_arg;
    walkcount::FamilySpec spec;
    generate->add_option("--family", family_arg, "path|cycle|star|complete|complete_bipartite|random_connected|random_regular")
        ->required();
    generate->add_option("-n,--n", spec.n, "vertex count (first part size for complete_bipartite)")->required();
    generate->add_option("-b,--part2", spec.b, "second part size (complete_bipartite)");
    generate->add_option("-d,--degree", spec.d, "degree (random_regular)");
    generate->add_option("-p,--prob", spec.p, "edge probability (random_connected)");
    generate->add_option("--seed", seed, "random seed");

    auto* verify = app.add_subcommand("verify", "Check the walk-count inequality and equality prediction per k");
    verify->add_option("--input", input, "edge-list file, or - for stdin");
    verify->add_option("-k,--kmax", kmax, "largest walk length to check");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* spectral = app.add_subcommand("spectral", "Perron pair, residual, and spectral crossover");
    spectral->add_option("--input", input, "edge-list file, or - for stdin");
    spectral->add_option("--tol", tol, "residual tolerance");

    auto* matrix = app.add_subcommand("matrix", "Check the symmetric-matrix inequality per k");
    matrix->add_option("--input", input, "matrix file, or - for stdin");
    matrix->add_option("-k,--kmax", kmax, "largest power to check");
    matrix->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* campaign = app.add_subcommand("campaign", "Run the configured verification sweep");
    std::string config_path;
    std::string output_path;
    campaign->add_option("--config", config_path, "campaign config file (defaults apply when omitted)");
    campaign->add_option("--output", output_path, "write the JSON summary here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const auto g = walkcount::parse_edge_list(read_input(input));
            const auto report = walkcount::verify_inequality(g, kmax);
            if (format == "csv") {
                std::cout << walkcount::to_csv(report);
                return report.all_match() ? kExitOk : kExitVerificationFailed;
            }
            nlohmann::json j = report;
            j["k3"] = walkcount::verify_k3(g);
            j["chain"] = walkcount::verify_chain(g, std::max(1, kmax));
            if (report.connected && g.edge_count() > 0) {
                j["spectral"] = spectral_json(g, walkcount::perron(g, tol));
            }
            std::cout << j.dump(2) << '\n';
            return report.all_match() ? kExitOk : kExitVerificationFailed;
        }

        if (generate->parsed()) {
            const auto family = walkcount::family_from_name(family_arg);
            if (!family) {
                std::cerr << "error: unknown family '" << family_arg << "'\n";
                return kExitError;
            }
            spec.family = *family;
            const auto g = walkcount::generate(spec, seed);
            walkcount::serialize_edge_list(g, std::cout);
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto g = walkcount::parse_edge_list(read_input(input));
            const auto report = walkcount::verify_inequality(g, kmax);
            bool gaps_ok = true;
            for (const auto& record : report.records) {
                gaps_ok = gaps_ok && record.gap >= 0;
            }
            if (format == "csv") {
                std::cout << walkcount::to_csv(report);
            } else {
                std::cout << nlohmann::json(report).dump(2) << '\n';
            }
            return (report.all_match() && gaps_ok) ? kExitOk : kExitVerificationFailed;
        }

        if (spectral->parsed()) {
            const auto g = walkcount::parse_edge_list(read_input(input));
            const auto sr = walkcount::perron(g, tol);
            std::cout << spectral_json(g, sr).dump(2) << '\n';
            return kExitOk;
        }

        if (matrix->parsed()) {
            const auto m = walkcount::parse_matrix(read_input(input));
            const auto records = walkcount::verify_matrix_inequality(m, kmax);
            bool all_hold = true;
            for (const auto& record : records) {
                all_hold = all_hold && record.holds;
            }
            if (format == "csv") {
                std::cout << walkcount::to_csv(records);
            } else {
                nlohmann::json j{{"n", m.size()}, {"records", records}, {"all_hold", all_hold}};
                std::vector<std::string> sums;
                for (const auto& d : walkcount::abs_row_sums(m)) {
                    sums.push_back(d.str());
                }
                j["abs_row_sums"] = sums;
                std::cout << j.dump(2) << '\n';
            }
            return all_hold ? kExitOk : kExitVerificationFailed;
        }

        if (campaign->parsed()) {
            walkcount::CampaignConfig config;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    throw std::runtime_error("cannot open config file '" + config_path + "'");
                }
                config = walkcount::parse_campaign_config(in);
            }
            const auto summary = walkcount::run_campaign(config);
            const nlohmann::json j = summary;
            if (!output_path.empty()) {
                std::ofstream out(output_path);
                if (!out) {
                    throw std::runtime_error("cannot open output file '" + output_path + "'");
                }
                out << j.dump(2) << '\n';
            } else {
                std::cout << j.dump(2) << '\n';
            }
            std::cerr << "corpus: " << summary.corpus_size << " graphs, checks passed: " << summary.total_passed()
                      << ", failed: " << summary.total_failed() << '\n';
            return summary.ok() ? kExitOk : kExitVerificationFailed;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
