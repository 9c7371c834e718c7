// linchrom CLI: graph generation, exact chromatic values, colouring
// verification, the non-linearity certificate pipeline, experiments and the
// conjecture sweep. Exit codes: 0 success, 1 verification failure, 2 usage /
// size-guard / parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "linchrom/certificate.hpp"
#include "linchrom/experiments.hpp"
#include "linchrom/rng.hpp"

namespace lc = linchrom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        lines.push_back(line);
    }
    return lines;
}

// graphs arrive inline (--graph6) or as a file of lines (--input, "-" = stdin)
std::vector<std::string> gather_graphs(const std::string& inline_g6, const std::string& input) {
    if (!inline_g6.empty() && !input.empty())
        throw lc::ParameterError("use either --graph6 or --input, not both");
    if (!inline_g6.empty()) return {inline_g6};
    if (input == "-") return read_lines(std::cin);
    if (!input.empty()) {
        std::ifstream file(input);
        if (!file) throw lc::IoError("cannot open input file: " + input);
        return read_lines(file);
    }
    throw lc::ParameterError("a graph is required: pass --graph6 or --input");
}

lc::Graph single_graph(const std::string& inline_g6, const std::string& input) {
    auto lines = gather_graphs(inline_g6, input);
    if (lines.size() != 1)
        throw lc::ParameterError("expected exactly one graph, got " +
                                 std::to_string(lines.size()));
    return lc::parse_graph6(lines[0]);
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw lc::IoError("cannot open for writing: " + output);
    file << text;
    file.flush();
    if (!file) throw lc::IoError("write failed: " + output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear/centred colouring toolkit"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "sample G(n,p) graphs as graph6 lines");
    int gen_n = 0;
    double gen_p = 0.0;
    int gen_count = 1;
    std::uint64_t gen_seed = 0;
    int gen_all_connected = 0;
    std::string gen_output;
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--count", gen_count, "number of graphs")->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed (required when sampling)");
    gen->add_option("--all-connected", gen_all_connected,
                    "emit every connected graph on N<=6 vertices instead of sampling");
    gen->add_option("--output", gen_output, "output file (default stdout)");

    // ---- chi / chi-lin / chi-cen / verify-colouring --------------------
    struct ChiArgs {
        std::string graph6, input;
    };
    ChiArgs chi_args, chilin_args, chicen_args;
    auto add_graph_opts = [](CLI::App* cmd, ChiArgs& args) {
        cmd->add_option("--graph6", args.graph6, "graph6 string");
        cmd->add_option("--input", args.input, "file of graph6 lines ('-' = stdin)");
    };
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    add_graph_opts(chi, chi_args);
    auto* chilin = app.add_subcommand("chi-lin", "exact linear chromatic number");
    add_graph_opts(chilin, chilin_args);
    auto* chicen = app.add_subcommand("chi-cen", "exact centred chromatic number (tree-depth)");
    add_graph_opts(chicen, chicen_args);

    auto* verify_col = app.add_subcommand("verify-colouring", "check a colouring property");
    std::string vc_graph6, vc_input, vc_colours, vc_property = "linear";
    verify_col->add_option("--graph6", vc_graph6, "graph6 string");
    verify_col->add_option("--input", vc_input, "file with one graph6 line ('-' = stdin)");
    verify_col->add_option("--colours", vc_colours, "comma-separated colour ids")->required();
    verify_col->add_option("--property", vc_property, "proper | linear | centred")->capture_default_str();

    // ---- certify --------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "run the non-linearity certificate pipeline");
    std::string ct_graph6, ct_input, ct_colours, ct_output;
    std::uint64_t ct_seed = 0;
    int ct_k_value = 0;
    int ct_rotations = lc::PosaParams{}.max_rotations_per_phase;
    int ct_restarts = lc::PosaParams{}.max_restarts;
    certify->add_option("--graph6", ct_graph6, "graph6 string");
    certify->add_option("--input", ct_input, "file with one graph6 line ('-' = stdin)");
    certify->add_option("--colours", ct_colours, "comma-separated colour ids")->required();
    certify->add_option("--seed", ct_seed, "RNG seed")->required();
    certify->add_option("--k", ct_k_value, "peeling threshold override");
    certify->add_option("--rotations", ct_rotations, "rotation budget per phase")->capture_default_str();
    certify->add_option("--restarts", ct_restarts, "restart budget")->capture_default_str();
    certify->add_option("--output", ct_output, "certificate output file (default stdout)");

    // ---- verify-cert ----------------------------------------------------
    auto* verify_cert = app.add_subcommand("verify-cert", "re-check a certificate offline");
    std::string vcert_graph6, vcert_input, vcert_colours, vcert_line, vcert_file;
    verify_cert->add_option("--graph6", vcert_graph6, "graph6 string");
    verify_cert->add_option("--input", vcert_input, "file with one graph6 line ('-' = stdin)");
    verify_cert->add_option("--colours", vcert_colours, "comma-separated colour ids")->required();
    verify_cert->add_option("--cert", vcert_line, "certificate line");
    verify_cert->add_option("--cert-file", vcert_file, "file containing the certificate line");

    // ---- experiment -------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo harness, CSV output");
    std::string ex_regime, ex_policy = "balanced-random", ex_output, ex_colours;
    int ex_n = 0, ex_classes = 0, ex_trials = -1, ex_threads = 1;
    double ex_omega = 0.0, ex_c = 0.0;
    std::uint64_t ex_seed = 0;
    experiment->add_option("--regime", ex_regime, "dense | sparse | supercritical")->required();
    experiment->add_option("--n", ex_n, "vertex count")->required();
    experiment->add_option("--omega", ex_omega, "dense density parameter (p = omega/n)");
    experiment->add_option("--c", ex_c, "sparse/supercritical density parameter (p = c/n)");
    experiment->add_option("--classes", ex_classes, "colour-class count (dense)");
    experiment->add_option("--policy", ex_policy, "balanced-random | greedy | explicit")->capture_default_str();
    experiment->add_option("--colours", ex_colours, "explicit colour list (policy=explicit)");
    experiment->add_option("--trials", ex_trials, "trial count")->required();
    experiment->add_option("--seed", ex_seed, "master seed")->required();
    experiment->add_option("--threads", ex_threads, "worker threads")->capture_default_str();
    experiment->add_option("--output", ex_output, "CSV file (default stdout)");

    // ---- sweep ------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "chi/chi_lin/chi_cen over a graph6 corpus");
    std::string sw_input, sw_output;
    sweep->add_option("--input", sw_input, "corpus file ('-' = stdin)")->required();
    sweep->add_option("--output", sw_output, "per-graph CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::string out;
            if (gen_all_connected > 0) {
                for (const auto& g6 : lc::all_connected_graph6(gen_all_connected))
                    out += g6 + "\n";
            } else {
                if (gen->count("--seed") == 0)
                    throw lc::ParameterError("--seed is required for randomized generation");
                if (gen_n <= 0) throw lc::ParameterError("--n must be positive");
                for (int i = 0; i < gen_count; ++i)
                    out += lc::encode_graph6(lc::sample_gnp(
                               gen_n, gen_p, lc::derive_stream_seed(gen_seed, i))) +
                           "\n";
            }
            emit(out, gen_output);
            return kExitOk;
        }

        auto run_chi = [&](const ChiArgs& args, auto solver) {
            std::string out;
            for (const auto& line : gather_graphs(args.graph6, args.input))
                out += std::to_string(solver(lc::parse_graph6(line))) + "\n";
            emit(out, "");
            return kExitOk;
        };
        if (chi->parsed())
            return run_chi(chi_args, [](const lc::Graph& g) { return lc::chromatic_number(g); });
        if (chilin->parsed())
            return run_chi(chilin_args,
                           [](const lc::Graph& g) { return lc::linear_chromatic_number(g); });
        if (chicen->parsed())
            return run_chi(chicen_args, [](const lc::Graph& g) { return lc::tree_depth(g); });

        if (verify_col->parsed()) {
            lc::Graph g = single_graph(vc_graph6, vc_input);
            lc::Colouring phi = lc::parse_colouring(vc_colours);
            if (vc_property == "proper") {
                if (lc::is_proper(g, phi)) {
                    std::cout << "proper\n";
                    return kExitOk;
                }
                std::cout << "not proper\n";
                return kExitVerifyFailed;
            }
            if (vc_property == "linear") {
                auto witness = lc::find_path_without_centre(g, phi);
                if (!witness) {
                    std::cout << "linear\n";
                    return kExitOk;
                }
                std::cout << "not linear; centre-free path: "
                          << lc::format_path(witness->vertices) << "\n";
                return kExitVerifyFailed;
            }
            if (vc_property == "centred") {
                auto witness = lc::is_centred(g, phi);
                if (!witness) {
                    std::cout << "centred\n";
                    return kExitOk;
                }
                std::cout << "not centred; centre-free connected set: "
                          << lc::format_path(*witness) << "\n";
                return kExitVerifyFailed;
            }
            throw lc::ParameterError("--property must be proper, linear or centred");
        }

        if (certify->parsed()) {
            lc::Graph g = single_graph(ct_graph6, ct_input);
            lc::Colouring phi = lc::parse_colouring(ct_colours);
            lc::PosaParams posa;
            posa.seed = ct_seed;
            posa.max_rotations_per_phase = ct_rotations;
            posa.max_restarts = ct_restarts;
            std::optional<int> k_override;
            if (certify->count("--k") > 0) k_override = ct_k_value;
            lc::CertifyOutcome outcome = lc::certify_not_linear(g, phi, k_override, posa);
            if (!outcome.certificate) {
                std::cerr << "certification failed: " << lc::to_string(outcome.reason)
                          << " (|S|=" << outcome.pairing.s.size()
                          << ", core=" << outcome.core.s.size() << ", k=" << outcome.k_used
                          << ")\n";
                return kExitVerifyFailed;
            }
            emit(lc::serialize_certificate(*outcome.certificate) + "\n", ct_output);
            return kExitOk;
        }

        if (verify_cert->parsed()) {
            lc::Graph g = single_graph(vcert_graph6, vcert_input);
            lc::Colouring phi = lc::parse_colouring(vcert_colours);
            if (vcert_line.empty() == vcert_file.empty())
                throw lc::ParameterError("pass exactly one of --cert / --cert-file");
            std::string line = vcert_line;
            if (!vcert_file.empty()) {
                std::ifstream file(vcert_file);
                if (!file) throw lc::IoError("cannot open certificate file: " + vcert_file);
                std::getline(file, line);
            }
            lc::BadPathCertificate cert = lc::parse_certificate(line);
            lc::VerifyResult result =
                lc::verify_certificate(g, phi, cert, lc::build_set_pairing(phi));
            std::cout << lc::to_string(result.violation) << "\n";
            return result.ok ? kExitOk : kExitVerifyFailed;
        }

        if (experiment->parsed()) {
            lc::ExperimentConfig cfg;
            cfg.regime = lc::parse_regime(ex_regime);
            cfg.n = ex_n;
            if (cfg.regime == lc::Regime::dense) {
                if (ex_omega <= 0) throw lc::ParameterError("dense regime requires --omega");
                cfg.omega_or_c = ex_omega;
            } else {
                if (ex_c <= 0) throw lc::ParameterError("this regime requires --c");
                cfg.omega_or_c = ex_c;
            }
            cfg.policy = lc::parse_colouring_policy(ex_policy);
            if (cfg.policy == lc::ColouringPolicy::explicit_list)
                cfg.explicit_colours = lc::parse_colouring(ex_colours);
            cfg.classes = ex_classes;
            cfg.trials = ex_trials;
            cfg.seed = ex_seed;
            if (ex_threads < 1) throw lc::ParameterError("--threads must be positive");
            auto rows = lc::run_experiment(cfg, ex_threads);
            emit(lc::to_csv(rows), ex_output);
            return kExitOk;
        }

        if (sweep->parsed()) {
            lc::SweepResult result;
            if (sw_input == "-") {
                result = lc::run_conjecture_sweep(std::cin);
            } else {
                std::ifstream file(sw_input);
                if (!file) throw lc::IoError("cannot open corpus: " + sw_input);
                result = lc::run_conjecture_sweep(file);
            }
            std::ostringstream summary;
            summary << "graphs=" << result.summary.graphs << " errors=" << result.summary.errors
                    << " chain_violations=" << result.summary.chain_violations
                    << " conjecture_violations=" << result.summary.conjecture_violations
                    << " max_ratio=" << result.summary.max_ratio << " witness="
                    << (result.summary.witness_graph6.empty() ? "-" : result.summary.witness_graph6)
                    << "\n";
            if (result.summary.chain_violations > 0 || result.summary.conjecture_violations > 0)
                summary << "VIOLATION FOUND: inspect the rows above before believing it; a "
                           "counterexample here is far more likely a solver bug\n";
            if (sw_output.empty()) {
                emit(lc::to_csv(result.rows), "");
                std::cerr << summary.str();
            } else {
                lc::write_csv(result.rows, sw_output);
                std::cout << summary.str();
            }
            return (result.summary.chain_violations > 0 ||
                    result.summary.conjecture_violations > 0)
                       ? kExitVerifyFailed
                       : kExitOk;
        }
    } catch (const lc::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lc::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lc::ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lc::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
