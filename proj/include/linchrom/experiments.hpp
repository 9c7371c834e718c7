#pragma once

// Seeded Monte Carlo harnesses: dense-regime certificate runs, sparse-regime
// diameter/theorem checks, the supercritical long-path probe, the conjecture
// sweep over graph6 corpora, and CSV persistence. Reruns with the same config
// produce byte-identical CSV regardless of thread count.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linchrom/certificate.hpp"

namespace linchrom {

enum class Regime { dense, sparse, supercritical, conjecture };
std::string to_string(Regime r);
Regime parse_regime(std::string_view text);

enum class ColouringPolicy { balanced_random, greedy, explicit_list };
std::string to_string(ColouringPolicy p);
ColouringPolicy parse_colouring_policy(std::string_view text);

struct ExperimentConfig {
    Regime regime = Regime::dense;
    int n = 0;
    double omega_or_c = 0.0; // omega for dense, c for sparse/supercritical
    ColouringPolicy policy = ColouringPolicy::balanced_random;
    Colouring explicit_colours;  // policy == explicit_list
    int classes = 0;             // target colour-class count (dense)
    int trials = 0;
    RngSeed seed = 0;
    std::string output_path;     // empty: caller handles persistence
};

// One CSV record per trial. Fields not applicable to the regime stay at -1
// and serialise as empty. wall_time_ms is diagnostic only and deliberately
// not serialised (rows must be byte-identical across reruns).
struct TrialRow {
    long long trial_index = -1;
    std::uint64_t seed = 0;
    Regime regime = Regime::dense;
    int n = 0;
    double density_param = 0.0;
    int classes = -1;
    int success = -1; // 1/0
    std::string failure_reason;
    long long set_size = -1;
    long long core_size = -1;
    long long removed_pairs = -1;
    int goodness_connected = -1;
    int goodness_expansion_ok = -1;
    int verified = -1;
    long long path_edges = -1;
    int lb_chi_lin = -1;
    long long component_count = -1;
    long long max_component = -1;
    int max_diameter = -1;
    long long small_components_checked = -1;
    int small_checks_ok = -1;     // theorem checks: hard expectations
    int small_conjecture_ok = -1; // chi_cen <= 2*chi_lin on small components
    long long wall_time_ms = 0;   // not serialised

    std::vector<std::string> to_fields() const;
    static std::vector<std::string> field_names();
    static TrialRow from_fields(const std::vector<std::string>& fields);
    bool operator==(const TrialRow& o) const { return to_fields() == o.to_fields(); }
};

std::vector<TrialRow> run_dense_experiment(const ExperimentConfig& cfg, int threads = 1);
std::vector<TrialRow> run_sparse_experiment(const ExperimentConfig& cfg, int threads = 1);
std::vector<TrialRow> run_supercritical_probe(const ExperimentConfig& cfg, int threads = 1);

// dispatch on cfg.regime; writes cfg.output_path when non-empty
std::vector<TrialRow> run_experiment(const ExperimentConfig& cfg, int threads = 1);

struct SweepRow {
    std::string graph6;
    int n = -1;
    int chi = -1;
    int chi_lin = -1;
    int chi_cen = -1;
    int chain_ok = -1;       // chi <= chi_lin <= chi_cen
    int conjecture_ok = -1;  // chi_cen <= 2*chi_lin
    double ratio = 0.0;      // chi_cen / chi_lin
    std::string error;       // non-empty for malformed/oversized rows

    std::vector<std::string> to_fields() const;
    static std::vector<std::string> field_names();
};

struct SweepSummary {
    long long graphs = 0;
    long long errors = 0;
    long long chain_violations = 0;
    long long conjecture_violations = 0;
    double max_ratio = 0.0;
    std::string witness_graph6; // first graph attaining max_ratio
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

// graph6 corpus, one graph per line; lines starting with '>' are skipped;
// malformed lines become error rows and the sweep continues
SweepResult run_conjecture_sweep(std::istream& corpus, const SolverLimits& limits = {});

// CSV (RFC-4180-style quoting), header first, deterministic field order
std::string to_csv(const std::vector<TrialRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);
void write_csv(const std::vector<TrialRow>& rows, const std::string& path);
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// colouring builders used by the dense regime
Colouring balanced_random_colouring(int n, int classes, RngSeed seed);
Colouring greedy_proper_colouring(const Graph& g);

} // namespace linchrom
