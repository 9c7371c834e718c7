#include "linchrom/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <set>
#include <thread>

#include "linchrom/rng.hpp"

namespace linchrom {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::dense: return "dense";
        case Regime::sparse: return "sparse";
        case Regime::supercritical: return "supercritical";
        case Regime::conjecture: return "conjecture";
    }
    return "?";
}

Regime parse_regime(std::string_view text) {
    if (text == "dense") return Regime::dense;
    if (text == "sparse") return Regime::sparse;
    if (text == "supercritical") return Regime::supercritical;
    if (text == "conjecture") return Regime::conjecture;
    throw ParameterError("unknown regime: " + std::string(text));
}

std::string to_string(ColouringPolicy p) {
    switch (p) {
        case ColouringPolicy::balanced_random: return "balanced-random";
        case ColouringPolicy::greedy: return "greedy";
        case ColouringPolicy::explicit_list: return "explicit";
    }
    return "?";
}

ColouringPolicy parse_colouring_policy(std::string_view text) {
    if (text == "balanced-random") return ColouringPolicy::balanced_random;
    if (text == "greedy") return ColouringPolicy::greedy;
    if (text == "explicit") return ColouringPolicy::explicit_list;
    throw ParameterError("unknown colouring policy: " + std::string(text));
}

Colouring balanced_random_colouring(int n, int classes, RngSeed seed) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (classes < 1 || classes > std::max(n, 1))
        throw ParameterError("class count must be between 1 and n");
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
    SplitMix64 rng(seed);
    rng.shuffle(verts);
    Colouring phi(static_cast<std::size_t>(n), 0);
    const int base = n / classes;
    const int extra = n % classes; // first `extra` classes get one more vertex
    std::size_t at = 0;
    for (int c = 0; c < classes; ++c) {
        int size = base + (c < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) phi[static_cast<std::size_t>(verts[at++])] = c;
    }
    return phi;
}

Colouring greedy_proper_colouring(const Graph& g) {
    const int n = g.vertex_count();
    Colouring phi(static_cast<std::size_t>(n), -1);
    std::vector<char> taken;
    for (int v = 0; v < n; ++v) {
        taken.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int u : g.neighbours(v))
            if (phi[static_cast<std::size_t>(u)] >= 0)
                taken[static_cast<std::size_t>(phi[static_cast<std::size_t>(u)])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        phi[static_cast<std::size_t>(v)] = c;
    }
    return phi;
}

// ---------------------------------------------------------------------------
// trial scheduling: rows land in a pre-sized vector by trial index, so the
// output is independent of thread interleaving

namespace {

template <typename Fn>
std::vector<TrialRow> run_trials(int trials, int threads, Fn&& trial_fn) {
    if (trials < 0) throw ParameterError("trial count must be non-negative");
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    if (trials == 0) return rows;
    threads = std::max(1, std::min(threads, trials));

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= trials) return;
            try {
                rows[static_cast<std::size_t>(i)] = trial_fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void maybe_write(const ExperimentConfig& cfg, const std::vector<TrialRow>& rows) {
    if (!cfg.output_path.empty()) write_csv(rows, cfg.output_path);
}

int small_component_cap() { return SolverLimits{}.linear_max_n; } // 11

} // namespace

std::vector<TrialRow> run_dense_experiment(const ExperimentConfig& cfg, int threads) {
    if (cfg.regime != Regime::dense) throw ParameterError("config regime is not dense");
    if (cfg.n < 1) throw ParameterError("n must be positive");
    if (!(cfg.omega_or_c > 0.0)) throw ParameterError("omega must be positive");
    if (cfg.omega_or_c > cfg.n) throw ParameterError("omega must satisfy omega <= n (p <= 1)");
    if (cfg.policy == ColouringPolicy::balanced_random && cfg.classes < 1)
        throw ParameterError("balanced-random policy needs a positive class count");
    if (cfg.policy == ColouringPolicy::explicit_list &&
        static_cast<int>(cfg.explicit_colours.size()) != cfg.n)
        throw ParameterError("explicit colour list must cover all n vertices");

    const double p = cfg.omega_or_c / cfg.n;
    auto rows = run_trials(cfg.trials, threads, [&](int trial) {
        const long long t0 = now_ms();
        const std::uint64_t ts = derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        TwoRoundSample sample = sample_two_round(cfg.n, p, derive_stream_seed(ts, 0));

        Colouring phi;
        switch (cfg.policy) {
            case ColouringPolicy::balanced_random:
                phi = balanced_random_colouring(cfg.n, cfg.classes, derive_stream_seed(ts, 1));
                break;
            case ColouringPolicy::greedy: phi = greedy_proper_colouring(sample.g_union); break;
            case ColouringPolicy::explicit_list: phi = cfg.explicit_colours; break;
        }

        PosaParams posa;
        posa.seed = derive_stream_seed(ts, 2);
        CertifyOutcome outcome = certify_not_linear(sample, phi, std::nullopt, posa);

        TrialRow row;
        row.trial_index = trial;
        row.seed = ts;
        row.regime = Regime::dense;
        row.n = cfg.n;
        row.density_param = cfg.omega_or_c;
        row.classes = cfg.policy == ColouringPolicy::balanced_random
                          ? cfg.classes
                          : static_cast<int>(std::set<int>(phi.begin(), phi.end()).size());
        row.success = outcome.certificate ? 1 : 0;
        row.failure_reason = outcome.certificate ? "" : to_string(outcome.reason);
        row.set_size = static_cast<long long>(outcome.pairing.s.size());
        row.core_size = static_cast<long long>(outcome.core.s.size());
        row.removed_pairs = outcome.removed_pairs;
        if (outcome.goodness) {
            row.goodness_connected = outcome.goodness->connected ? 1 : 0;
            row.goodness_expansion_ok = outcome.goodness->expansion_ok ? 1 : 0;
        }
        if (outcome.certificate) {
            row.path_edges = static_cast<long long>(outcome.certificate->path.size()) - 1;
            VerifyResult check = verify_certificate(sample.g_union, phi, *outcome.certificate,
                                                    build_set_pairing(phi));
            row.verified = check.ok ? 1 : 0;
        }
        row.wall_time_ms = now_ms() - t0;
        return row;
    });
    maybe_write(cfg, rows);
    return rows;
}

std::vector<TrialRow> run_sparse_experiment(const ExperimentConfig& cfg, int threads) {
    if (cfg.regime != Regime::sparse) throw ParameterError("config regime is not sparse");
    if (cfg.n < 1) throw ParameterError("n must be positive");
    if (!(cfg.omega_or_c > 0.0 && cfg.omega_or_c <= 1.0))
        throw ParameterError("sparse regime needs 0 < c <= 1");

    const double p = cfg.omega_or_c / cfg.n;
    auto rows = run_trials(cfg.trials, threads, [&](int trial) {
        const long long t0 = now_ms();
        const std::uint64_t ts = derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        Graph g = sample_gnp(cfg.n, p, derive_stream_seed(ts, 0));

        TrialRow row;
        row.trial_index = trial;
        row.seed = ts;
        row.regime = Regime::sparse;
        row.n = cfg.n;
        row.density_param = cfg.omega_or_c;

        auto comps = components(g);
        row.component_count = static_cast<long long>(comps.size());
        long long max_comp = 0;
        int max_diam = 0;
        int lb = 0;
        long long small_checked = 0;
        bool checks_ok = true;
        bool conjecture_ok = true;
        for (const auto& comp : comps) {
            max_comp = std::max(max_comp, static_cast<long long>(comp.size()));
            InducedSubgraph sub = induced_subgraph(g, comp);
            int diam = 0;
            {
                // all-pairs BFS on the component
                const int m = sub.graph.vertex_count();
                std::vector<int> dist(static_cast<std::size_t>(m));
                std::vector<int> queue;
                for (int s0 = 0; s0 < m; ++s0) {
                    std::fill(dist.begin(), dist.end(), -1);
                    queue.assign(1, s0);
                    dist[static_cast<std::size_t>(s0)] = 0;
                    for (std::size_t head = 0; head < queue.size(); ++head)
                        for (int u : sub.graph.neighbours(queue[head]))
                            if (dist[static_cast<std::size_t>(u)] < 0) {
                                dist[static_cast<std::size_t>(u)] =
                                    dist[static_cast<std::size_t>(queue[head])] + 1;
                                diam = std::max(diam, dist[static_cast<std::size_t>(u)]);
                                queue.push_back(u);
                            }
                }
            }
            max_diam = std::max(max_diam, diam);
            int comp_lb = path_centred_value(static_cast<std::uint64_t>(diam) + 1);
            lb = std::max(lb, comp_lb);

            if (sub.graph.vertex_count() <= small_component_cap()) {
                ++small_checked;
                int chi = chromatic_number(sub.graph);
                int chi_lin = linear_chromatic_number(sub.graph);
                int chi_cen = tree_depth(sub.graph);
                if (!(chi <= chi_lin && chi_lin <= chi_cen)) checks_ok = false;
                if (!(chi_lin >= comp_lb)) checks_ok = false;
                if (!(chi_cen <= 2 * chi_lin)) conjecture_ok = false;
            }
        }
        row.max_component = max_comp;
        row.max_diameter = max_diam;
        row.lb_chi_lin = lb;
        row.small_components_checked = small_checked;
        row.small_checks_ok = checks_ok ? 1 : 0;
        row.small_conjecture_ok = conjecture_ok ? 1 : 0;
        row.wall_time_ms = now_ms() - t0;
        return row;
    });
    maybe_write(cfg, rows);
    return rows;
}

std::vector<TrialRow> run_supercritical_probe(const ExperimentConfig& cfg, int threads) {
    if (cfg.regime != Regime::supercritical)
        throw ParameterError("config regime is not supercritical");
    if (cfg.n < 1) throw ParameterError("n must be positive");
    if (!(cfg.omega_or_c > 1.0)) throw ParameterError("supercritical regime needs c > 1");

    const double p = cfg.omega_or_c / cfg.n;
    auto rows = run_trials(cfg.trials, threads, [&](int trial) {
        const long long t0 = now_ms();
        const std::uint64_t ts = derive_stream_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        Graph g = sample_gnp(cfg.n, p, derive_stream_seed(ts, 0));

        auto comps = components(g);
        const std::vector<int>* largest = &comps.front();
        for (const auto& comp : comps)
            if (comp.size() > largest->size()) largest = &comp;

        PosaParams posa;
        posa.seed = derive_stream_seed(ts, 1);
        posa.max_rotations_per_phase = 512;
        posa.max_restarts = 48;
        PathWitness best = longest_path_found(g, *largest, {}, posa);

        TrialRow row;
        row.trial_index = trial;
        row.seed = ts;
        row.regime = Regime::supercritical;
        row.n = cfg.n;
        row.density_param = cfg.omega_or_c;
        row.component_count = static_cast<long long>(comps.size());
        row.max_component = static_cast<long long>(largest->size());
        row.path_edges = static_cast<long long>(best.vertices.size()) - 1;
        row.lb_chi_lin =
            path_centred_value(static_cast<std::uint64_t>(best.vertices.size()));
        row.wall_time_ms = now_ms() - t0;
        return row;
    });
    maybe_write(cfg, rows);
    return rows;
}

std::vector<TrialRow> run_experiment(const ExperimentConfig& cfg, int threads) {
    switch (cfg.regime) {
        case Regime::dense: return run_dense_experiment(cfg, threads);
        case Regime::sparse: return run_sparse_experiment(cfg, threads);
        case Regime::supercritical: return run_supercritical_probe(cfg, threads);
        case Regime::conjecture:
            throw ParameterError("conjecture sweeps run over a graph6 corpus; use run_conjecture_sweep");
    }
    throw ParameterError("unknown regime");
}

// ---------------------------------------------------------------------------
// conjecture sweep

SweepResult run_conjecture_sweep(std::istream& corpus, const SolverLimits& limits) {
    SweepResult result;
    std::string line;
    while (std::getline(corpus, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue; // blank or header/comment
        SweepRow row;
        row.graph6 = line;
        try {
            Graph g = parse_graph6(line);
            row.n = g.vertex_count();
            row.chi = chromatic_number(g, limits);
            row.chi_lin = linear_chromatic_number(g, limits);
            row.chi_cen = tree_depth(g, limits);
            row.chain_ok = (row.chi <= row.chi_lin && row.chi_lin <= row.chi_cen) ? 1 : 0;
            row.conjecture_ok = (row.chi_cen <= 2 * row.chi_lin) ? 1 : 0;
            row.ratio = row.chi_lin > 0
                            ? static_cast<double>(row.chi_cen) / static_cast<double>(row.chi_lin)
                            : 0.0;
            ++result.summary.graphs;
            if (!row.chain_ok) ++result.summary.chain_violations;
            if (!row.conjecture_ok) ++result.summary.conjecture_violations;
            if (row.ratio > result.summary.max_ratio) {
                result.summary.max_ratio = row.ratio;
                result.summary.witness_graph6 = row.graph6;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            ++result.summary.errors;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string fmt_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string fmt_opt(long long value) { return value < 0 ? "" : std::to_string(value); }

std::string fmt_bool(int value) {
    if (value < 0) return "";
    return value ? "true" : "false";
}

template <typename Row>
std::string rows_to_csv(const std::vector<Row>& rows) {
    std::string out;
    const auto names = Row::field_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(names[i]);
    }
    out.push_back('\n');
    for (const Row& row : rows) {
        const auto fields = row.to_fields();
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_escape(fields[i]);
        }
        out.push_back('\n');
    }
    return out;
}

long long parse_opt_ll(const std::string& field) {
    if (field.empty()) return -1;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("invalid integer field: " + field, 0);
    return value;
}

int parse_opt_bool(const std::string& field) {
    if (field.empty()) return -1;
    if (field == "true") return 1;
    if (field == "false") return 0;
    throw ParseError("invalid boolean field: " + field, 0);
}

} // namespace

std::vector<std::string> TrialRow::field_names() {
    return {"trial_index",        "seed",
            "regime",             "n",
            "density_param",      "classes",
            "success",            "failure_reason",
            "set_size",           "core_size",
            "removed_pairs",      "goodness_connected",
            "goodness_expansion_ok", "verified",
            "path_edges",         "lb_chi_lin",
            "component_count",    "max_component",
            "max_diameter",       "small_components_checked",
            "small_checks_ok",    "small_conjecture_ok"};
}

std::vector<std::string> TrialRow::to_fields() const {
    return {std::to_string(trial_index),
            std::to_string(seed),
            to_string(regime),
            std::to_string(n),
            fmt_double(density_param),
            fmt_opt(classes),
            fmt_bool(success),
            failure_reason,
            fmt_opt(set_size),
            fmt_opt(core_size),
            fmt_opt(removed_pairs),
            fmt_bool(goodness_connected),
            fmt_bool(goodness_expansion_ok),
            fmt_bool(verified),
            fmt_opt(path_edges),
            fmt_opt(lb_chi_lin),
            fmt_opt(component_count),
            fmt_opt(max_component),
            fmt_opt(max_diameter),
            fmt_opt(small_components_checked),
            fmt_bool(small_checks_ok),
            fmt_bool(small_conjecture_ok)};
}

TrialRow TrialRow::from_fields(const std::vector<std::string>& fields) {
    if (fields.size() != field_names().size())
        throw ParseError("wrong trial-row field count", 0);
    TrialRow row;
    row.trial_index = parse_opt_ll(fields[0]);
    row.seed = static_cast<std::uint64_t>(std::stoull(fields[1]));
    row.regime = parse_regime(fields[2]);
    row.n = static_cast<int>(parse_opt_ll(fields[3]));
    row.density_param = std::stod(fields[4]);
    row.classes = static_cast<int>(parse_opt_ll(fields[5]));
    row.success = parse_opt_bool(fields[6]);
    row.failure_reason = fields[7];
    row.set_size = parse_opt_ll(fields[8]);
    row.core_size = parse_opt_ll(fields[9]);
    row.removed_pairs = parse_opt_ll(fields[10]);
    row.goodness_connected = parse_opt_bool(fields[11]);
    row.goodness_expansion_ok = parse_opt_bool(fields[12]);
    row.verified = parse_opt_bool(fields[13]);
    row.path_edges = parse_opt_ll(fields[14]);
    row.lb_chi_lin = static_cast<int>(parse_opt_ll(fields[15]));
    row.component_count = parse_opt_ll(fields[16]);
    row.max_component = parse_opt_ll(fields[17]);
    row.max_diameter = static_cast<int>(parse_opt_ll(fields[18]));
    row.small_components_checked = parse_opt_ll(fields[19]);
    row.small_checks_ok = parse_opt_bool(fields[20]);
    row.small_conjecture_ok = parse_opt_bool(fields[21]);
    return row;
}

std::vector<std::string> SweepRow::field_names() {
    return {"graph6", "n", "chi", "chi_lin", "chi_cen", "chain_ok", "conjecture_ok", "ratio",
            "error"};
}

std::vector<std::string> SweepRow::to_fields() const {
    return {graph6,
            fmt_opt(n),
            fmt_opt(chi),
            fmt_opt(chi_lin),
            fmt_opt(chi_cen),
            fmt_bool(chain_ok),
            fmt_bool(conjecture_ok),
            error.empty() ? fmt_double(ratio) : "",
            error};
}

std::string to_csv(const std::vector<TrialRow>& rows) { return rows_to_csv(rows); }
std::string to_csv(const std::vector<SweepRow>& rows) { return rows_to_csv(rows); }

namespace {

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

} // namespace

void write_csv(const std::vector<TrialRow>& rows, const std::string& path) {
    write_text(to_csv(rows), path);
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    write_text(to_csv(rows), path);
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_open = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"': quoted = true; row_open = true; break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                row_open = true;
                break;
            case '\r': break;
            case '\n':
                if (row_open || !field.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    rows.push_back(std::move(row));
                    row.clear();
                    row_open = false;
                }
                break;
            default: field.push_back(c); row_open = true; break;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field", text.size());
    if (row_open || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace linchrom
