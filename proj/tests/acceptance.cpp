// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Budgets are wall-clock seconds and count as part of the
// criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "linchrom/experiments.hpp"
#include "linchrom/rng.hpp"
#include "oracles.hpp"

using namespace linchrom;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run_criterion(int id, const std::string& name, double budget_seconds,
                   const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = seconds < budget_seconds;
    bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %2d. %s (%.1fs/%.0fs)%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                seconds, budget_seconds, outcome.detail.empty() ? "" : " — ",
                outcome.detail.c_str());
    if (outcome.pass && !in_budget) std::printf("       exceeded the runtime budget\n");
    std::fflush(stdout);
}

// shared across criteria 5 and 7: every certificate produced anywhere here
long long certificates_produced = 0;
long long certificates_verified = 0;

Colouring random_colouring(int n, int classes, RngSeed seed) {
    SplitMix64 rng(seed);
    Colouring phi(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        phi[static_cast<std::size_t>(v)] =
            static_cast<int>(rng.next_below(static_cast<std::uint64_t>(classes)));
    return phi;
}

} // namespace

int main() {
    std::printf("acceptance suite (hardware threads: %u)\n",
                std::thread::hardware_concurrency());

    run_criterion(1, "path formula: tree_depth(P_k) and path_centred_value", 5.0, [] {
        for (int k = 1; k <= 10; ++k) {
            int expected = static_cast<int>(std::floor(std::log2(k))) + 1;
            if (tree_depth(oracle::path_graph(k)) != expected)
                return Outcome{false, "tree_depth(P_" + std::to_string(k) + ")"};
        }
        // independent oracle: repeated halving
        for (std::uint64_t k = 1; k <= (1ULL << 20); ++k) {
            int bits = 0;
            for (std::uint64_t x = k; x; x >>= 1) ++bits;
            if (path_centred_value(k) != bits)
                return Outcome{false, "path_centred_value(" + std::to_string(k) + ")"};
        }
        return Outcome{true, "k = 1..10 exact, closed form checked to 2^20"};
    });

    run_criterion(2, "path equality: chi_lin(P_k) = tree_depth(P_k), k = 1..10", 120.0, [] {
        for (int k = 1; k <= 10; ++k) {
            Graph p = oracle::path_graph(k);
            if (linear_chromatic_number(p) != tree_depth(p))
                return Outcome{false, "k = " + std::to_string(k)};
        }
        return Outcome{true, ""};
    });

    run_criterion(3, "sandwich chain on exhaustive n<=6 plus 200 random n<=9", 600.0, [] {
        long long graphs = 0;
        for (int n = 1; n <= 6; ++n)
            for (const auto& g6 : all_connected_graph6(n)) {
                Graph g = parse_graph6(g6);
                int chi = chromatic_number(g), lin = linear_chromatic_number(g),
                    cen = tree_depth(g);
                ++graphs;
                if (!(chi <= lin && lin <= cen)) return Outcome{false, "violation at " + g6};
            }
        for (int i = 0; i < 200; ++i) {
            int n = 1 + i % 9;
            double p = 0.1 + 0.085 * static_cast<double>(i % 10);
            Graph g = sample_gnp(n, p, derive_stream_seed(20250809, i));
            int chi = chromatic_number(g), lin = linear_chromatic_number(g), cen = tree_depth(g);
            ++graphs;
            if (!(chi <= lin && lin <= cen))
                return Outcome{false, "violation at random graph " + std::to_string(i)};
        }
        return Outcome{true, std::to_string(graphs) + " graphs, zero violations"};
    });

    run_criterion(4, "conjecture sweep over all connected graphs n<=6", 600.0, [] {
        std::string corpus_text;
        for (int n = 1; n <= 6; ++n)
            for (const auto& g6 : all_connected_graph6(n)) corpus_text += g6 + "\n";
        std::istringstream corpus(corpus_text);
        SweepResult result = run_conjecture_sweep(corpus);
        if (result.summary.errors != 0) return Outcome{false, "corpus errors"};
        if (result.summary.graphs != 143)
            return Outcome{false, "expected 143 graphs, got " +
                                      std::to_string(result.summary.graphs)};
        if (result.summary.chain_violations != 0 || result.summary.conjecture_violations != 0)
            return Outcome{false, "violations found"};
        std::ostringstream detail;
        detail << "max ratio " << result.summary.max_ratio << " at witness "
               << result.summary.witness_graph6;
        return Outcome{true, detail.str()};
    });

    run_criterion(5, "certificate soundness: 100% of produced certificates verify", 600.0, [&] {
        // fixed cases
        {
            CertifyOutcome c4 = certify_not_linear(oracle::cycle_graph(4), {1, 2, 1, 2}, 1,
                                                   PosaParams{256, 24, "ordered", 42});
            if (c4.certificate) {
                ++certificates_produced;
                if (verify_certificate(oracle::cycle_graph(4), {1, 2, 1, 2}, *c4.certificate,
                                       c4.pairing)
                        .ok)
                    ++certificates_verified;
            }
            CertifyOutcome k6 = certify_not_linear(oracle::complete_graph(6), {0, 0, 1, 1, 2, 2},
                                                   std::nullopt,
                                                   PosaParams{256, 24, "ordered", 7});
            if (k6.certificate) {
                ++certificates_produced;
                if (verify_certificate(oracle::complete_graph(6), {0, 0, 1, 1, 2, 2},
                                       *k6.certificate, k6.pairing)
                        .ok)
                    ++certificates_verified;
            }
        }
        // mixed random corpus: plain graphs and two-round samples
        for (int i = 0; i < 40; ++i) {
            RngSeed ts = derive_stream_seed(515, i);
            int n = 20 + static_cast<int>(ts % 60);
            int classes = std::max(1, n / 2 - static_cast<int>(ts % 5));
            Colouring phi = balanced_random_colouring(n, classes, derive_stream_seed(ts, 1));
            PosaParams posa{256, 24, "ordered", derive_stream_seed(ts, 2)};
            if (i % 2 == 0) {
                Graph g = sample_gnp(n, 0.5, derive_stream_seed(ts, 3));
                CertifyOutcome out = certify_not_linear(g, phi, std::nullopt, posa);
                if (out.certificate) {
                    ++certificates_produced;
                    if (verify_certificate(g, phi, *out.certificate, out.pairing).ok)
                        ++certificates_verified;
                }
            } else {
                TwoRoundSample sample = sample_two_round(n, 0.5, derive_stream_seed(ts, 4));
                CertifyOutcome out = certify_not_linear(sample, phi, std::nullopt, posa);
                if (out.certificate) {
                    ++certificates_produced;
                    if (verify_certificate(sample.g_union, phi, *out.certificate, out.pairing).ok)
                        ++certificates_verified;
                }
            }
        }
        // random colourings too (not only balanced ones)
        for (int i = 0; i < 20; ++i) {
            RngSeed ts = derive_stream_seed(516, i);
            int n = 16 + static_cast<int>(ts % 30);
            Graph g = sample_gnp(n, 0.6, derive_stream_seed(ts, 1));
            Colouring phi = random_colouring(n, std::max(1, n / 3), derive_stream_seed(ts, 2));
            CertifyOutcome out =
                certify_not_linear(g, phi, std::nullopt, PosaParams{256, 24, "ordered", ts});
            if (out.certificate) {
                ++certificates_produced;
                if (verify_certificate(g, phi, *out.certificate, out.pairing).ok)
                    ++certificates_verified;
            }
        }
        std::string detail = std::to_string(certificates_verified) + "/" +
                             std::to_string(certificates_produced) + " certificates verified";
        if (certificates_produced == 0) return Outcome{false, "no certificates produced"};
        return Outcome{certificates_verified == certificates_produced, detail};
    });

    run_criterion(6, "oracle equivalence: peel_core and find_path vs brute force", 600.0, [] {
        for (int i = 0; i < 500; ++i) {
            SplitMix64 rng(derive_stream_seed(606, i));
            int n = 4 + static_cast<int>(rng.next_below(9)); // 4..12 vertices
            Graph g = sample_gnp(n, 0.25 + 0.05 * static_cast<double>(i % 10),
                                 derive_stream_seed(607, i));
            // random even subset with random pairing, |S| <= 12
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (rng.next_below(3) != 0) verts.push_back(v);
            if (verts.size() % 2 != 0) verts.pop_back();
            SetPairing sp;
            sp.s = verts;
            rng.shuffle(verts);
            for (std::size_t t = 0; t + 1 < verts.size(); t += 2)
                sp.pairs.emplace_back(std::min(verts[t], verts[t + 1]),
                                      std::max(verts[t], verts[t + 1]));
            std::sort(sp.pairs.begin(), sp.pairs.end());
            if (sp.s.empty()) continue;
            int k = static_cast<int>(rng.next_below(5));
            if (peel_core(g, sp, k).core.s != oracle::pair_closed_core_by_subsets(g, sp, k))
                return Outcome{false, "peel mismatch at instance " + std::to_string(i)};
        }
        for (int i = 0; i < 500; ++i) {
            SplitMix64 rng(derive_stream_seed(608, i));
            int n = 2 + static_cast<int>(rng.next_below(7)); // 2..8
            Graph g = sample_gnp(n, 0.2 + 0.06 * static_cast<double>(i % 10),
                                 derive_stream_seed(609, i));
            int classes = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            Colouring phi = random_colouring(n, classes, derive_stream_seed(610, i));
            auto mine = find_path_without_centre(g, phi);
            auto naive = oracle::any_bad_path(g, phi);
            if (mine.has_value() != naive.has_value())
                return Outcome{false, "bad-path mismatch at instance " + std::to_string(i)};
            if (mine && has_centre(phi, mine->vertices).has_value())
                return Outcome{false, "unsound witness at instance " + std::to_string(i)};
        }
        return Outcome{true, "500 + 500 instances, zero mismatches"};
    });

    run_criterion(7, "dense pipeline: n=100, omega=50, 100 trials, >=95 certificates", 120.0, [] {
        ExperimentConfig cfg;
        cfg.regime = Regime::dense;
        cfg.n = 100;
        cfg.omega_or_c = 50.0;
        cfg.classes = 50;
        cfg.trials = 100;
        cfg.seed = 408122025;
        auto rows = run_dense_experiment(cfg, 2);
        long long successes = 0, verified = 0;
        for (const auto& row : rows) {
            if (row.success == 1) {
                ++successes;
                if (row.verified == 1) ++verified;
            }
        }
        if (successes < 95) return Outcome{false, std::to_string(successes) + "/100 certificates"};
        if (verified != successes) return Outcome{false, "a certificate failed verification"};
        return Outcome{true, std::to_string(successes) + "/100 certificates, all verified"};
    });

    run_criterion(8, "sparse theorem checks: c in {0.5, 1.0}, n = 10^4, 20 trials each", 900.0,
                  [] {
                      for (double c : {0.5, 1.0}) {
                          ExperimentConfig cfg;
                          cfg.regime = Regime::sparse;
                          cfg.n = 10000;
                          cfg.omega_or_c = c;
                          cfg.trials = 20;
                          cfg.seed = 81020;
                          auto rows = run_sparse_experiment(cfg, 2);
                          for (const auto& row : rows) {
                              if (row.small_checks_ok != 1)
                                  return Outcome{false, "theorem check failed at c = " +
                                                            std::to_string(c)};
                              if (row.small_components_checked <= 0)
                                  return Outcome{false, "no small components checked"};
                          }
                      }
                      return Outcome{true, "40 trials, every per-component check passed"};
                  });

    run_criterion(9, "peeling analogue: n=400, omega=80, T <= |S|/4 in >= 95/100 trials", 120.0,
                  [] {
                      const int n = 400;
                      const double p = 80.0 / n;
                      const int k = static_cast<int>(std::ceil(n * p / 3.0));
                      int ok = 0;
                      for (int trial = 0; trial < 100; ++trial) {
                          RngSeed ts = derive_stream_seed(940080, trial);
                          Graph g = sample_gnp(n, p, derive_stream_seed(ts, 0));
                          std::vector<int> verts(n);
                          std::iota(verts.begin(), verts.end(), 0);
                          SplitMix64 rng(derive_stream_seed(ts, 1));
                          rng.shuffle(verts);
                          SetPairing sp;
                          sp.s.resize(n);
                          std::iota(sp.s.begin(), sp.s.end(), 0);
                          for (int i = 0; i < n; i += 2)
                              sp.pairs.emplace_back(std::min(verts[i], verts[i + 1]),
                                                    std::max(verts[i], verts[i + 1]));
                          std::sort(sp.pairs.begin(), sp.pairs.end());
                          if (peel_core(g, sp, k).removed_pairs <= n / 4) ++ok;
                      }
                      return Outcome{ok >= 95, std::to_string(ok) + "/100 trials with T <= |S|/4"};
                  });

    run_criterion(10, "determinism: byte-identical CSV under maximal parallelism", 600.0, [] {
        const int threads = std::max(2u, std::thread::hardware_concurrency());
        {
            ExperimentConfig cfg;
            cfg.regime = Regime::dense;
            cfg.n = 80;
            cfg.omega_or_c = 40;
            cfg.classes = 40;
            cfg.trials = 10;
            cfg.seed = 10101;
            if (to_csv(run_dense_experiment(cfg, threads)) !=
                to_csv(run_dense_experiment(cfg, threads)))
                return Outcome{false, "dense rerun differed"};
        }
        {
            ExperimentConfig cfg;
            cfg.regime = Regime::sparse;
            cfg.n = 3000;
            cfg.omega_or_c = 0.8;
            cfg.trials = 4;
            cfg.seed = 10102;
            if (to_csv(run_sparse_experiment(cfg, threads)) !=
                to_csv(run_sparse_experiment(cfg, threads)))
                return Outcome{false, "sparse rerun differed"};
        }
        {
            ExperimentConfig cfg;
            cfg.regime = Regime::supercritical;
            cfg.n = 3000;
            cfg.omega_or_c = 2.0;
            cfg.trials = 3;
            cfg.seed = 10103;
            if (to_csv(run_supercritical_probe(cfg, threads)) !=
                to_csv(run_supercritical_probe(cfg, threads)))
                return Outcome{false, "supercritical rerun differed"};
        }
        return Outcome{true, "three regimes, reruns byte-identical"};
    });

    std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
