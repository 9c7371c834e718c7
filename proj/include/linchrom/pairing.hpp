#pragma once

// Set-pairings (an even vertex set partitioned into pairs), the pair-closed
// k-core peeling, and the goodness (connectivity + expansion) check.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linchrom/colouring.hpp"
#include "linchrom/graph.hpp"

namespace linchrom {

struct SetPairing {
    std::vector<int> s;                    // sorted ascending, even size
    std::vector<std::pair<int, int>> pairs; // each (a<b), sorted, partitioning s

    bool operator==(const SetPairing& o) const { return s == o.s && pairs == o.pairs; }
};

// Throws ParameterError unless sp is internally consistent and fits g.
void validate_set_pairing(const Graph& g, const SetPairing& sp);

// The proof construction: per colour class, drop the smallest vertex when the
// class is odd, then pair the remaining vertices consecutively in increasing
// order.
SetPairing build_set_pairing(const Colouring& phi);

struct PeelResult {
    SetPairing core;
    int removed_pairs = 0; // T, the number of peeling steps
};

// Repeatedly remove the smallest vertex of degree < k in G[S] together with
// its partner. The result is the unique maximal pair-closed induced subgraph
// of minimum degree >= k (possibly empty).
PeelResult peel_core(const Graph& g, const SetPairing& sp, int k);

struct Fraction {
    long long num = 1;
    long long den = 45;

    long long floor_mul(long long x) const { return num * x / den; }
};

enum class ExpansionMode { exact, sampled };

struct GoodnessReport {
    bool connected = false;
    ExpansionMode expansion_mode = ExpansionMode::exact;
    bool expansion_ok = false;
    Fraction fraction;
    std::optional<std::vector<int>> violating_set; // present iff !expansion_ok
};

// good = connected and |N(X) \ X| > 2|X| for every non-empty X within the
// size bound |X| <= floor(fraction*|s|). Exact mode enumerates every such X
// and refuses when that is infeasible (bound > 3 and |s| > 20); sampled mode
// checks all singletons and pairs exactly plus sample_budget random subsets
// per larger admissible size.
GoodnessReport is_good(const Graph& g, const std::vector<int>& s, Fraction fraction = {1, 45},
                       ExpansionMode mode = ExpansionMode::sampled, int sample_budget = 64,
                       RngSeed seed = 0);

} // namespace linchrom
