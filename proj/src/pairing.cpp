#include "linchrom/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linchrom/rng.hpp"

namespace linchrom {

void validate_set_pairing(const Graph& g, const SetPairing& sp) {
    if (sp.s.size() % 2 != 0) throw ParameterError("set-pairing set must have even size");
    if (!std::is_sorted(sp.s.begin(), sp.s.end())) throw ParameterError("set-pairing set not sorted");
    if (std::adjacent_find(sp.s.begin(), sp.s.end()) != sp.s.end())
        throw ParameterError("set-pairing set has duplicates");
    for (int v : sp.s)
        if (v < 0 || v >= g.vertex_count()) throw ParameterError("set-pairing vertex out of range");
    if (sp.pairs.size() * 2 != sp.s.size())
        throw ParameterError("pairs do not partition the set");
    std::vector<int> covered;
    covered.reserve(sp.s.size());
    for (auto [a, b] : sp.pairs) {
        if (a >= b) throw ParameterError("pair not in (smaller,larger) order");
        covered.push_back(a);
        covered.push_back(b);
    }
    std::sort(covered.begin(), covered.end());
    if (covered != sp.s) throw ParameterError("pairs do not partition the set");
}

SetPairing build_set_pairing(const Colouring& phi) {
    std::map<int, std::vector<int>> classes; // colour id -> vertices ascending
    for (std::size_t v = 0; v < phi.size(); ++v)
        classes[phi[v]].push_back(static_cast<int>(v));

    SetPairing out;
    for (auto& [colour, verts] : classes) {
        (void)colour;
        std::size_t start = verts.size() % 2; // odd class: drop the smallest vertex
        for (std::size_t i = start; i + 1 < verts.size(); i += 2) {
            out.pairs.emplace_back(verts[i], verts[i + 1]);
            out.s.push_back(verts[i]);
            out.s.push_back(verts[i + 1]);
        }
    }
    std::sort(out.s.begin(), out.s.end());
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

PeelResult peel_core(const Graph& g, const SetPairing& sp, int k) {
    if (k < 0) throw ParameterError("core threshold must be non-negative");
    validate_set_pairing(g, sp);

    const int n = g.vertex_count();
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v : sp.s) in_s[static_cast<std::size_t>(v)] = 1;
    for (auto [a, b] : sp.pairs) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    for (int v : sp.s) {
        int d = 0;
        for (int u : g.neighbours(v))
            if (in_s[static_cast<std::size_t>(u)]) ++d;
        deg[static_cast<std::size_t>(v)] = d;
    }

    std::set<int> low;
    for (int v : sp.s)
        if (deg[static_cast<std::size_t>(v)] < k) low.insert(v);

    int removed = 0;
    while (!low.empty()) {
        int v = *low.begin();
        int w = partner[static_cast<std::size_t>(v)];
        low.erase(v);
        low.erase(w);
        in_s[static_cast<std::size_t>(v)] = 0;
        in_s[static_cast<std::size_t>(w)] = 0;
        for (int x : {v, w})
            for (int u : g.neighbours(x))
                if (in_s[static_cast<std::size_t>(u)])
                    if (--deg[static_cast<std::size_t>(u)] < k) low.insert(u);
        ++removed;
    }

    PeelResult out;
    out.removed_pairs = removed;
    for (int v : sp.s)
        if (in_s[static_cast<std::size_t>(v)]) out.core.s.push_back(v);
    for (auto [a, b] : sp.pairs)
        if (in_s[static_cast<std::size_t>(a)]) out.core.pairs.emplace_back(a, b);
    return out;
}

// ---------------------------------------------------------------------------
// goodness

namespace {

struct ExpansionChecker {
    const std::vector<std::vector<int>>& adj; // local adjacency of G[s]
    std::vector<int> stamp;
    int tick = 0;

    explicit ExpansionChecker(const std::vector<std::vector<int>>& adj_)
        : adj(adj_), stamp(adj_.size(), 0) {}

    // |N(X) \ X| > 2|X| ?
    bool expands(const std::vector<int>& x) {
        ++tick;
        for (int v : x) stamp[static_cast<std::size_t>(v)] = -tick; // members
        long long outside = 0;
        for (int v : x)
            for (int u : adj[static_cast<std::size_t>(v)]) {
                int& st = stamp[static_cast<std::size_t>(u)];
                if (st != -tick && st != tick) {
                    st = tick;
                    ++outside;
                }
            }
        return outside > 2 * static_cast<long long>(x.size());
    }
};

} // namespace

GoodnessReport is_good(const Graph& g, const std::vector<int>& s, Fraction fraction,
                       ExpansionMode mode, int sample_budget, RngSeed seed) {
    if (s.empty()) throw ParameterError("goodness check needs a non-empty vertex set");
    if (fraction.num < 0 || fraction.den <= 0) throw ParameterError("invalid fraction");
    if (sample_budget < 0) throw ParameterError("sample budget must be non-negative");

    InducedSubgraph sub = induced_subgraph(g, s);
    const int m = sub.graph.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) adj[static_cast<std::size_t>(v)] = sub.graph.neighbours(v);

    GoodnessReport report;
    report.fraction = fraction;
    report.expansion_mode = mode;

    // connectivity of G[s]
    {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::vector<int> queue(1, 0);
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int u : adj[static_cast<std::size_t>(queue[head])])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
        report.connected = static_cast<int>(queue.size()) == m;
    }

    const long long bound = fraction.floor_mul(m);
    report.expansion_ok = true;
    if (bound < 1) return report; // no admissible X

    ExpansionChecker checker(adj);
    auto fail_with = [&](const std::vector<int>& x_local) {
        report.expansion_ok = false;
        std::vector<int> global;
        global.reserve(x_local.size());
        for (int v : x_local) global.push_back(sub.vertex_map[static_cast<std::size_t>(v)]);
        std::sort(global.begin(), global.end());
        report.violating_set = std::move(global);
    };

    if (mode == ExpansionMode::exact) {
        if (bound > 3 && m > 20)
            throw SizeGuardError("exact expansion check limited to bound <= 3 or |s| <= 20");
        // all subsets of each admissible size, lexicographic
        for (int size = 1; size <= bound; ++size) {
            std::vector<int> idx(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
            for (;;) {
                if (!checker.expands(idx)) {
                    fail_with(idx);
                    return report;
                }
                int i = size - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < size; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return report;
    }

    // sampled mode: singletons and pairs exactly, then random subsets
    for (int v = 0; v < m && bound >= 1; ++v) {
        std::vector<int> x{v};
        if (!checker.expands(x)) {
            fail_with(x);
            return report;
        }
    }
    for (int v = 0; v < m && bound >= 2; ++v)
        for (int u = v + 1; u < m; ++u) {
            std::vector<int> x{v, u};
            if (!checker.expands(x)) {
                fail_with(x);
                return report;
            }
        }
    SplitMix64 rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (long long size = 3; size <= bound; ++size) {
        for (int t = 0; t < sample_budget; ++t) {
            // partial Fisher-Yates: a uniform random subset of the given size
            for (long long i = 0; i < size; ++i) {
                std::size_t j = static_cast<std::size_t>(
                    i + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(m - i))));
                std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            }
            std::vector<int> x(pool.begin(), pool.begin() + size);
            if (!checker.expands(x)) {
                fail_with(x);
                return report;
            }
        }
    }
    return report;
}

} // namespace linchrom
