#include "linchrom/colouring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <climits>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace linchrom {

namespace {

void check_total(const Graph& g, const Colouring& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count())
        throw ParameterError("colouring length does not match vertex count");
}

// compress arbitrary colour ids to 0..k-1 (first-encounter order)
std::vector<int> compress_colours(const Colouring& phi, int& k_out) {
    std::unordered_map<int, int> ids;
    std::vector<int> out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        auto it = ids.emplace(phi[i], static_cast<int>(ids.size())).first;
        out[i] = it->second;
    }
    k_out = static_cast<int>(ids.size());
    return out;
}

std::vector<std::uint32_t> adjacency_masks32(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbours(v)) adj[static_cast<std::size_t>(v)] |= 1u << u;
    return adj;
}

} // namespace

bool is_proper(const Graph& g, const Colouring& phi) {
    check_total(g, phi);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbours(v))
            if (u > v && phi[static_cast<std::size_t>(u)] == phi[static_cast<std::size_t>(v)])
                return false;
    return true;
}

std::optional<int> has_centre(const Colouring& phi, const std::vector<int>& s) {
    if (s.empty()) throw ParameterError("centre query on empty set");
    std::unordered_map<int, int> count;
    for (int v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= phi.size())
            throw ParameterError("set vertex outside colouring domain");
        ++count[phi[static_cast<std::size_t>(v)]];
    }
    std::optional<int> best;
    for (int v : s)
        if (count[phi[static_cast<std::size_t>(v)]] == 1 && (!best || v < *best)) best = v;
    return best;
}

// ---------------------------------------------------------------------------
// bad-path search (the linear-colouring verifier)

namespace {

struct BadPathDfs {
    const Graph& g;
    const std::vector<int>& col; // compressed
    std::vector<int> cnt;        // colour multiplicities on the current path
    std::vector<char> onpath;
    std::vector<int> path;
    int unique = 0; // colours appearing exactly once

    BadPathDfs(const Graph& g_, const std::vector<int>& col_, int k)
        : g(g_), col(col_), cnt(static_cast<std::size_t>(k), 0),
          onpath(static_cast<std::size_t>(g_.vertex_count()), 0) {}

    void add(int v) {
        onpath[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        int c = col[static_cast<std::size_t>(v)];
        if (++cnt[static_cast<std::size_t>(c)] == 1)
            ++unique;
        else if (cnt[static_cast<std::size_t>(c)] == 2)
            --unique;
    }

    void remove(int v) {
        onpath[static_cast<std::size_t>(v)] = 0;
        path.pop_back();
        int c = col[static_cast<std::size_t>(v)];
        if (--cnt[static_cast<std::size_t>(c)] == 0)
            --unique;
        else if (cnt[static_cast<std::size_t>(c)] == 1)
            ++unique;
    }

    bool bad() const { return path.size() >= 2 && unique == 0; }

    bool search(int v) { // extend the path ending at v
        for (int u : g.neighbours(v)) {
            if (onpath[static_cast<std::size_t>(u)]) continue;
            add(u);
            if (bad() || search(u)) return true;
            remove(u);
        }
        return false;
    }
};

} // namespace

std::optional<PathWitness> find_path_without_centre(const Graph& g, const Colouring& phi,
                                                    const SolverLimits& limits) {
    check_total(g, phi);
    const int n = g.vertex_count();
    if (n > limits.find_path_max_n)
        throw SizeGuardError("find_path_without_centre capped at n <= " +
                             std::to_string(limits.find_path_max_n));
    if (n < 2) return std::nullopt;

    int k = 0;
    std::vector<int> col = compress_colours(phi, k);
    BadPathDfs dfs(g, col, k);
    for (int start = 0; start < n; ++start) {
        dfs.add(start);
        if (dfs.search(start)) return PathWitness{dfs.path};
        dfs.remove(start);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// centred verifier: enumerate each connected vertex set exactly once, seeded
// at its minimum vertex (ESU-style growth)

namespace {

struct CentredScan {
    const std::vector<std::uint32_t>& adj;
    const std::vector<int>& col;
    int k;
    std::uint32_t best = 0;
    int best_size = INT_MAX;

    bool centre_free(std::uint32_t set, int size) const {
        if (size < 2) return false;
        static thread_local std::vector<int> cnt;
        cnt.assign(static_cast<std::size_t>(k), 0);
        for (std::uint32_t rest = set; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ++cnt[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
        }
        for (std::uint32_t rest = set; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (cnt[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] == 1) return false;
        }
        return true;
    }

    void consider(std::uint32_t set, int size) {
        if (size >= best_size) return;
        if (centre_free(set, size)) {
            best = set;
            best_size = size;
        }
    }

    // ext: frontier candidates; visited: set + everything ever offered as a
    // candidate (popped candidates stay excluded below this level)
    void expand(std::uint32_t set, int size, std::uint32_t ext, std::uint32_t visited,
                std::uint32_t allowed) {
        if (size + 1 >= best_size) return; // deeper sets only get larger
        while (ext) {
            std::uint32_t c = ext & (~ext + 1);
            ext ^= c;
            int v = std::countr_zero(c);
            std::uint32_t set2 = set | c;
            consider(set2, size + 1);
            std::uint32_t fresh = adj[static_cast<std::size_t>(v)] & allowed & ~visited;
            expand(set2, size + 1, ext | fresh, visited | fresh, allowed);
        }
    }
};

} // namespace

std::optional<std::vector<int>> is_centred(const Graph& g, const Colouring& phi,
                                           const SolverLimits& limits) {
    check_total(g, phi);
    const int n = g.vertex_count();
    if (n > limits.centred_max_n || n > 31)
        throw SizeGuardError("is_centred capped at n <= " + std::to_string(limits.centred_max_n));
    if (n == 0) return std::nullopt;

    std::vector<std::uint32_t> adj = adjacency_masks32(g);
    int k = 0;
    std::vector<int> col = compress_colours(phi, k);
    CentredScan scan{adj, col, k};
    const std::uint32_t full = (1u << n) - 1;
    for (int seed = 0; seed + 1 < n; ++seed) {
        std::uint32_t allowed = full & ~((1u << (seed + 1)) - 1); // vertices > seed
        std::uint32_t ext = adj[static_cast<std::size_t>(seed)] & allowed;
        scan.expand(1u << seed, 1, ext, (1u << seed) | ext, allowed);
    }
    if (scan.best == 0) return std::nullopt;
    std::vector<int> out;
    for (std::uint32_t rest = scan.best; rest;) {
        out.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact chromatic number

namespace {

bool colourable(const std::vector<std::uint32_t>& adj, int n, int k) {
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<std::uint32_t> blocked(static_cast<std::size_t>(n), 0);

    // most-constrained vertex first; a brand-new colour is always max_used+1
    std::function<bool(int, int)> go = [&](int depth, int max_used) -> bool {
        if (depth == n) return true;
        int pick = -1, fewest = INT_MAX;
        const int limit_all = std::min(k - 1, max_used + 1);
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] >= 0) continue;
            int free = 0;
            for (int c = 0; c <= limit_all; ++c)
                if (!((blocked[static_cast<std::size_t>(v)] >> c) & 1u)) ++free;
            if (free == 0) return false;
            if (free < fewest) {
                fewest = free;
                pick = v;
            }
        }
        for (int c = 0; c <= limit_all; ++c) {
            if ((blocked[static_cast<std::size_t>(pick)] >> c) & 1u) continue;
            colour[static_cast<std::size_t>(pick)] = c;
            std::uint32_t touched = 0;
            for (std::uint32_t rest = adj[static_cast<std::size_t>(pick)]; rest;) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (colour[static_cast<std::size_t>(u)] < 0 &&
                    !((blocked[static_cast<std::size_t>(u)] >> c) & 1u)) {
                    blocked[static_cast<std::size_t>(u)] |= 1u << c;
                    touched |= 1u << u;
                }
            }
            if (go(depth + 1, std::max(max_used, c))) return true;
            for (std::uint32_t rest = touched; rest;) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                blocked[static_cast<std::size_t>(u)] &= ~(1u << c);
            }
            colour[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    };
    return go(0, -1);
}

int greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

int greedy_colouring_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    int used = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t taken = 0;
        for (int u : g.neighbours(v))
            if (colour[static_cast<std::size_t>(u)] >= 0)
                taken |= 1ULL << colour[static_cast<std::size_t>(u)];
        int c = 0;
        while ((taken >> c) & 1ULL) ++c;
        colour[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

int chromatic_number(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.chromatic_max_n || n > 31)
        throw SizeGuardError("chromatic_number capped at n <= " +
                             std::to_string(limits.chromatic_max_n));
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<std::uint32_t> adj = adjacency_masks32(g);
    int lb = std::max(2, greedy_clique(g));
    int ub = greedy_colouring_count(g);
    for (int k = lb; k < ub; ++k)
        if (colourable(adj, n, k)) return k;
    return ub;
}

// ---------------------------------------------------------------------------
// tree-depth (= centred chromatic number)

namespace {

struct TreeDepthSolver {
    std::vector<std::uint64_t> adj;
    std::unordered_map<std::uint64_t, int> memo;

    int depth_of(std::uint64_t mask) { // any induced subgraph
        if (mask == 0) return 0;
        int best = 0;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t comp = 1ULL << std::countr_zero(rest);
            for (;;) {
                std::uint64_t grow = comp;
                std::uint64_t scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grow |= adj[static_cast<std::size_t>(v)] & mask;
                }
                if (grow == comp) break;
                comp = grow;
            }
            best = std::max(best, depth_connected(comp));
            rest &= ~comp;
        }
        return best;
    }

    int depth_connected(std::uint64_t mask) {
        const int size = std::popcount(mask);
        if (size <= 2) return size;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        bool clique = true;
        for (std::uint64_t scan = mask; scan && clique;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if ((adj[static_cast<std::size_t>(v)] & mask) != (mask & ~(1ULL << v))) clique = false;
        }
        if (clique) {
            memo.emplace(mask, size);
            return size;
        }

        int best = size;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            best = std::min(best, 1 + depth_of(mask & ~(1ULL << v)));
            if (best == 2) break; // floor for a connected graph with an edge
        }
        memo.emplace(mask, best);
        return best;
    }
};

} // namespace

int tree_depth(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.tree_depth_max_n || n > 62)
        throw SizeGuardError("tree_depth capped at n <= " +
                             std::to_string(std::min(limits.tree_depth_max_n, 62)));
    if (n == 0) return 0;

    TreeDepthSolver solver;
    solver.adj.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbours(v)) solver.adj[static_cast<std::size_t>(v)] |= 1ULL << u;

    int best = 0;
    for (const auto& comp : components(g)) {
        if (static_cast<int>(comp.size()) > limits.tree_depth_max_component)
            throw SizeGuardError("tree_depth capped at component size <= " +
                                 std::to_string(limits.tree_depth_max_component));
        std::uint64_t mask = 0;
        for (int v : comp) mask |= 1ULL << v;
        best = std::max(best, solver.depth_connected(mask));
    }
    return best;
}

// ---------------------------------------------------------------------------
// exact linear chromatic number: backtracking over colour assignments with
// incremental bad-path rejection

namespace {

// Search for a bad path among the coloured vertices 0..vmax passing through
// vmax. A bad path is detected exactly when its largest vertex is coloured,
// so checking these paths at every assignment is complete.
struct IncrementalBadPath {
    const std::vector<std::uint32_t>& adj;
    const std::vector<int>& colour;
    int vmax;
    std::uint32_t onpath = 0;
    std::vector<int>& cnt;
    int unique = 0;
    int length = 0;
    int left_end;

    IncrementalBadPath(const std::vector<std::uint32_t>& adj_, const std::vector<int>& colour_,
                       int vmax_, std::vector<int>& cnt_scratch)
        : adj(adj_), colour(colour_), vmax(vmax_), cnt(cnt_scratch), left_end(vmax_) {
        // a probe that finds a bad path bails out without unwinding, so the
        // shared scratch must be cleared here
        std::fill(cnt.begin(), cnt.end(), 0);
    }

    void add(int v) {
        onpath |= 1u << v;
        ++length;
        int c = colour[static_cast<std::size_t>(v)];
        if (++cnt[static_cast<std::size_t>(c)] == 1)
            ++unique;
        else if (cnt[static_cast<std::size_t>(c)] == 2)
            --unique;
    }

    void remove(int v) {
        onpath &= ~(1u << v);
        --length;
        int c = colour[static_cast<std::size_t>(v)];
        if (--cnt[static_cast<std::size_t>(c)] == 0)
            --unique;
        else if (cnt[static_cast<std::size_t>(c)] == 1)
            ++unique;
    }

    bool bad() const { return length >= 2 && unique == 0; }

    std::uint32_t eligible(int v) const {
        const std::uint32_t lim = (1u << vmax) | ((1u << vmax) - 1); // vertices <= vmax
        return adj[static_cast<std::size_t>(v)] & lim & ~onpath;
    }

    bool grow_left(int t) {
        for (std::uint32_t rest = eligible(t); rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            add(u);
            if (bad() || grow_left(u)) return true;
            remove(u);
        }
        return false;
    }

    // right extensions; for every right arrangement, all left extensions
    bool grow_right(int t) {
        if (grow_left(left_end)) return true;
        for (std::uint32_t rest = eligible(t); rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            add(u);
            if (bad() || grow_right(u)) return true;
            remove(u);
        }
        return false;
    }

    bool run() {
        add(vmax);
        bool found = grow_right(vmax);
        remove(vmax);
        return found;
    }
};

bool linear_feasible(const std::vector<std::uint32_t>& adj, int n, int k) {
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> cnt_scratch(static_cast<std::size_t>(k), 0);
    std::function<bool(int, int)> place = [&](int v, int max_used) -> bool {
        if (v == n) return true;
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            colour[static_cast<std::size_t>(v)] = c;
            IncrementalBadPath probe(adj, colour, v, cnt_scratch);
            if (!probe.run() && place(v + 1, std::max(max_used, c))) return true;
        }
        colour[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    return place(0, -1);
}

} // namespace

int linear_chromatic_number(const Graph& g, const SolverLimits& limits) {
    const int n = g.vertex_count();
    if (n > limits.linear_max_n || n > 31)
        throw SizeGuardError("linear_chromatic_number capped at n <= " +
                             std::to_string(limits.linear_max_n));
    if (n == 0) return 0;

    int lb = std::max(chromatic_number(g, limits), linear_lower_bound_from_diameter(g));
    int ub = tree_depth(g, limits); // a centred colouring is linear
    if (lb >= ub) return ub;

    std::vector<std::uint32_t> adj = adjacency_masks32(g);
    for (int k = lb; k < ub; ++k)
        if (linear_feasible(adj, n, k)) return k;
    return ub;
}

// ---------------------------------------------------------------------------

int path_centred_value(std::uint64_t k) {
    if (k == 0) throw ParameterError("path length must be at least 1 vertex");
    return static_cast<int>(std::bit_width(k)); // floor(log2 k) + 1
}

int linear_lower_bound_from_diameter(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = 0;
    for (const auto& comp : components(g))
        best = std::max(best,
                        path_centred_value(static_cast<std::uint64_t>(diameter(g, comp)) + 1));
    return best;
}

// ---------------------------------------------------------------------------
// text forms

std::string format_colouring(const Colouring& phi) {
    std::string out;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(phi[i]);
    }
    return out;
}

Colouring parse_colouring(std::string_view text) {
    Colouring out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok =
            comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("invalid colour id", pos);
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_path(const std::vector<int>& vertices) {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(vertices[i]);
    }
    return out;
}

} // namespace linchrom
