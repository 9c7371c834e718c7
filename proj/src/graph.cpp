#include "linchrom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "linchrom/rng.hpp"

namespace linchrom {

namespace {

// keep matrix rows for small graphs, and for big ones only while dense
bool want_bits(int n, long long m) {
    if (n <= 1024) return true;
    if (n > 20000) return false;
    double dens = (n < 2) ? 0.0 : (2.0 * static_cast<double>(m)) / (static_cast<double>(n) * (n - 1));
    return dens >= 0.01;
}

} // namespace

Graph::Graph(int n) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
    build_bits();
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParameterError("edge endpoint out of range");
        if (u == v) throw ParameterError("loops are not allowed");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    m_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += static_cast<long long>(nb.size());
    }
    m_ /= 2;
    build_bits();
}

void Graph::build_bits() {
    bits_.clear();
    row_words_ = 0;
    if (!want_bits(n_, m_)) return;
    row_words_ = static_cast<std::size_t>((n_ + 63) / 64);
    bits_.assign(row_words_ * static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
            bits_[static_cast<std::size_t>(v) * row_words_ + static_cast<std::size_t>(u) / 64] |=
                1ULL << (static_cast<unsigned>(u) % 64);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ParameterError("vertex out of range");
}

const std::vector<int>& Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * row_words_ + static_cast<std::size_t>(v) / 64] >>
                (static_cast<unsigned>(v) % 64)) & 1ULL;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& small = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(small.begin(), small.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[static_cast<std::size_t>(v)])
            if (v < u) out.emplace_back(v, u);
    return out;
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return (2.0 * static_cast<double>(m_)) / (static_cast<double>(n_) * (n_ - 1));
}

namespace {

inline std::uint64_t pair_offset(int n, std::uint64_t i) {
    // number of pairs (a,b), a<b, with a < i
    return i * (2ULL * static_cast<std::uint64_t>(n) - i - 1) / 2;
}

Edge pair_from_index(int n, std::uint64_t idx) {
    int lo = 0, hi = n - 2, row = 0;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (pair_offset(n, static_cast<std::uint64_t>(mid)) <= idx) {
            row = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    int col = row + 1 + static_cast<int>(idx - pair_offset(n, static_cast<std::uint64_t>(row)));
    return {row, col};
}

} // namespace

Graph sample_gnp(int n, double p, RngSeed seed) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must be in [0,1]");

    std::vector<Edge> edges;
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (p == 0.0 || total == 0) return Graph(n, edges);
    if (p == 1.0) {
        edges.reserve(total);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    // geometric gaps over the linearised pair index: exact Bernoulli process
    SplitMix64 rng(seed);
    const double log_q = std::log1p(-p);
    std::uint64_t pos = 0;
    for (;;) {
        double gap = std::floor(std::log1p(-rng.next_double()) / log_q);
        if (!(gap >= 0.0)) gap = 0.0;
        if (gap >= static_cast<double>(total)) break;
        pos += static_cast<std::uint64_t>(gap);
        if (pos >= total) break;
        edges.push_back(pair_from_index(n, pos));
        ++pos;
    }
    return Graph(n, edges);
}

TwoRoundSample sample_two_round(int n, double p, RngSeed seed, std::optional<double> p1_override) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must be in [0,1]");
    double p1 = p1_override ? *p1_override : 1.0 - std::sqrt(1.0 - p);
    if (!(p1 >= 0.0 && p1 <= p)) throw ParameterError("p1 override must be in [0,p]");
    double p2 = (p1 >= 1.0) ? 0.0 : (p - p1) / (1.0 - p1);
    p2 = std::min(1.0, std::max(0.0, p2));

    TwoRoundSample out;
    out.p1 = p1;
    out.p2 = p2;
    out.g1 = sample_gnp(n, p1, derive_stream_seed(seed, 1));
    out.g2 = sample_gnp(n, p2, derive_stream_seed(seed, 2));
    std::vector<Edge> all = out.g1.edges();
    const std::vector<Edge> e2 = out.g2.edges();
    all.insert(all.end(), e2.begin(), e2.end());
    out.g_union = Graph(n, all); // collapses double edges
    return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kMaxGraph6Vertices = 1 << 20;

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

} // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    }

    std::vector<char> lower(static_cast<std::size_t>(n), 0);
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int u : g.neighbours(j))
            if (u < j) lower[static_cast<std::size_t>(u)] = 1;
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<unsigned>(lower[static_cast<std::size_t>(i)]);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
        for (int u : g.neighbours(j))
            if (u < j) lower[static_cast<std::size_t>(u)] = 0;
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    auto sextet = [&](std::size_t pos) -> std::uint64_t {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos);
        return c - 63;
    };

    std::size_t pos = 0;
    std::uint64_t n64 = 0;
    if (text[0] != '~') {
        n64 = sextet(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("truncated vertex count", text.size());
        for (std::size_t i = 1; i <= 3; ++i) n64 = (n64 << 6) | sextet(i);
        if (n64 < 63) throw ParseError("non-canonical vertex count encoding", 0);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("truncated vertex count", text.size());
        for (std::size_t i = 2; i <= 7; ++i) n64 = (n64 << 6) | sextet(i);
        if (n64 < 258048) throw ParseError("non-canonical vertex count encoding", 0);
        pos = 8;
    }
    if (n64 > kMaxGraph6Vertices) throw ParseError("vertex count too large", 0);
    const int n = static_cast<int>(n64);

    const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < pos + nchars) throw ParseError("truncated adjacency bits", text.size());
    if (text.size() > pos + nchars) throw ParseError("trailing characters", pos + nchars);

    std::vector<Edge> edges;
    int i = 0, j = 1;
    std::uint64_t bit = 0;
    for (std::size_t c = 0; c < nchars; ++c) {
        std::uint64_t v = sextet(pos + c);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (v >> b) & 1;
            if (bit < nbits) {
                if (set) edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw ParseError("nonzero padding bit", pos + c);
            }
        }
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// structure

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        queue.assign(1, v);
        seen[static_cast<std::size_t>(v)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int u : g.neighbours(queue[head]))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    queue.push_back(u);
                }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

namespace {

// all-pairs BFS on a small graph given directly by adjacency
int diameter_of(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbours(v))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    best = std::max(best, dist[static_cast<std::size_t>(u)]);
                    queue.push_back(u);
                }
        }
    }
    return best;
}

} // namespace

int diameter(const Graph& g, const std::vector<int>& comp) {
    if (comp.empty()) throw ParameterError("component must be non-empty");
    InducedSubgraph sub = induced_subgraph(g, comp);
    const int m = sub.graph.vertex_count();
    // must be exactly a connected component: connected inside, no edges out
    long long deg_in = 0;
    for (int v = 0; v < m; ++v) deg_in += sub.graph.degree(v);
    long long deg_host = 0;
    for (int v : sub.vertex_map) deg_host += g.degree(v);
    if (deg_in != deg_host) throw ContractError("set is not a connected component (edges leave it)");
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> queue(1, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int u : sub.graph.neighbours(queue[head]))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
    if (static_cast<int>(queue.size()) != m)
        throw ContractError("set is not connected in the graph");
    return diameter_of(sub.graph);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    const int n = g.vertex_count();
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= n) throw ParameterError("subgraph vertex out of range");

    const int m = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    if (m > 0 && static_cast<long long>(m) * 32 >= n) {
        std::vector<int> local(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(verts[i])] = i;
        for (int i = 0; i < m; ++i)
            for (int u : g.neighbours(verts[static_cast<std::size_t>(i)])) {
                int lu = local[static_cast<std::size_t>(u)];
                if (lu > i) edges.emplace_back(i, lu);
            }
    } else {
        // small set inside a big graph: avoid the O(n) map
        auto local_of = [&](int v) {
            auto it = std::lower_bound(verts.begin(), verts.end(), v);
            return (it != verts.end() && *it == v) ? static_cast<int>(it - verts.begin()) : -1;
        };
        for (int i = 0; i < m; ++i)
            for (int u : g.neighbours(verts[static_cast<std::size_t>(i)])) {
                int lu = local_of(u);
                if (lu > i) edges.emplace_back(i, lu);
            }
    }
    return {Graph(m, edges), std::move(verts)};
}

// ---------------------------------------------------------------------------
// exhaustive connected corpus (n <= 6)

namespace {

bool mask_connected(int n, unsigned mask, const std::vector<std::pair<int, int>>& pair_of_bit) {
    unsigned vadj[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t t = 0; t < pair_of_bit.size(); ++t)
        if ((mask >> t) & 1u) {
            auto [i, j] = pair_of_bit[t];
            vadj[i] |= 1u << j;
            vadj[j] |= 1u << i;
        }
    unsigned reached = 1u, frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= vadj[v];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (1u << n) - 1u;
}

} // namespace

std::vector<std::string> all_connected_graph6(int n) {
    if (n < 1 || n > 6)
        throw SizeGuardError("exhaustive corpus generation supported for 1 <= n <= 6");

    const int npairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of_bit;
    std::vector<std::vector<int>> bit_of_pair(static_cast<std::size_t>(n),
                                              std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bit_of_pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(pair_of_bit.size());
            bit_of_pair[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                static_cast<int>(pair_of_bit.size());
            pair_of_bit.emplace_back(i, j);
        }

    // bit remap table per vertex permutation
    std::vector<std::vector<int>> remaps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> table(static_cast<std::size_t>(npairs));
        for (int t = 0; t < npairs; ++t) {
            auto [i, j] = pair_of_bit[static_cast<std::size_t>(t)];
            table[static_cast<std::size_t>(t)] =
                bit_of_pair[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        }
        remaps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::string> out;
    for (unsigned mask = 0; mask < (1u << npairs); ++mask) {
        if (!mask_connected(n, mask, pair_of_bit)) continue;
        bool canonical = true;
        for (const auto& table : remaps) {
            unsigned img = 0;
            unsigned rest = mask;
            while (rest) {
                int t = __builtin_ctz(rest);
                rest &= rest - 1;
                img |= 1u << table[static_cast<std::size_t>(t)];
            }
            if (img < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<Edge> edges;
        for (int t = 0; t < npairs; ++t)
            if ((mask >> t) & 1u) edges.push_back(pair_of_bit[static_cast<std::size_t>(t)]);
        out.push_back(encode_graph6(Graph(n, edges)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace linchrom
