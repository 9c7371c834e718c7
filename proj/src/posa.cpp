#include "linchrom/posa.hpp"

#include <algorithm>
#include <numeric>

#include "linchrom/rng.hpp"

namespace linchrom {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

class PosaEngine {
public:
    PosaEngine(const Graph& g, const std::vector<int>& s, const std::vector<Edge>& sprinkle,
               const PosaParams& params)
        : params_(params), rng_(params.seed) {
        if (s.empty()) throw ParameterError("path search needs a non-empty vertex set");
        if (params.max_rotations_per_phase <= 0 || params.max_restarts <= 0)
            throw ParameterError("search budgets must be positive");

        verts_ = s;
        std::sort(verts_.begin(), verts_.end());
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
        for (int v : verts_)
            if (v < 0 || v >= g.vertex_count()) throw ParameterError("vertex out of range");
        m_ = static_cast<int>(verts_.size());

        adj_.resize(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i)
            for (int u : g.neighbours(verts_[static_cast<std::size_t>(i)])) {
                int lu = local_of(u);
                if (lu > i) {
                    adj_[static_cast<std::size_t>(i)].push_back(lu);
                    adj_[static_cast<std::size_t>(lu)].push_back(i);
                }
            }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

        sprinkle_.reserve(sprinkle.size());
        for (auto [a, b] : sprinkle) {
            int la = local_of(a), lb = local_of(b);
            if (la < 0 || lb < 0) throw ParameterError("sprinkle edge endpoint outside vertex set");
            if (la == lb) throw ParameterError("sprinkle edge is a loop");
            sprinkle_.emplace_back(la, lb);
        }

        pos_.assign(static_cast<std::size_t>(m_), -1);
    }

    // best path found within budgets (full-length path returned immediately)
    std::vector<int> run(bool require_spanning, PosaStats* stats) {
        PosaStats local_stats;
        PosaStats& st = stats ? *stats : local_stats;
        st = PosaStats{};

        if (require_spanning && !spanning_possible()) return {};

        std::vector<int> best;
        std::size_t consumed = 0;
        int last_consume_len = -1;
        auto settle_sprinkle = [&]() {
            if (last_consume_len >= 0) {
                if (static_cast<int>(path_.size()) > last_consume_len) ++st.sprinkle_accepted;
                last_consume_len = -1;
            }
        };
        auto remember = [&]() {
            if (path_.size() > best.size()) best = path_;
        };

        while (st.restarts_used < params_.max_restarts) {
            ++st.restarts_used;
            start_walk(static_cast<int>(rng_.next_below(static_cast<std::uint64_t>(m_))));
            for (;;) {
                extend_ends();
                if (static_cast<int>(path_.size()) == m_) {
                    settle_sprinkle();
                    remember();
                    st.best_path_vertices = static_cast<int>(best.size());
                    return to_global(best);
                }
                if (rotation_phase()) continue;
                if (reopen_cycle()) continue;
                settle_sprinkle();
                if (consumed < sprinkle_.size()) {
                    auto [a, b] = sprinkle_[consumed++];
                    ++st.sprinkle_consumed;
                    add_edge(a, b);
                    last_consume_len = static_cast<int>(path_.size());
                    continue;
                }
                break; // stuck for good: restart
            }
            remember();
        }
        remember();
        st.best_path_vertices = static_cast<int>(best.size());
        if (require_spanning && static_cast<int>(best.size()) != m_) return {};
        return to_global(best);
    }

private:
    PosaParams params_;
    SplitMix64 rng_;
    std::vector<int> verts_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> sprinkle_;
    std::vector<int> path_;
    std::vector<int> pos_;

    int local_of(int v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        return (it != verts_.end() && *it == v) ? static_cast<int>(it - verts_.begin()) : -1;
    }

    std::vector<int> to_global(const std::vector<int>& local) const {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local) out.push_back(verts_[static_cast<std::size_t>(v)]);
        return out;
    }

    bool spanning_possible() const {
        Dsu dsu(m_);
        for (int v = 0; v < m_; ++v)
            for (int u : adj_[static_cast<std::size_t>(v)]) dsu.unite(v, u);
        for (auto [a, b] : sprinkle_) dsu.unite(a, b);
        int root = dsu.find(0);
        for (int v = 1; v < m_; ++v)
            if (dsu.find(v) != root) return false;
        return true;
    }

    bool has_local_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    void add_edge(int u, int v) {
        if (has_local_edge(u, v)) return;
        auto& nu = adj_[static_cast<std::size_t>(u)];
        nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
        auto& nv = adj_[static_cast<std::size_t>(v)];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    }

    void push_back(int v) {
        pos_[static_cast<std::size_t>(v)] = static_cast<int>(path_.size());
        path_.push_back(v);
    }

    void reverse_whole() {
        std::reverse(path_.begin(), path_.end());
        for (std::size_t i = 0; i < path_.size(); ++i)
            pos_[static_cast<std::size_t>(path_[i])] = static_cast<int>(i);
    }

    void reverse_suffix(int from) {
        std::reverse(path_.begin() + from, path_.end());
        for (std::size_t i = static_cast<std::size_t>(from); i < path_.size(); ++i)
            pos_[static_cast<std::size_t>(path_[i])] = static_cast<int>(i);
    }

    int free_neighbour(int v) const {
        for (int u : adj_[static_cast<std::size_t>(v)])
            if (pos_[static_cast<std::size_t>(u)] < 0) return u;
        return -1;
    }

    // Initial path: the deepest stack of a randomised DFS (the DFS stack is
    // always a path, and in sparse graphs it goes far deeper than a greedy
    // walk).
    void start_walk(int start) {
        std::fill(pos_.begin(), pos_.end(), -1);
        path_.clear();

        std::vector<char> visited(static_cast<std::size_t>(m_), 0);
        std::vector<int> stack{start};
        std::vector<std::vector<int>> remaining;
        visited[static_cast<std::size_t>(start)] = 1;
        {
            std::vector<int> nb = adj_[static_cast<std::size_t>(start)];
            rng_.shuffle(nb);
            remaining.push_back(std::move(nb));
        }
        std::vector<int> best = stack;
        while (!stack.empty()) {
            int next = -1;
            auto& rem = remaining.back();
            while (!rem.empty()) {
                int u = rem.back();
                rem.pop_back();
                if (!visited[static_cast<std::size_t>(u)]) {
                    next = u;
                    break;
                }
            }
            if (next < 0) {
                stack.pop_back();
                remaining.pop_back();
                continue;
            }
            visited[static_cast<std::size_t>(next)] = 1;
            stack.push_back(next);
            std::vector<int> nb = adj_[static_cast<std::size_t>(next)];
            rng_.shuffle(nb);
            remaining.push_back(std::move(nb));
            if (stack.size() > best.size()) best = stack;
        }
        for (int v : best) push_back(v);
    }

    void extend_ends() {
        for (;;) {
            int u = free_neighbour(path_.back());
            if (u >= 0) {
                push_back(u);
                continue;
            }
            u = free_neighbour(path_.front());
            if (u >= 0) {
                reverse_whole();
                push_back(u);
                continue;
            }
            break;
        }
    }

    // Pósa rotations: anchor the front, explore the endpoint closure depth
    // first with undo; succeed as soon as some rotated endpoint can extend.
    bool rotate_dfs(std::vector<char>& visited, int& budget) {
        int t = path_.back();
        int u = free_neighbour(t);
        if (u >= 0) {
            push_back(u);
            return true;
        }
        const int len = static_cast<int>(path_.size());
        for (int w : adj_[static_cast<std::size_t>(t)]) {
            if (budget <= 0) return false;
            int p = pos_[static_cast<std::size_t>(w)];
            if (p < 0 || p >= len - 2) continue; // p == len-2 would be a no-op rotation
            int new_end = path_[static_cast<std::size_t>(p + 1)];
            if (visited[static_cast<std::size_t>(new_end)]) continue;
            visited[static_cast<std::size_t>(new_end)] = 1;
            --budget;
            reverse_suffix(p + 1);
            if (rotate_dfs(visited, budget)) return true;
            reverse_suffix(p + 1);
        }
        return false;
    }

    bool rotation_phase() {
        if (path_.size() < 3) return false;
        int budget = params_.max_rotations_per_phase;
        std::vector<char> visited(static_cast<std::size_t>(m_), 0);
        for (int orient = 0; orient < 2; ++orient) {
            visited.assign(static_cast<std::size_t>(m_), 0);
            visited[static_cast<std::size_t>(path_.back())] = 1;
            if (rotate_dfs(visited, budget)) return true;
            reverse_whole(); // anchor the other end (second pass), restore after
        }
        return false;
    }

    // If the path closes into a cycle, reopen it next to a vertex with an
    // unused neighbour and extend there.
    bool reopen_cycle() {
        if (path_.size() < 3) return false;
        if (!has_local_edge(path_.back(), path_.front())) return false;
        const int len = static_cast<int>(path_.size());
        for (int idx = 0; idx < len; ++idx) {
            int x = path_[static_cast<std::size_t>(idx)];
            int u = free_neighbour(x);
            if (u < 0) continue;
            std::rotate(path_.begin(), path_.begin() + idx + 1, path_.end());
            for (std::size_t i = 0; i < path_.size(); ++i)
                pos_[static_cast<std::size_t>(path_[i])] = static_cast<int>(i);
            push_back(u);
            return true;
        }
        return false;
    }
};

} // namespace

std::optional<PathWitness> posa_hamilton_path(const Graph& g, const std::vector<int>& s,
                                              const std::vector<Edge>& sprinkle,
                                              const PosaParams& params, PosaStats* stats) {
    PosaEngine engine(g, s, sprinkle, params);
    std::vector<int> path = engine.run(/*require_spanning=*/true, stats);
    if (path.empty()) return std::nullopt;
    return PathWitness{std::move(path)};
}

PathWitness longest_path_found(const Graph& g, const std::vector<int>& s,
                               const std::vector<Edge>& sprinkle, const PosaParams& params,
                               PosaStats* stats) {
    PosaEngine engine(g, s, sprinkle, params);
    return PathWitness{engine.run(/*require_spanning=*/false, stats)};
}

} // namespace linchrom
