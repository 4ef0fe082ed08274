#include "xfc/density.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <queue>
#include <vector>

#include "xfc/errors.hpp"

namespace xfc {

namespace {

// Dinic max flow on a small dense network, long long capacities.
class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, long long cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            long long f;
            while ((f = dfs(s, t, LLONG_MAX)) > 0) flow += f;
        }
        return flow;
    }

    /// After max_flow: vertices reachable from s in the residual network.
    std::vector<bool> min_cut_side(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    q.push(edges_[e].to);
                }
        }
        return seen;
    }

private:
    struct Edge {
        int to, next;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    q.push(edges_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
            Edge& ed = edges_[e];
            if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
                long long d = dfs(ed.to, t, std::min(f, ed.cap));
                if (d > 0) {
                    ed.cap -= d;
                    edges_[e ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<int> head_, level_, iter_;
};

Rat exhaustive_max_avg_degree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = g.adjacency_row(i)[0];
        adj[i] = static_cast<std::uint32_t>(row);
    }
    // edges_in[mask] built incrementally from mask minus its lowest vertex
    std::vector<std::uint32_t> edges_in(1u << n, 0);
    Rat best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        edges_in[mask] = edges_in[rest] + std::popcount(adj[v] & rest);
        Rat d(2 * static_cast<long long>(edges_in[mask]), std::popcount(mask));
        if (d > best) best = d;
    }
    return best;
}

}  // namespace

namespace detail {

std::vector<int> denser_than(const Graph& g, long long num, long long den) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    if (m == 0) return {};
    // Goldberg network for guess num/den, capacities scaled by den:
    //   cut({s} ∪ V1) = den*m*n + 2*(num*|V1| - den*|E(V1)|),
    // so a cut below den*m*n certifies a subgraph denser than the guess.
    int s = 0, t = n + 1;
    Dinic dinic(n + 2);
    for (int i = 0; i < n; ++i) {
        dinic.add_edge(s, i + 1, m * den);
        dinic.add_edge(i + 1, t, m * den + 2 * num - den * g.degree_by_index(i));
    }
    for (auto [a, b] : g.edges()) {
        int i = g.index_of(a), j = g.index_of(b);
        dinic.add_edge(i + 1, j + 1, den);
        dinic.add_edge(j + 1, i + 1, den);
    }
    long long flow = dinic.max_flow(s, t);
    if (flow >= m * n * den) return {};
    auto side = dinic.min_cut_side(s);
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (side[i + 1]) out.push_back(g.label_of(i));
    return out;
}

}  // namespace detail

Rat max_avg_degree_induced(const Graph& g) {
    if (g.vertex_count() == 0) throw Error("max_avg_degree_induced: empty graph");
    if (g.edge_count() == 0) return 0;
    if (g.vertex_count() <= 20) return exhaustive_max_avg_degree(g);

    // Iterate exact densest-subgraph improvements until none exists.
    long long best_e = g.edge_count(), best_v = g.vertex_count();
    while (true) {
        auto denser = detail::denser_than(g, best_e, best_v);
        if (denser.empty()) break;
        Graph h = g.induced(denser);
        best_e = h.edge_count();
        best_v = h.vertex_count();
    }
    return Rat(2 * best_e, best_v);
}

}  // namespace xfc
