#include "xfc/induced.hpp"

#include <algorithm>
#include <bit>

#include "xfc/errors.hpp"

namespace xfc {

namespace {

// Pattern vertex order: start from a maximum-degree vertex, then greedily
// append the vertex with the most neighbors among those already placed.
// Connected patterns then always extend along known adjacencies, which
// keeps candidate sets small.
std::vector<int> pattern_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order) links += h.adjacent_by_index(u, v);
            int deg = h.degree_by_index(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct Searcher {
    const Graph& g;
    int hn;
    int words;
    std::vector<std::uint64_t> h_adj;        // pattern adjacency among ordered indices
    std::vector<int> assignment;             // g vertex index per pattern level
    std::vector<std::uint64_t> used;         // g vertex indices in use
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    bool rec(int level) {
        if (level == hn) return true;
        // candidate mask: adjacency to mapped neighbors, non-adjacency to
        // the mapped rest
        std::vector<std::uint64_t> cand(words, ~0ull);
        int gn = g.vertex_count();
        if (gn % 64) cand[words - 1] = (1ull << (gn % 64)) - 1;
        for (int w = 0; w < words; ++w) cand[w] &= ~used[w];
        for (int prev = 0; prev < level; ++prev) {
            const std::uint64_t* row = g.adjacency_row(assignment[prev]);
            bool need_edge = (h_adj[level] >> prev) & 1;
            for (int w = 0; w < words; ++w) cand[w] &= need_edge ? row[w] : ~row[w];
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (++nodes > budget) {
                    out_of_budget = true;
                    return false;
                }
                assignment[level] = v;
                used[v / 64] |= 1ull << (v % 64);
                if (rec(level + 1)) return true;
                used[v / 64] &= ~(1ull << (v % 64));
                if (out_of_budget) return false;
            }
        }
        return false;
    }
};

}  // namespace

InducedSearchResult find_induced(const Graph& h, const Graph& g,
                                 std::uint64_t node_budget) {
    int hn = h.vertex_count();
    if (hn > 64) throw InstanceTooLarge("pattern capped at 64 vertices");
    if (hn > g.vertex_count()) throw Error("pattern larger than the host graph");

    InducedSearchResult res;
    if (hn == 0) {
        res.outcome = InducedSearchResult::Found;
        return res;
    }

    std::vector<int> order = pattern_order(h);
    Searcher s{g,
               hn,
               g.words_per_row(),
               std::vector<std::uint64_t>(hn, 0),
               std::vector<int>(hn, -1),
               std::vector<std::uint64_t>(g.words_per_row(), 0),
               node_budget};
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < i; ++j)
            if (h.adjacent_by_index(order[i], order[j])) s.h_adj[i] |= 1ull << j;

    bool found = s.rec(0);
    res.nodes_used = s.nodes;
    if (!found) {
        res.outcome = s.out_of_budget ? InducedSearchResult::BudgetExhausted
                                      : InducedSearchResult::Absent;
        return res;
    }
    // re-verify the map edge by edge before returning it
    res.map.assign(hn, -1);
    for (int i = 0; i < hn; ++i) res.map[order[i]] = g.label_of(s.assignment[i]);
    for (int i = 0; i < hn; ++i)
        for (int j = i + 1; j < hn; ++j) {
            bool hedge = h.adjacent_by_index(i, j);
            bool gedge = g.has_edge(res.map[i], res.map[j]);
            if (hedge != gedge)
                throw IdentityViolation("induced map failed re-verification (bug)");
        }
    res.outcome = InducedSearchResult::Found;
    return res;
}

}  // namespace xfc
