#include "xfc/stable.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "xfc/errors.hpp"

namespace xfc {

namespace {

// Maximum clique via branch and bound with greedy-coloring upper bound
// (Tomita-style). Operates on <=64-vertex adjacency masks.
class CliqueSolver {
public:
    CliqueSolver(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}

    void solve() {
        std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
        expand(0, 0, all);
    }

    int best = 0;
    std::uint64_t best_mask = 0;

private:
    void expand(std::uint64_t clique, int size, std::uint64_t cand) {
        if (!cand) {
            if (size > best) {
                best = size;
                best_mask = clique;
            }
            return;
        }
        // Greedy coloring of the candidates; color index bounds the clique
        // extension, so candidates are scanned in reverse color order.
        int order[64], colors[64], cnt = 0;
        std::uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                std::uint64_t bit = 1ull << v;
                avail &= ~(adj_[v] | bit);
                uncolored &= ~bit;
                order[cnt] = v;
                colors[cnt] = color;
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + colors[i] <= best) return;
            int v = order[i];
            std::uint64_t bit = 1ull << v;
            expand(clique | bit, size + 1, cand & adj_[v]);
            cand &= ~bit;
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

std::vector<std::uint64_t> complement_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> comp(n, 0);
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t row = g.adjacency_row(i)[0];
        if (n > 0) comp[i] = all & ~row & ~(1ull << i);
    }
    return comp;
}

}  // namespace

StableSetResult stability_number_with_witness(const Graph& g) {
    int n = g.vertex_count();
    if (n > kAlphaVertexCap)
        throw InstanceTooLarge("exact stability number capped at " +
                               std::to_string(kAlphaVertexCap) + " vertices, got " +
                               std::to_string(n));
    StableSetResult res;
    if (n == 0) return res;
    // Stable sets of g are cliques of the complement.
    CliqueSolver solver(n, complement_masks(g));
    solver.solve();
    res.alpha = solver.best;
    for (int i = 0; i < n; ++i)
        if (solver.best_mask & (1ull << i)) res.witness.push_back(g.label_of(i));
    return res;
}

int stability_number(const Graph& g) { return stability_number_with_witness(g).alpha; }

bool is_stable(const Graph& g, const std::vector<int>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (g.has_edge(labels[i], labels[j])) return false;
    return true;
}

bool for_each_stable_set(const Graph& g,
                         const std::function<bool(const std::vector<int>&)>& fn) {
    int n = g.vertex_count();
    int words = g.words_per_row();
    std::vector<std::uint64_t> blocked(words, 0);
    std::vector<int> current;

    // Emit the current set, then extend by any non-blocked later vertex.
    std::function<bool(int)> visit = [&](int start) -> bool {
        if (!fn(current)) return false;
        for (int v = start; v < n; ++v) {
            if ((blocked[v / 64] >> (v % 64)) & 1) continue;
            const std::uint64_t* row = g.adjacency_row(v);
            std::vector<std::uint64_t> saved = blocked;
            for (int w = 0; w < words; ++w) blocked[w] |= row[w];
            blocked[v / 64] |= 1ull << (v % 64);
            current.push_back(g.label_of(v));
            bool keep = visit(v + 1);
            current.pop_back();
            blocked = std::move(saved);
            if (!keep) return false;
        }
        return true;
    };
    return visit(0);
}

std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g,
                                                    std::optional<int> size_cap,
                                                    std::uint64_t budget) {
    std::vector<std::vector<int>> out;
    bool completed = for_each_stable_set(g, [&](const std::vector<int>& s) {
        if (size_cap && static_cast<int>(s.size()) > *size_cap) return true;
        if (static_cast<std::uint64_t>(out.size()) >= budget) return false;
        out.push_back(s);
        return true;
    });
    if (!completed)
        throw BudgetExceeded("stable-set enumeration budget of " + std::to_string(budget) +
                                 " exceeded",
                             out.size());
    return out;
}

std::uint64_t count_stable_sets(const Graph& g, std::uint64_t budget) {
    std::uint64_t count = 0;
    bool completed = for_each_stable_set(g, [&](const std::vector<int>&) {
        if (count >= budget) return false;
        ++count;
        return true;
    });
    if (!completed)
        throw BudgetExceeded("stable-set count budget exceeded", count);
    return count;
}

}  // namespace xfc
