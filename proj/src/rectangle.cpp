#include "xfc/rectangle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "xfc/errors.hpp"

namespace xfc {

namespace {

// Support classification of the matrix, transposed if needed so that the
// enumerated dimension (rows) is the smaller one.
struct Support {
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> compat;   // per row: colmask of non-zero-defined cells
    std::vector<std::uint64_t> positive; // per row: colmask of defined positive cells
};

template <typename T>
Support build_support(const PartialMatrix<T>& m) {
    bool transpose = m.rows() > m.cols();
    std::size_t r = transpose ? m.cols() : m.rows();
    std::size_t c = transpose ? m.rows() : m.cols();
    if (r > 20 || c > 64)
        throw InstanceTooLarge("exact rectangle enumeration capped at 20x64 support");
    Support s;
    s.rows = static_cast<int>(r);
    s.cols = static_cast<int>(c);
    s.compat.assign(r, 0);
    s.positive.assign(r, 0);
    std::uint64_t positives = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::size_t ri = transpose ? j : i, ci = transpose ? i : j;
            if (!m.is_defined(i, j)) {
                s.compat[ri] |= 1ull << ci;  // undefined cells are free
                continue;
            }
            const T& v = m.at(i, j);
            if (v < T(0)) throw Error("rectangle bound needs a nonnegative matrix");
            if (v > T(0)) {
                s.compat[ri] |= 1ull << ci;
                s.positive[ri] |= 1ull << ci;
                ++positives;
            }
        }
    if (positives > (1u << 12))
        throw InstanceTooLarge("rectangle bound capped at 2^12 positive entries");
    return s;
}

struct Cell {
    int row, col;
};

// Exact minimum set cover by iterative deepening with a node budget.
class CoverSearch {
public:
    CoverSearch(std::vector<std::vector<std::uint64_t>> rect_cover, int words,
                std::uint64_t budget)
        : rects_(std::move(rect_cover)), words_(words), budget_(budget) {}

    RectangleCover run(const std::vector<std::uint64_t>& all_cells, int cell_count,
                       int greedy_ub) {
        RectangleCover out;
        for (int k = 1; k <= greedy_ub; ++k) {
            int verdict = search(all_cells, cell_count, k);
            if (verdict == 1) {
                out.bound = k;
                out.exact = true;
                out.nodes_used = nodes_;
                return out;
            }
            if (verdict == -1) {  // budget ran out while exploring depth k
                out.bound = k;    // sizes below k are fully refuted
                out.exact = false;
                out.nodes_used = nodes_;
                return out;
            }
        }
        out.bound = greedy_ub;  // cannot happen: greedy cover has this size
        out.exact = true;
        out.nodes_used = nodes_;
        return out;
    }

private:
    // 1 = cover of size <= k exists, 0 = refuted, -1 = budget exhausted
    int search(std::vector<std::uint64_t> uncovered, int remaining_cells, int k) {
        if (remaining_cells == 0) return 1;
        if (k == 0) return 0;
        if (++nodes_ > budget_) return -1;

        // pick the uncovered cell with the fewest covering rectangles
        int best_cell = -1, best_count = INT_MAX;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = uncovered[w];
            while (bits) {
                int cell = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int cnt = 0;
                for (const auto& rc : rects_)
                    if (rc[cell / 64] >> (cell % 64) & 1) ++cnt;
                if (cnt < best_count) {
                    best_count = cnt;
                    best_cell = cell;
                }
            }
        }
        if (best_count == 0) return 0;  // uncoverable cell (cannot happen)

        for (std::size_t ri = 0; ri < rects_.size(); ++ri) {
            if (!(rects_[ri][best_cell / 64] >> (best_cell % 64) & 1)) continue;
            std::vector<std::uint64_t> next = uncovered;
            int next_count = 0;
            for (int w = 0; w < words_; ++w) {
                next[w] &= ~rects_[ri][w];
                next_count += std::popcount(next[w]);
            }
            int verdict = search(std::move(next), next_count, k - 1);
            if (verdict != 0) return verdict;
        }
        return 0;
    }

    std::vector<std::vector<std::uint64_t>> rects_;
    int words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

RectangleCover bound_impl(const Support& s, std::uint64_t node_budget) {
    // index positive cells
    std::vector<Cell> cells;
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j)
            if (s.positive[i] >> j & 1) cells.push_back({i, j});
    if (cells.empty()) return {0, true, 0};

    // all maximal rectangles via closure over row subsets
    std::vector<std::uint64_t> colmask(1ull << s.rows, ~0ull >> (64 - s.cols));
    std::unordered_map<std::uint64_t, std::uint64_t> maximal;  // rowmask -> colmask
    for (std::uint64_t mask = 1; mask < (1ull << s.rows); ++mask) {
        int low = std::countr_zero(mask);
        colmask[mask] = colmask[mask & (mask - 1)] & s.compat[low];
        std::uint64_t c = colmask[mask];
        if (!c) continue;
        std::uint64_t closed_rows = 0;
        for (int i = 0; i < s.rows; ++i)
            if ((s.compat[i] & c) == c) closed_rows |= 1ull << i;
        maximal.emplace(closed_rows, c);
    }

    // coverage bitsets over positive cells; drop dominated rectangles
    int words = (static_cast<int>(cells.size()) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> covers;
    for (auto& [rmask, cmask] : maximal) {
        std::vector<std::uint64_t> cover(words, 0);
        bool any = false;
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            if ((rmask >> cells[ci].row & 1) && (cmask >> cells[ci].col & 1)) {
                cover[ci / 64] |= 1ull << (ci % 64);
                any = true;
            }
        if (any) covers.push_back(std::move(cover));
    }
    auto subset_of = [&](const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b) {
        for (int w = 0; w < words; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    };
    std::vector<std::vector<std::uint64_t>> pruned;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < covers.size() && !dominated; ++j)
            if (i != j && subset_of(covers[i], covers[j]) &&
                (covers[i] != covers[j] || j < i))
                dominated = true;
        if (!dominated) pruned.push_back(covers[i]);
    }

    // greedy upper bound
    std::vector<std::uint64_t> uncovered(words, 0);
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        uncovered[ci / 64] |= 1ull << (ci % 64);
    auto count_bits = [&](const std::vector<std::uint64_t>& v) {
        int c = 0;
        for (auto w : v) c += std::popcount(w);
        return c;
    };
    int greedy = 0;
    {
        auto left = uncovered;
        while (count_bits(left) > 0) {
            std::size_t best = 0;
            int best_gain = -1;
            for (std::size_t ri = 0; ri < pruned.size(); ++ri) {
                int gain = 0;
                for (int w = 0; w < words; ++w)
                    gain += std::popcount(left[w] & pruned[ri][w]);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = ri;
                }
            }
            for (int w = 0; w < words; ++w) left[w] &= ~pruned[best][w];
            ++greedy;
        }
    }

    CoverSearch search(std::move(pruned), words, node_budget);
    return search.run(uncovered, static_cast<int>(cells.size()), greedy);
}

}  // namespace

RectangleCover rectangle_cover_bound(const RatMatrix& m, std::uint64_t node_budget) {
    return bound_impl(build_support(m), node_budget);
}

RectangleCover rectangle_cover_bound(const RealMatrix& m, std::uint64_t node_budget) {
    return bound_impl(build_support(m), node_budget);
}

}  // namespace xfc
