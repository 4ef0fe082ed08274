#include "xfc/udisj.hpp"

#include <bit>

#include "xfc/errors.hpp"

namespace xfc {

namespace {

constexpr int kFullCap = 12;                    // full UDISJ(n) cap
constexpr std::uint64_t kCellCap = 1ull << 24;  // row-restricted cell cap

std::string mask_label(std::uint64_t mask, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (mask & (1ull << i)) s[i] = '1';
    return s;
}

}  // namespace

RatMatrix build_udisj(int n, std::optional<int> k) {
    if (n < 1) throw Error("UDISJ needs n >= 1");
    if (n > kFullCap)
        throw InstanceTooLarge("UDISJ(n) capped at n = " + std::to_string(kFullCap));
    std::uint64_t total = 1ull << n;

    std::vector<std::uint64_t> row_masks;
    if (k) {
        if (*k < 0 || *k > n) throw Error("need 0 <= k <= n");
        for (std::uint64_t a = 0; a < total; ++a)
            if (std::popcount(a) == *k) row_masks.push_back(a);
    } else {
        for (std::uint64_t a = 0; a < total; ++a) row_masks.push_back(a);
    }
    if (row_masks.size() * total > kCellCap)
        throw InstanceTooLarge("UDISJ(n,k) exceeds the cell cap");

    std::vector<std::string> row_labels, col_labels;
    for (auto a : row_masks) row_labels.push_back(mask_label(a, n));
    for (std::uint64_t b = 0; b < total; ++b) col_labels.push_back(mask_label(b, n));

    RatMatrix m(std::move(row_labels), std::move(col_labels));
    for (std::size_t r = 0; r < row_masks.size(); ++r)
        for (std::uint64_t b = 0; b < total; ++b) {
            int inter = std::popcount(row_masks[r] & b);
            if (inter == 0)
                m.set(r, b, 1);
            else if (inter == 1)
                m.set(r, b, 0);
            else
                m.set_undefined(r, b);
        }
    return m;
}

RatMatrix complete_family_example(int n) {
    RatMatrix full = build_udisj(n);
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < full.rows(); ++r) rows.push_back(r);  // drop the ∅ row
    for (std::size_t c = 0; c < full.cols(); ++c) cols.push_back(c);
    return full.submatrix(rows, cols);
}

}  // namespace xfc
