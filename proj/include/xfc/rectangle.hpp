#pragma once

#include <cstdint>

#include "xfc/matrix.hpp"

namespace xfc {

/// Minimum number of zero-free combinatorial rectangles (row set x column
/// set containing no defined zero) needed to cover every defined positive
/// entry. A certified lower bound on the nonnegative rank.
struct RectangleCover {
    int bound = 0;      // exact minimum, or best proven lower bound
    bool exact = true;  // false when the node budget ran out first
    std::uint64_t nodes_used = 0;
};

RectangleCover rectangle_cover_bound(const RatMatrix& m,
                                     std::uint64_t node_budget = 1u << 22);
RectangleCover rectangle_cover_bound(const RealMatrix& m,
                                     std::uint64_t node_budget = 1u << 22);

}  // namespace xfc
