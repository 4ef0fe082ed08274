#pragma once

#include <optional>

#include "xfc/matrix.hpp"

namespace xfc {

/// Unique-disjointness partial matrix over all subsets of [n] (rows and
/// columns in integer-mask order, the empty set first): entry 1 when
/// |a∩b| = 0, entry 0 when |a∩b| = 1, undefined otherwise. With k given,
/// rows are restricted to |a| = k (columns stay unrestricted).
RatMatrix build_udisj(int n, std::optional<int> k = std::nullopt);

/// Guaranteed slack entries for the family of all nonempty complete graphs
/// on subsets of [n]: M(K_n[a], b) = 1 − |a∩b| where |a∩b| <= 1, undefined
/// otherwise. Equals build_udisj(n) without its empty-set row.
RatMatrix complete_family_example(int n);

}  // namespace xfc
