#pragma once

#include <cstdint>
#include <vector>

#include "xfc/graph.hpp"

namespace xfc {

/// Outcome of an induced-subgraph search. Absent is a certificate (the
/// search space was exhausted); BudgetExhausted is not.
struct InducedSearchResult {
    enum Outcome { Found, Absent, BudgetExhausted };
    Outcome outcome = Absent;
    std::vector<int> map;  // map[i] = g-label of pattern vertex index i
    std::uint64_t nodes_used = 0;
};

/// Backtracking search for an induced copy of h in g (edges and non-edges
/// both preserved). Every returned map is re-verified edge by edge before
/// returning. Pattern capped at 64 vertices.
InducedSearchResult find_induced(const Graph& h, const Graph& g,
                                 std::uint64_t node_budget = 1u << 24);

}  // namespace xfc
