#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xfc/graph.hpp"

namespace xfc {

/// Hard cap for the exact stability-number solver.
constexpr int kAlphaVertexCap = 64;

struct StableSetResult {
    int alpha = 0;
    std::vector<int> witness;  // labels of one maximum stable set
};

/// Exact stability number with certificate. Branch-and-bound (maximum
/// clique in the complement with greedy-coloring bound). Throws
/// InstanceTooLarge above kAlphaVertexCap vertices.
StableSetResult stability_number_with_witness(const Graph& g);
int stability_number(const Graph& g);

bool is_stable(const Graph& g, const std::vector<int>& labels);

/// Calls fn(labels) once for every stable set of g (the empty set
/// included), in lexicographic vertex-index order. Stops early and
/// returns false when fn returns false.
bool for_each_stable_set(const Graph& g,
                         const std::function<bool(const std::vector<int>&)>& fn);

/// All stable sets as sorted label vectors; size_cap restricts to sets of
/// size <= cap. Throws BudgetExceeded (with partial count) when more than
/// budget sets are produced.
std::vector<std::vector<int>> enumerate_stable_sets(
    const Graph& g, std::optional<int> size_cap = std::nullopt,
    std::uint64_t budget = 1u << 22);

/// Exact number of stable sets; throws BudgetExceeded past the budget.
std::uint64_t count_stable_sets(const Graph& g, std::uint64_t budget = UINT64_MAX);

}  // namespace xfc
