#pragma once

#include "xfc/graph.hpp"
#include "xfc/rational.hpp"

namespace xfc {

/// Maximum of 2|E(H)|/|V(H)| over all nonempty induced subgraphs H of g,
/// exact. Exhaustive over subsets up to 20 vertices; above that, exact
/// maximum-density subgraph via repeated minimum cuts (the maximum over
/// arbitrary subgraphs is attained on an induced one). Throws on an empty
/// graph.
Rat max_avg_degree_induced(const Graph& g);

namespace detail {
/// Densest-subgraph test: returns a vertex set with |E(H)|/|V(H)| > guess
/// (as num/den), or empty if none exists.
std::vector<int> denser_than(const Graph& g, long long num, long long den);
}  // namespace detail

}  // namespace xfc
