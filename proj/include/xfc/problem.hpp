#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xfc/graph.hpp"
#include "xfc/matrix.hpp"
#include "xfc/rational.hpp"
#include "xfc/vertexset.hpp"

namespace xfc {

/// Finite maximization problem: solutions, tabulated objectives, and one
/// approximation guarantee f* per objective with f* >= max_s f(s).
struct MaxProblem {
    std::vector<std::string> solution_labels;
    std::vector<std::string> objective_labels;
    std::vector<std::vector<Rat>> objective_values;  // objectives x solutions
    std::vector<Rat> guarantees;

    std::size_t num_solutions() const { return solution_labels.size(); }
    std::size_t num_objectives() const { return objective_labels.size(); }
};

/// Slack matrix M(f, s) = f* - f(s). Throws GuaranteeViolation with a
/// witness when some objective value exceeds its guarantee.
RatMatrix slack_matrix(const MaxProblem& p);

/// Uniform-model stable set problem over a graph family with V(G) ⊆ [n]:
/// solutions are all subsets of [n]; objectives f_G(S) = |V(G)∩S| − |E(G[S])|;
/// guarantees (1+rho)·alpha(G). The two defining conditions
///   (a) max_S f_G(S) = alpha(G) and (b) f_G(S) = |V(G)∩S| when |V(G)∩S| <= 1
/// are verified on construction by full enumeration.
MaxProblem stab_u_problem(const std::vector<Graph>& family, int n, const Rat& rho);

/// Non-uniform model for a fixed graph: solutions are the stable sets of g,
/// objectives f_a(S) = |S∩a| with guarantee alpha(G[a]). When no objective
/// family is given, all subsets a ⊆ V(g) are used (requires small g).
MaxProblem stab_nu_problem(const Graph& g,
                           std::optional<std::vector<std::vector<int>>> objective_family =
                               std::nullopt,
                           std::uint64_t solution_cap = 1u << 20);

struct UniformToy {
    MaxProblem problem;
    std::vector<Graph> good_graphs;    // one G_a per k-subset a, row order
    std::vector<Rat> shift_vector;     // (1+rho)(3 log2 n − alpha(G_a)) per row
    Rat shifted_high;                  // (1+rho)·3 log2 n
};

/// Toy uniform-model family: for every k-subset a of [n], the good graph
/// G_a minimizing alpha with ties broken by lexicographic edge set (the
/// complete graph on a). n must be a power of two so 3 log2 n is exact.
UniformToy uniform_model_toy(int n, int k, const Rat& rho = Rat(0));

}  // namespace xfc
