#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "xfc/graph.hpp"
#include "xfc/rational.hpp"

namespace xfc {

/// Monte-Carlo frequency estimate with a 95% Wilson interval. Trials that
/// could not be decided within budget are counted separately, never folded
/// into either outcome.
struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t undecided = 0;
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    bool flagged = false;
    std::string flag_reason;
};

/// Wilson 95% interval around successes/decided.
McEstimate wilson_estimate(std::uint64_t successes, std::uint64_t undecided,
                           std::uint64_t trials, std::uint64_t seed);

struct ContainmentReport {
    McEstimate estimate;      // success = certified non-containment
    double g = 0.0;           // g(n, p, v, d)
    double c0_g_squared = 0.0;
    double d_used = 0.0;
    bool bound_valid = false; // g statistic hypotheses held
};

/// Estimates P(h not induced in G(n,p)) over seeded trials and reports the
/// second-moment bound c0 g^2 for comparison. d defaults to the exact
/// maximum average degree over induced subgraphs of h; gadget callers pass
/// the closed-form cap instead. Budget-exhausted searches land in the
/// undecided bucket; the estimate is flagged when they exceed 1% of trials.
ContainmentReport containment_probability_mc(const Graph& h, int n, double p, int trials,
                                             std::uint64_t seed,
                                             std::uint64_t node_budget = 1u << 24,
                                             std::optional<double> d_override = std::nullopt,
                                             int threads = 1);

struct AlphaTailReport {
    McEstimate estimate;  // success = alpha(G) >= threshold
    int threshold = 0;
    double analytic_bound = 0.0;  // (n e^{-p(r-1)/2})^r
};

/// Empirical frequency of alpha(G(n,p)) >= threshold plus the analytic
/// tail bound for comparison.
AlphaTailReport alpha_tail_experiment(int n, double p, int threshold, int trials,
                                      std::uint64_t seed, int threads = 1);

struct StableCountReport {
    std::uint64_t count = 0;
    int alpha = 0;
    Int bound = 0;  // (n+1)^alpha
    bool holds = false;
};

/// Exact stable-set count against the (n+1)^alpha bound.
StableCountReport stable_count_check(const Graph& g);

}  // namespace xfc
