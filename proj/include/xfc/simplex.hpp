#pragma once

#include <vector>

#include "xfc/rational.hpp"

namespace xfc {

/// Exact rational linear programming in standard form:
///   minimize c^T x  subject to  A x = b, x >= 0.
/// Two-phase textbook simplex with Bland's rule (terminating, exact).
struct LpSolution {
    enum Status { Optimal, Infeasible, Unbounded };
    Status status = Infeasible;
    std::vector<Rat> x;
    Rat objective = 0;
};

LpSolution solve_standard_lp(const std::vector<std::vector<Rat>>& A,
                             const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace xfc
