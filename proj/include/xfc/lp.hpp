#pragma once

#include <string>
#include <vector>

#include "xfc/factorization.hpp"
#include "xfc/problem.hpp"
#include "xfc/rational.hpp"

namespace xfc {

/// LP formulation of a maximization problem: a system
///   ineq_lhs x <= ineq_rhs,  eq_lhs x = eq_rhs
/// with one point per solution and one linear objective vector per
/// objective function. The size of the formulation is the number of
/// inequalities.
struct LPFormulation {
    std::vector<std::vector<Rat>> ineq_lhs;
    std::vector<Rat> ineq_rhs;
    std::vector<std::vector<Rat>> eq_lhs;
    std::vector<Rat> eq_rhs;
    std::vector<std::vector<Rat>> points;             // one x^s per solution
    std::vector<std::vector<Rat>> objective_vectors;  // one w^f per objective
    std::vector<Rat> guarantees;                      // f* per objective

    std::size_t size() const { return ineq_lhs.size(); }
    std::size_t dimension() const;
};

struct LpCheckReport {
    bool points_feasible = false;   // every x^s satisfies the system
    bool objectives_linear = false; // <w^f, x^s> = f(s) for all f, s
    bool approx_bounded = false;    // LP max <= f* for every objective
    std::string detail;             // first failure, if any
    bool ok() const { return points_feasible && objectives_linear && approx_bounded; }
};

/// Exact verification of the three defining conditions. The third solves
/// one LP per objective with the exact simplex.
LpCheckReport check_lp_formulation(const LPFormulation& lp, const MaxProblem& problem);

/// Maximum of <w, x> over the lp's feasible region (exact). Throws on an
/// infeasible region; reports unboundedness via the flag.
struct LpMax {
    bool bounded = false;
    Rat value = 0;
};
LpMax lp_maximize(const LPFormulation& lp, const std::vector<Rat>& w);

/// Factorization -> LP direction: from an exact rank-r nonnegative
/// factorization of the slack matrix, builds the size-r formulation
///   x <= 0, alpha = 1  in dimension r+1,
/// with w^f = (T^f, f*) and x^s = (-U_s, 1). All three conditions are
/// verified before returning.
LPFormulation factorization_to_lp(const RatFactorization& f, const MaxProblem& problem);

/// LP -> factorization direction: computes Farkas multipliers per objective
/// by exact LP duality, yielding a rank-(size+1) nonnegative factorization
/// of the slack matrix with residual exactly zero.
RatFactorization lp_to_factorization(const LPFormulation& lp, const MaxProblem& problem);

std::string lp_to_json(const LPFormulation& lp);
LPFormulation lp_from_json(const std::string& text);

}  // namespace xfc
