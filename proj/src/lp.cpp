#include "xfc/lp.hpp"

#include <json.hpp>

#include "xfc/errors.hpp"
#include "xfc/simplex.hpp"

namespace xfc {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

nlohmann::ordered_json rat_rows(const std::vector<std::vector<Rat>>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Rat& v : row) r.push_back(rat_to_string(v));
        out.push_back(r);
    }
    return out;
}

nlohmann::ordered_json rat_row(const std::vector<Rat>& row) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Rat& v : row) r.push_back(rat_to_string(v));
    return r;
}

std::vector<std::vector<Rat>> parse_rows(const nlohmann::json& j) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : j) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_string(v.get<std::string>()));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Rat> parse_row(const nlohmann::json& j) {
    std::vector<Rat> r;
    for (const auto& v : j) r.push_back(rat_from_string(v.get<std::string>()));
    return r;
}

}  // namespace

std::size_t LPFormulation::dimension() const {
    if (!ineq_lhs.empty()) return ineq_lhs[0].size();
    if (!eq_lhs.empty()) return eq_lhs[0].size();
    if (!points.empty()) return points[0].size();
    return 0;
}

LpMax lp_maximize(const LPFormulation& lp, const std::vector<Rat>& w) {
    // max <w, x>  ==  -min <-w, x> over the region. Standard form: free x
    // split as x = xp - xm, slack s on inequalities.
    std::size_t d = lp.dimension();
    std::size_t r = lp.size(), k = lp.eq_lhs.size();
    std::size_t vars = 2 * d + r;
    std::vector<std::vector<Rat>> A(r + k, std::vector<Rat>(vars, Rat(0)));
    std::vector<Rat> b(r + k, Rat(0));
    std::vector<Rat> c(vars, Rat(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            A[i][j] = lp.ineq_lhs[i][j];
            A[i][d + j] = -lp.ineq_lhs[i][j];
        }
        A[i][2 * d + i] = 1;
        b[i] = lp.ineq_rhs[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            A[r + i][j] = lp.eq_lhs[i][j];
            A[r + i][d + j] = -lp.eq_lhs[i][j];
        }
        b[r + i] = lp.eq_rhs[i];
    }
    for (std::size_t j = 0; j < d; ++j) {
        c[j] = -w[j];
        c[d + j] = w[j];
    }
    LpSolution sol = solve_standard_lp(A, b, c);
    if (sol.status == LpSolution::Infeasible)
        throw Error("LP region is infeasible");
    LpMax out;
    if (sol.status == LpSolution::Unbounded) return out;  // bounded = false
    out.bounded = true;
    out.value = -sol.objective;
    return out;
}

LpCheckReport check_lp_formulation(const LPFormulation& lp, const MaxProblem& problem) {
    LpCheckReport rep;
    std::size_t d = lp.dimension();
    if (lp.points.size() != problem.num_solutions() ||
        lp.objective_vectors.size() != problem.num_objectives() ||
        lp.guarantees.size() != problem.num_objectives())
        throw DimensionMismatch("formulation does not match the problem shape");

    rep.points_feasible = true;
    for (std::size_t s = 0; s < lp.points.size() && rep.points_feasible; ++s) {
        const auto& x = lp.points[s];
        if (x.size() != d) throw DimensionMismatch("point dimension mismatch");
        for (std::size_t i = 0; i < lp.size(); ++i)
            if (dot(lp.ineq_lhs[i], x) > lp.ineq_rhs[i]) {
                rep.points_feasible = false;
                rep.detail = "point '" + problem.solution_labels[s] +
                             "' violates inequality " + std::to_string(i);
                break;
            }
        for (std::size_t i = 0; i < lp.eq_lhs.size() && rep.points_feasible; ++i)
            if (dot(lp.eq_lhs[i], x) != lp.eq_rhs[i]) {
                rep.points_feasible = false;
                rep.detail = "point '" + problem.solution_labels[s] +
                             "' violates equation " + std::to_string(i);
            }
    }

    rep.objectives_linear = true;
    for (std::size_t f = 0; f < problem.num_objectives() && rep.objectives_linear; ++f)
        for (std::size_t s = 0; s < problem.num_solutions(); ++s)
            if (dot(lp.objective_vectors[f], lp.points[s]) != problem.objective_values[f][s]) {
                rep.objectives_linear = false;
                rep.detail = "<w,x> != f(s) at objective '" + problem.objective_labels[f] +
                             "', solution '" + problem.solution_labels[s] + "'";
                break;
            }

    rep.approx_bounded = true;
    for (std::size_t f = 0; f < problem.num_objectives() && rep.approx_bounded; ++f) {
        LpMax mx = lp_maximize(lp, lp.objective_vectors[f]);
        if (!mx.bounded || mx.value > problem.guarantees[f]) {
            rep.approx_bounded = false;
            rep.detail = "LP max for objective '" + problem.objective_labels[f] +
                         (mx.bounded ? "' exceeds its guarantee: " + rat_to_string(mx.value)
                                     : "' is unbounded");
        }
    }
    return rep;
}

LPFormulation factorization_to_lp(const RatFactorization& f, const MaxProblem& problem) {
    RatMatrix slack = slack_matrix(problem);
    VerifyResult ver = verify_factorization(slack, f, Rat(0));
    if (!ver.ok)
        throw Error("factorization residual nonzero in exact mode (max " +
                    std::to_string(ver.max_residual) + ")");

    std::size_t r = f.rank();
    LPFormulation lp;
    // variables y = (x, alpha) in R^{r+1}; system: x <= 0, alpha = 1
    lp.ineq_lhs.assign(r, std::vector<Rat>(r + 1, Rat(0)));
    lp.ineq_rhs.assign(r, Rat(0));
    for (std::size_t i = 0; i < r; ++i) lp.ineq_lhs[i][i] = 1;
    lp.eq_lhs.assign(1, std::vector<Rat>(r + 1, Rat(0)));
    lp.eq_lhs[0][r] = 1;
    lp.eq_rhs.assign(1, Rat(1));
    for (std::size_t s = 0; s < problem.num_solutions(); ++s) {
        std::vector<Rat> x(r + 1);
        for (std::size_t j = 0; j < r; ++j) x[j] = -f.right[j][s];
        x[r] = 1;
        lp.points.push_back(std::move(x));
    }
    for (std::size_t fi = 0; fi < problem.num_objectives(); ++fi) {
        std::vector<Rat> w(r + 1);
        for (std::size_t j = 0; j < r; ++j) w[j] = f.left[fi][j];
        w[r] = problem.guarantees[fi];
        lp.objective_vectors.push_back(std::move(w));
        lp.guarantees.push_back(problem.guarantees[fi]);
    }
    LpCheckReport rep = check_lp_formulation(lp, problem);
    if (!rep.ok())
        throw IdentityViolation("constructed formulation failed verification: " + rep.detail);
    return lp;
}

RatFactorization lp_to_factorization(const LPFormulation& lp, const MaxProblem& problem) {
    LpCheckReport rep = check_lp_formulation(lp, problem);
    if (!rep.ok()) throw Error("formulation invalid for the problem: " + rep.detail);

    std::size_t d = lp.dimension();
    std::size_t r = lp.size(), k = lp.eq_lhs.size();
    RatFactorization fact;
    fact.left.assign(problem.num_objectives(), std::vector<Rat>(r + 1, Rat(0)));

    // Farkas multipliers per objective by exact duality:
    //   min  <ineq_rhs, y> + <eq_rhs, z>
    //   s.t. ineq_lhs^T y + eq_lhs^T z = w,   y >= 0, z free.
    // The optimum equals the LP maximum, so T(f,0) = f* - optimum >= 0.
    std::size_t vars = r + 2 * k;
    for (std::size_t fi = 0; fi < problem.num_objectives(); ++fi) {
        std::vector<std::vector<Rat>> A(d, std::vector<Rat>(vars, Rat(0)));
        std::vector<Rat> b(d, Rat(0));
        std::vector<Rat> c(vars, Rat(0));
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < r; ++i) A[j][i] = lp.ineq_lhs[i][j];
            for (std::size_t i = 0; i < k; ++i) {
                A[j][r + i] = lp.eq_lhs[i][j];
                A[j][r + k + i] = -lp.eq_lhs[i][j];
            }
            b[j] = lp.objective_vectors[fi][j];
        }
        for (std::size_t i = 0; i < r; ++i) c[i] = lp.ineq_rhs[i];
        for (std::size_t i = 0; i < k; ++i) {
            c[r + i] = lp.eq_rhs[i];
            c[r + k + i] = -lp.eq_rhs[i];
        }
        LpSolution sol = solve_standard_lp(A, b, c);
        if (sol.status == LpSolution::Infeasible)
            throw Error("multiplier system infeasible for objective '" +
                        problem.objective_labels[fi] + "' (LP is unbounded)");
        if (sol.status == LpSolution::Unbounded)
            throw Error("dual unbounded for objective '" + problem.objective_labels[fi] +
                        "' (LP region is empty)");
        Rat t0 = problem.guarantees[fi] - sol.objective;
        if (t0 < 0)
            throw Error("LP maximum exceeds the guarantee for objective '" +
                        problem.objective_labels[fi] + "'");
        fact.left[fi][0] = t0;
        for (std::size_t i = 0; i < r; ++i) fact.left[fi][1 + i] = sol.x[i];
    }

    fact.right.assign(r + 1, std::vector<Rat>(problem.num_solutions(), Rat(0)));
    for (std::size_t s = 0; s < problem.num_solutions(); ++s) {
        fact.right[0][s] = 1;
        for (std::size_t i = 0; i < r; ++i)
            fact.right[1 + i][s] = lp.ineq_rhs[i] - dot(lp.ineq_lhs[i], lp.points[s]);
    }

    VerifyResult ver = verify_factorization(slack_matrix(problem), fact, Rat(0));
    if (!ver.ok)
        throw IdentityViolation("constructed factorization is not exact (bug)");
    return fact;
}

std::string lp_to_json(const LPFormulation& lp) {
    nlohmann::ordered_json j;
    j["A_le"] = rat_rows(lp.ineq_lhs);
    j["b_le"] = rat_row(lp.ineq_rhs);
    j["A_eq"] = rat_rows(lp.eq_lhs);
    j["b_eq"] = rat_row(lp.eq_rhs);
    j["points"] = rat_rows(lp.points);
    j["objectives"] = rat_rows(lp.objective_vectors);
    j["guarantees"] = rat_row(lp.guarantees);
    return j.dump();
}

LPFormulation lp_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad LP JSON: ") + e.what());
    }
    LPFormulation lp;
    lp.ineq_lhs = parse_rows(j.at("A_le"));
    lp.ineq_rhs = parse_row(j.at("b_le"));
    lp.eq_lhs = parse_rows(j.at("A_eq"));
    lp.eq_rhs = parse_row(j.at("b_eq"));
    lp.points = parse_rows(j.at("points"));
    lp.objective_vectors = parse_rows(j.at("objectives"));
    lp.guarantees = parse_row(j.at("guarantees"));
    return lp;
}

}  // namespace xfc
