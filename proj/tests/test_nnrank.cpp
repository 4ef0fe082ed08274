#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xfc/errors.hpp"
#include "xfc/factorization.hpp"
#include "xfc/gadget.hpp"
#include "xfc/lp.hpp"
#include "xfc/nmf.hpp"
#include "xfc/nnrank.hpp"
#include "xfc/problem.hpp"
#include "xfc/rectangle.hpp"
#include "xfc/rng.hpp"
#include "xfc/simplex.hpp"
#include "xfc/stable.hpp"
#include "xfc/udisj.hpp"

using namespace xfc;

namespace {

// Test-only oracle: can M be written as a single nonnegative rank-1 term?
// True iff the positive support is a full rectangle and M restricted to it
// has linear rank one.
bool oracle_rank1_possible(const RatMatrix& m) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.is_defined(r, c) && m.at(r, c) != 0) {
                if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
                if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
            }
    for (auto r : rows)
        for (auto c : cols) {
            if (!m.is_defined(r, c)) continue;  // free entries impose nothing
            if (m.at(r, c) == 0) return false;  // zero inside the support rectangle
        }
    // rank-1 cross-ratio test on defined support entries
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        for (std::size_t j = 0; j + 1 < cols.size(); ++j)
            for (std::size_t k = i + 1; k < rows.size(); ++k)
                for (std::size_t l = j + 1; l < cols.size(); ++l) {
                    if (!m.is_defined(rows[i], cols[j]) || !m.is_defined(rows[i], cols[l]) ||
                        !m.is_defined(rows[k], cols[j]) || !m.is_defined(rows[k], cols[l]))
                        continue;
                    if (m.at(rows[i], cols[j]) * m.at(rows[k], cols[l]) !=
                        m.at(rows[i], cols[l]) * m.at(rows[k], cols[j]))
                        return false;
                }
    return true;
}

// Test-only oracle: brute-force minimum rectangle cover by enumerating all
// valid rectangles and all covers up to the greedy size.
int oracle_rect_cover(const RatMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.is_defined(r, c) && m.at(r, c) > 0) pos.emplace_back(r, c);
    if (pos.empty()) return 0;
    auto rect_ok = [&](std::uint64_t rmask, std::uint64_t cmask) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if ((rmask >> r & 1) && (cmask >> c & 1) && m.is_defined(r, c) &&
                    m.at(r, c) == 0)
                    return false;
        return true;
    };
    std::vector<std::uint64_t> rect_cover;  // bitset over pos indices
    for (std::uint64_t rmask = 1; rmask < (1ull << m.rows()); ++rmask)
        for (std::uint64_t cmask = 1; cmask < (1ull << m.cols()); ++cmask) {
            if (!rect_ok(rmask, cmask)) continue;
            std::uint64_t cover = 0;
            for (std::size_t i = 0; i < pos.size(); ++i)
                if ((rmask >> pos[i].first & 1) && (cmask >> pos[i].second & 1))
                    cover |= 1ull << i;
            if (cover) rect_cover.push_back(cover);
        }
    std::uint64_t all = pos.size() == 64 ? ~0ull : (1ull << pos.size()) - 1;
    for (int k = 1;; ++k) {
        // all k-subsets of rectangles via recursion
        std::function<bool(std::size_t, int, std::uint64_t)> rec =
            [&](std::size_t start, int left, std::uint64_t covered) -> bool {
            if (covered == all) return true;
            if (left == 0) return false;
            for (std::size_t i = start; i < rect_cover.size(); ++i)
                if (rec(i + 1, left - 1, covered | rect_cover[i])) return true;
            return false;
        };
        if (rec(0, k, 0)) return k;
    }
}

MaxProblem two_solution_problem() {
    MaxProblem p;
    p.solution_labels = {"s1", "s2"};
    p.objective_labels = {"f"};
    p.objective_values = {{Rat(0), Rat(1)}};
    p.guarantees = {Rat(1)};
    return p;
}

}  // namespace

TEST_CASE("verify_factorization: named cases") {
    RatMatrix eye = RatMatrix::zeros(2, 2);
    eye.set(0, 0, 1);
    eye.set(1, 1, 1);
    RatFactorization f;
    f.left = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    f.right = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    auto res = verify_factorization(eye, f, Rat(0));
    CHECK(res.ok);
    CHECK(res.max_residual == 0.0);

    RatMatrix m = RatMatrix::zeros(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 0);
    RatFactorization mf;
    mf.left = {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
    mf.right = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(verify_factorization(m, mf, Rat(0)).ok);

    // masked corner: factorization may disagree on the undefined entry
    RatMatrix u2 = build_udisj(2);
    RatFactorization trivial;
    trivial.left.assign(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i) trivial.left[i][i] = 1;
    trivial.right.assign(4, std::vector<Rat>(4, Rat(0)));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            trivial.right[r][c] = u2.is_defined(r, c) ? u2.at(r, c) : Rat(77);
    CHECK(verify_factorization(u2, trivial, Rat(0)).ok);

    RatFactorization neg;
    neg.left = {{Rat(-1)}};
    neg.right = {{Rat(1)}};
    RatMatrix one = RatMatrix::zeros(1, 1);
    CHECK_THROWS_AS(verify_factorization(one, neg, Rat(0)), Error);
}

TEST_CASE("simplex: named small programs") {
    // min -x1 - x2 s.t. x1 + x2 + s = 1 → optimum -1
    LpSolution sol = solve_standard_lp({{Rat(1), Rat(1), Rat(1)}}, {Rat(1)},
                                       {Rat(-1), Rat(-1), Rat(0)});
    CHECK(sol.status == LpSolution::Optimal);
    CHECK(sol.objective == Rat(-1));

    // infeasible: x1 = -1, x1 >= 0
    LpSolution inf = solve_standard_lp({{Rat(1)}}, {Rat(-1)}, {Rat(1)});
    CHECK(inf.status == LpSolution::Infeasible);

    // unbounded: min -x1 with a vacuous constraint row 0 = 0
    LpSolution unb = solve_standard_lp({{Rat(0)}}, {Rat(0)}, {Rat(-1)});
    CHECK(unb.status == LpSolution::Unbounded);

    // degenerate but bounded
    LpSolution deg = solve_standard_lp({{Rat(1), Rat(-1)}}, {Rat(0)}, {Rat(1), Rat(1)});
    CHECK(deg.status == LpSolution::Optimal);
    CHECK(deg.objective == 0);
}

TEST_CASE("lp_to_factorization: worked 1-d example") {
    // region 0 <= x <= 1, points 0 and 1, w = (1), f* = 1
    LPFormulation lp;
    lp.ineq_lhs = {{Rat(-1)}, {Rat(1)}};
    lp.ineq_rhs = {Rat(0), Rat(1)};
    lp.points = {{Rat(0)}, {Rat(1)}};
    lp.objective_vectors = {{Rat(1)}};
    lp.guarantees = {Rat(1)};

    MaxProblem p = two_solution_problem();
    RatFactorization f = lp_to_factorization(lp, p);
    CHECK(f.rank() == 3);
    // U rows: constants (1,1), slack of -x <= 0: (0,1), slack of x <= 1: (1,0)
    CHECK(f.right[0] == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(f.right[1] == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(f.right[2] == std::vector<Rat>{Rat(1), Rat(0)});
    // multipliers select the x <= 1 constraint
    CHECK(f.left[0] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    CHECK(verify_factorization(slack_matrix(p), f, Rat(0)).ok);
}

TEST_CASE("factorization_to_lp: named cases") {
    MaxProblem p = two_solution_problem();
    // slack row (1, 0) = T U with T = [1], U = [1, 0]
    RatFactorization f;
    f.left = {{Rat(1)}};
    f.right = {{Rat(1), Rat(0)}};
    LPFormulation lp = factorization_to_lp(f, p);
    CHECK(lp.size() == 1);
    CHECK(lp.dimension() == 2);
    // <w, x^{s2}> = f(s2) = 1
    CHECK(lp.objective_vectors[0][0] * lp.points[1][0] +
              lp.objective_vectors[0][1] * lp.points[1][1] ==
          Rat(1));

    // zero slack matrix, T = U = 0: LP max equals f* at x = 0
    MaxProblem z;
    z.solution_labels = {"s"};
    z.objective_labels = {"f"};
    z.objective_values = {{Rat(2)}};
    z.guarantees = {Rat(2)};
    RatFactorization zf;
    zf.left = {{Rat(0)}};
    zf.right = {{Rat(0)}};
    LPFormulation zlp = factorization_to_lp(zf, z);
    LpMax mx = lp_maximize(zlp, zlp.objective_vectors[0]);
    CHECK(mx.bounded);
    CHECK(mx.value == Rat(2));

    // inexact factorization rejected in exact mode
    RatFactorization bad;
    bad.left = {{Rat(1)}};
    bad.right = {{Rat(1), Rat(1)}};
    CHECK_THROWS_AS(factorization_to_lp(bad, p), Error);
}

TEST_CASE("round trip: lp -> factorization -> lp on the P4 slack") {
    Graph p4 = GadgetGraph::build(Graph::complete(2), 0).graph();
    MaxProblem prob = stab_nu_problem(p4);

    // hand-built LP: all rank inequalities + nonnegativity
    LPFormulation lp;
    int nv = p4.vertex_count();
    for (std::uint64_t am = 1; am < (1ull << nv); ++am) {
        std::vector<Rat> row(nv, Rat(0));
        std::vector<int> a;
        for (int i = 0; i < nv; ++i)
            if (am & (1ull << i)) {
                row[i] = 1;
                a.push_back(p4.vertices()[i]);
            }
        lp.ineq_lhs.push_back(row);
        lp.ineq_rhs.push_back(stability_number(p4.induced(a)));
    }
    for (int i = 0; i < nv; ++i) {
        std::vector<Rat> row(nv, Rat(0));
        row[i] = -1;
        lp.ineq_lhs.push_back(row);
        lp.ineq_rhs.push_back(Rat(0));
    }
    for (const auto& slabel : prob.solution_labels) {
        std::vector<Rat> x(nv, Rat(0));
        for (int i = 0; i < nv; ++i) {
            int label = p4.vertices()[i];
            if (slabel[label - 1] == '1') x[i] = 1;
        }
        lp.points.push_back(x);
    }
    for (const auto& albl : prob.objective_labels) {
        std::vector<Rat> w(nv, Rat(0));
        for (int i = 0; i < nv; ++i)
            if (albl[p4.vertices()[i] - 1] == '1') w[i] = 1;
        lp.objective_vectors.push_back(w);
    }
    lp.guarantees = prob.guarantees;

    CHECK(check_lp_formulation(lp, prob).ok());
    RatFactorization f = lp_to_factorization(lp, prob);
    CHECK(f.rank() == lp.size() + 1);
    CHECK(verify_factorization(slack_matrix(prob), f, Rat(0)).ok);

    LPFormulation lp2 = factorization_to_lp(f, prob);
    CHECK(lp2.size() == f.rank());
    RatFactorization f2 = lp_to_factorization(lp2, prob);
    CHECK(f2.rank() == lp2.size() + 1);
    CHECK(verify_factorization(slack_matrix(prob), f2, Rat(0)).ok);
}

TEST_CASE("nmf: named cases") {
    // [[1,1],[1,0]] fits at r=2 but not r=1
    RealMatrix m = RealMatrix::zeros(2, 2);
    m.set(0, 0, 1.0);
    m.set(0, 1, 1.0);
    m.set(1, 0, 1.0);
    m.set(1, 1, 0.0);
    NmfResult r2 = nmf_upper(m, 2, 8, 20000, 7);
    CHECK(r2.found);
    CHECK(r2.max_residual < 1e-6);
    NmfResult r1 = nmf_upper(m, 1, 8, 20000, 7);
    CHECK(!r1.found);

    // masked UDISJ(2) at the trivial rank 4
    RealMatrix u2 = to_real(build_udisj(2));
    CHECK(nmf_upper(u2, 4, 8, 20000, 7).found);
}

TEST_CASE("nmf determinism: identical inputs give identical outputs") {
    RealMatrix m = to_real(build_udisj(2));
    NmfResult a = nmf_upper(m, 3, 4, 400, 99);
    NmfResult b = nmf_upper(m, 3, 4, 400, 99);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.restart_index == b.restart_index);
    CHECK(a.factorization.left == b.factorization.left);
    CHECK(a.factorization.right == b.factorization.right);
}

TEST_CASE("rectangle cover: named cases") {
    CHECK(rectangle_cover_bound(build_udisj(1)).bound == 2);

    RatMatrix ones = RatMatrix::zeros(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) ones.set(r, c, 1);
    CHECK(rectangle_cover_bound(ones).bound == 1);

    // UDISJ(2): frozen from the exhaustive oracle
    RatMatrix u2 = build_udisj(2);
    int oracle_value = oracle_rect_cover(u2);
    CHECK(oracle_value == 3);
    RectangleCover rc = rectangle_cover_bound(u2);
    CHECK(rc.exact);
    CHECK(rc.bound == oracle_value);

    RatMatrix eye = RatMatrix::zeros(3, 3);
    for (int i = 0; i < 3; ++i) eye.set(i, i, 1);
    CHECK(rectangle_cover_bound(eye).bound == 3);
}

TEST_CASE("rectangle cover agrees with the oracle on random 4x4 supports") {
    CounterRng rng(1212);
    for (int trial = 0; trial < 25; ++trial) {
        auto tr = rng.stream(trial);
        RatMatrix m = RatMatrix::zeros(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                double roll = tr.uniform01(r * 4 + c);
                if (roll < 0.25)
                    m.set(r, c, 0);
                else if (roll < 0.35)
                    m.set_undefined(r, c);
                else
                    m.set(r, c, Rat(1 + static_cast<int>(roll * 10)));
            }
        RectangleCover rc = rectangle_cover_bound(m);
        CHECK(rc.exact);
        CHECK(rc.bound == oracle_rect_cover(m));
    }
}

TEST_CASE("rank interval: named cases") {
    // I3 certified [3,3]
    RatMatrix eye = RatMatrix::zeros(3, 3);
    for (int i = 0; i < 3; ++i) eye.set(i, i, 1);
    RankInterval ri = exact_nnegrk_small(eye);
    CHECK(ri.lower == 3);
    CHECK(ri.upper == 3);
    CHECK(ri.certified());

    // [[1,1],[1,0]] certified [2,2] against the rank-1 oracle
    RatMatrix m = RatMatrix::zeros(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 0);
    CHECK(!oracle_rank1_possible(m));
    RankInterval mi = exact_nnegrk_small(m);
    CHECK(mi.lower == 2);
    CHECK(mi.upper == 2);

    // UDISJ(2): lower >= rectangle bound, upper <= 4
    RankInterval ui = exact_nnegrk_small(build_udisj(2));
    CHECK(ui.lower >= 3);
    CHECK(ui.upper <= 4);
    CHECK(ui.lower <= ui.upper);

    RatMatrix wide = RatMatrix::zeros(8, 8);
    CHECK_THROWS_AS(exact_nnegrk_small(wide), InstanceTooLarge);
}

TEST_CASE("rank bounds: monotone under deletion and duplication") {
    CounterRng rng(8080);
    for (int trial = 0; trial < 100; ++trial) {
        auto tr = rng.stream(trial);
        RatMatrix m = RatMatrix::zeros(5, 5);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                double roll = tr.uniform01(r * 5 + c);
                m.set(r, c, roll < 0.3 ? Rat(0) : Rat(1 + static_cast<int>(roll * 16), 4));
            }
        int base = rectangle_cover_bound(m).bound;

        // delete one random row and one random column
        std::size_t dr = tr.at(100) % 5, dc = tr.at(101) % 5;
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 0; r < 5; ++r)
            if (r != dr) rows.push_back(r);
        for (std::size_t c = 0; c < 5; ++c)
            if (c != dc) cols.push_back(c);
        std::vector<std::size_t> all{0, 1, 2, 3, 4};
        CHECK(rectangle_cover_bound(m.submatrix(rows, all)).bound <= base);
        CHECK(rectangle_cover_bound(m.submatrix(all, cols)).bound <= base);

        // duplicate a row: bound unchanged
        std::vector<std::size_t> dup{0, 1, 2, 3, 4, dr};
        CHECK(rectangle_cover_bound(m.submatrix(dup, all)).bound == base);
    }
}

TEST_CASE("rank interval upper bound: monotone on seeded 5x5 instances") {
    CounterRng rng(9090);
    for (int trial = 0; trial < 20; ++trial) {
        auto tr = rng.stream(trial);
        RatMatrix m = RatMatrix::zeros(5, 5);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                double roll = tr.uniform01(r * 5 + c);
                m.set(r, c, roll < 0.3 ? Rat(0) : Rat(1 + static_cast<int>(roll * 16), 4));
            }
        RankInterval base = exact_nnegrk_small(m);
        CHECK(base.lower <= base.upper);
        CHECK(base.upper <= 5);

        std::vector<std::size_t> all{0, 1, 2, 3, 4};
        std::size_t dr = tr.at(100) % 5;
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < 5; ++r)
            if (r != dr) rows.push_back(r);
        RankInterval del = exact_nnegrk_small(m.submatrix(rows, all));
        CHECK(del.upper <= base.upper);

        std::vector<std::size_t> dup{0, 1, 2, 3, 4, dr};
        RankInterval dupi = exact_nnegrk_small(m.submatrix(dup, all));
        CHECK(dupi.upper == base.upper);
    }
}

TEST_CASE("theory bounds: named values") {
    CorLbBound b2 = theory_corlb(2);
    CHECK(b2.exponent == doctest::Approx(1.1699250014423124).epsilon(1e-12));
    CHECK(b2.ceil_value == 3);
    CHECK(theory_corlb(7).exponent == doctest::Approx(4.0947375050480926).epsilon(1e-12));

    CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-12));

    ShiftedUdisjBound s = theory_shifted_udisj(40, 0, 0, 0);
    CHECK(s.leading_exponent == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(s.note.find("omitted") != std::string::npos);

    CHECK_THROWS_AS(theory_shifted_udisj(40, -1, 0, 0), Error);
    CHECK_THROWS_AS(theory_shifted_udisj(40, 0, 1.0, 0), Error);
}
