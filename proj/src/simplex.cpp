#include "xfc/simplex.hpp"

#include "xfc/errors.hpp"

namespace xfc {

namespace {

// Dense tableau: rows 0..m-1 are constraints with the right-hand side in
// the last column; row m is the objective (reduced costs, negated value
// in the last column).
struct Tableau {
    int m = 0;       // constraints
    int total = 0;   // variable columns
    std::vector<std::vector<Rat>> t;  // (m+1) x (total+1)
    std::vector<int> basis;           // size m

    Rat& rhs(int i) { return t[i][total]; }
    Rat& obj(int j) { return t[m][j]; }

    void pivot(int row, int col) {
        Rat inv = t[row][col];
        for (int j = 0; j <= total; ++j) t[row][j] /= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            Rat factor = t[i][col];
            if (factor == 0) continue;
            for (int j = 0; j <= total; ++j) t[i][j] -= factor * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule over columns allowed by the predicate. Returns false on
    // unboundedness.
    template <typename Allowed>
    bool minimize(Allowed allowed) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < total; ++j)
                if (allowed(j) && obj(j) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rat best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_standard_lp(const std::vector<std::vector<Rat>>& A,
                             const std::vector<Rat>& b, const std::vector<Rat>& c) {
    int m = static_cast<int>(A.size());
    int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m)
        throw DimensionMismatch("b has " + std::to_string(b.size()) + " entries for " +
                                std::to_string(m) + " rows");
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("A row width differs from c");

    Tableau tab;
    tab.m = m;
    tab.total = n + m;  // structural + artificial
    tab.t.assign(m + 1, std::vector<Rat>(tab.total + 1, Rat(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -A[i][j] : A[i][j];
        tab.t[i][n + i] = 1;
        tab.rhs(i) = flip ? -b[i] : b[i];
        tab.basis[i] = n + i;
    }
    // Phase 1: minimize the sum of artificials. Canonical reduced costs:
    // obj[j] = -sum_i t[i][j] for structural columns, 0 for artificials.
    for (int j = 0; j <= tab.total; ++j) {
        Rat s(0);
        for (int i = 0; i < m; ++i) s += tab.t[i][j];
        tab.t[m][j] = (j >= n && j < tab.total) ? Rat(0) : -s;
    }
    // rhs of the objective row currently holds -(sum of b); phase-1 value
    // is its negation once optimal.
    if (!tab.minimize([](int) { return true; }))
        throw Error("phase-1 simplex reported unbounded; this cannot happen");
    LpSolution sol;
    if (tab.t[m][tab.total] != 0) {  // optimal phase-1 value = -rhs > 0
        sol.status = LpSolution::Infeasible;
        return sol;
    }
    // Drive any artificial still in the basis out of it, or detect the row
    // as redundant and leave it (the artificial stays at zero and is barred
    // from re-entering).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (int j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
    }
    // Phase 2 objective from c, priced out over the current basis.
    for (int j = 0; j <= tab.total; ++j) tab.t[m][j] = 0;
    for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        Rat factor = tab.t[m][tab.basis[i]];
        if (factor == 0) continue;
        for (int j = 0; j <= tab.total; ++j) tab.t[m][j] -= factor * tab.t[i][j];
    }
    if (!tab.minimize([n](int j) { return j < n; })) {
        sol.status = LpSolution::Unbounded;
        return sol;
    }
    sol.status = LpSolution::Optimal;
    sol.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
    sol.objective = -tab.t[m][tab.total];
    return sol;
}

}  // namespace xfc
