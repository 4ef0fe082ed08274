#include "xfc/nnrank.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "xfc/errors.hpp"

namespace xfc {

int exact_rank(const RatMatrix& m) {
    if (!m.fully_defined())
        throw Error("linear rank needs a fully defined matrix");
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Collapse duplicate rows and columns (same values and mask); the
// nonnegative rank is unchanged.
RatMatrix dedupe(const RatMatrix& m) {
    auto row_key = [&](std::size_t r) {
        std::string k;
        for (std::size_t c = 0; c < m.cols(); ++c)
            k += m.is_defined(r, c) ? rat_to_string(m.at(r, c)) + ";" : "NA;";
        return k;
    };
    std::map<std::string, std::size_t> seen_rows;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (seen_rows.emplace(row_key(r), r).second) rows.push_back(r);
    std::vector<std::size_t> all_cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) all_cols[c] = c;
    RatMatrix rowded = m.submatrix(rows, all_cols);

    auto col_key = [&](std::size_t c) {
        std::string k;
        for (std::size_t r = 0; r < rowded.rows(); ++r)
            k += rowded.is_defined(r, c) ? rat_to_string(rowded.at(r, c)) + ";" : "NA;";
        return k;
    };
    std::map<std::string, std::size_t> seen_cols;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < rowded.cols(); ++c)
        if (seen_cols.emplace(col_key(c), c).second) cols.push_back(c);
    std::vector<std::size_t> all_rows(rowded.rows());
    for (std::size_t r = 0; r < rowded.rows(); ++r) all_rows[r] = r;
    return rowded.submatrix(all_rows, cols);
}

bool all_defined_zero(const RatMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.is_defined(r, c) && m.at(r, c) != 0) return false;
    return true;
}

}  // namespace

RankInterval exact_nnegrk_small(const RatMatrix& m, const NnrOptions& opt) {
    if (std::min(m.rows(), m.cols()) > 6)
        throw InstanceTooLarge("exact_nnegrk_small needs min(m,n) <= 6");
    RankInterval out;
    if (all_defined_zero(m)) {
        out.lower = out.upper = 0;
        out.lower_method = out.upper_method = "zero matrix";
        return out;
    }

    RectangleCover rect = rectangle_cover_bound(m, opt.rect_budget);
    out.lower = rect.bound;
    out.lower_method = rect.exact ? "rectangle cover" : "rectangle cover (budget hit)";
    if (m.fully_defined()) {
        int lr = exact_rank(m);
        if (lr > out.lower) {
            out.lower = lr;
            out.lower_method = "linear rank";
        }
    }

    RatMatrix ded = dedupe(m);
    int trivial = static_cast<int>(std::min(ded.rows(), ded.cols()));
    RealMatrix real = to_real(ded);
    out.upper = trivial;
    out.upper_method = "trivial min(m,n) after collapsing duplicates";
    for (int r = std::max(out.lower, 1); r <= std::min(opt.rmax, trivial - 1); ++r) {
        NmfResult res = nmf_upper(real, r, opt.restarts, opt.iters, opt.seed);
        if (res.found) {
            out.upper = r;
            out.upper_method = "NMF fit at rank " + std::to_string(r);
            break;
        }
    }
    out.upper = std::min<int>(out.upper, static_cast<int>(std::min(m.rows(), m.cols())));
    if (out.upper < out.lower)
        throw IdentityViolation("rank bounds crossed; lower-bound or NMF bug");
    return out;
}

CorLbBound theory_corlb(int t) {
    if (t < 1) throw Error("corLB bound needs t >= 1");
    CorLbBound out;
    out.t = t;
    out.exponent = t * std::log2(1.5);
    out.value = std::pow(2.0, out.exponent);
    out.ceil_value = static_cast<long long>(std::ceil(out.value - 1e-12));
    return out;
}

double binary_entropy(double q) {
    if (q <= 0.0 || q >= 1.0) throw Error("binary entropy needs 0 < q < 1");
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

ShiftedUdisjBound theory_shifted_udisj(double n, double rho, double alpha, double beta) {
    if (rho < 0) throw Error("rho must be >= 0");
    if (alpha < 0 || alpha >= 1 || beta < 0 || beta >= 1)
        throw Error("need 0 <= alpha, beta < 1");
    if (n <= 0) throw Error("n must be positive");
    ShiftedUdisjBound out;
    out.entropy_quarter = binary_entropy(0.25);
    out.leading_exponent = (1.0 / (8.0 * (rho + 1.0)) - (alpha + beta) * out.entropy_quarter) * n;
    out.note = "lower-order O(n^{1-eps}) term omitted; k = n/4 + O(n^{1-eps})";
    return out;
}

}  // namespace xfc
