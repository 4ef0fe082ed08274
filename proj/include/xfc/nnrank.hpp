#pragma once

#include <cstdint>
#include <string>

#include "xfc/matrix.hpp"
#include "xfc/nmf.hpp"
#include "xfc/rectangle.hpp"

namespace xfc {

/// Two-sided bound on the nonnegative rank. The rank is certified only
/// when lower == upper; otherwise the interval is reported as such.
struct RankInterval {
    int lower = 0;
    int upper = 0;
    std::string lower_method;
    std::string upper_method;
    bool certified() const { return lower == upper; }
};

/// Linear rank over the rationals; requires a fully defined matrix.
int exact_rank(const RatMatrix& m);

struct NnrOptions {
    int rmax = 6;
    int restarts = 8;
    int iters = 20000;
    std::uint64_t seed = 1;
    std::uint64_t rect_budget = 1u << 22;
};

/// Bounds rank+ for small matrices (needs min(m,n) <= 6): lower is the
/// larger of the rectangle-cover bound and, when the matrix is fully
/// defined, the linear rank; upper is the smallest r with an exact NMF fit
/// (identical rows/columns are collapsed first), falling back to min(m,n).
RankInterval exact_nnegrk_small(const RatMatrix& m, const NnrOptions& opt = {});

struct CorLbBound {
    int t = 0;
    double exponent = 0.0;      // t * log2(3/2)
    double value = 0.0;         // 2^exponent
    long long ceil_value = 0;   // smallest integer rank bound
};

/// Lower bound on rank+(UDISJ(t)): 2^{t log2(3/2)}.
CorLbBound theory_corlb(int t);

struct ShiftedUdisjBound {
    double leading_exponent = 0.0;  // (1/(8(rho+1)) - (alpha+beta) H(1/4)) * n
    double entropy_quarter = 0.0;   // H(1/4)
    std::string note;               // the omitted lower-order term
};

/// Leading exponent of the rank bound for rho-shifted UDISJ(n, k) with an
/// alpha-fraction of rows and beta-fraction of columns deleted, at
/// k = n/4 + O(n^{1-eps}). The O(n^{1-eps}) term is omitted and flagged.
ShiftedUdisjBound theory_shifted_udisj(double n, double rho, double alpha, double beta);

double binary_entropy(double q);

}  // namespace xfc
