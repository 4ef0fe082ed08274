#pragma once

#include <cstdint>
#include <optional>

#include "xfc/factorization.hpp"
#include "xfc/matrix.hpp"

namespace xfc {

/// Residual threshold below which an NMF run counts as an exact fit.
constexpr double kNmfSuccessTol = 1e-6;
/// Multiplicative-update floor; keeps factors away from absorbing zeros.
constexpr double kNmfFloor = 1e-12;

struct NmfResult {
    bool found = false;               // best residual <= kNmfSuccessTol
    RealFactorization factorization;  // best over restarts
    double max_residual = 0.0;        // over defined entries
    int restart_index = -1;
};

/// Masked multiplicative-update NMF: minimizes squared error over defined
/// entries only; undefined entries are free. Deterministic for fixed
/// (matrix, r, restarts, iters, seed): restarts draw from per-restart
/// derived streams and the best result wins, ties to the lowest restart
/// index.
NmfResult nmf_upper(const RealMatrix& m, int r, int restarts, int iters,
                    std::uint64_t seed);

}  // namespace xfc
