#include "xfc/nmf.hpp"

#include <cmath>

#include "xfc/errors.hpp"
#include "xfc/rng.hpp"

namespace xfc {

namespace {

double masked_max_residual(const RealMatrix& m, const std::vector<double>& w,
                           const std::vector<double>& h, int rank) {
    std::size_t rows = m.rows(), cols = m.cols();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!m.is_defined(i, j)) continue;
            double acc = 0.0;
            for (int k = 0; k < rank; ++k) acc += w[i * rank + k] * h[k * cols + j];
            worst = std::max(worst, std::fabs(m.at(i, j) - acc));
        }
    return worst;
}

}  // namespace

NmfResult nmf_upper(const RealMatrix& m, int r, int restarts, int iters,
                    std::uint64_t seed) {
    if (r < 1) throw Error("NMF rank must be >= 1");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.is_defined(i, j) && m.at(i, j) < 0)
                throw Error("NMF input must be entrywise nonnegative");

    std::size_t rows = m.rows(), cols = m.cols();
    double scale = 1.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m.is_defined(i, j)) scale = std::max(scale, m.at(i, j));
    // Multiplicative updates approach zero entries only harmonically, so
    // factor entries that have decayed to noise level are snapped to exact
    // zero at checkpoints (zeros are absorbing and legal once there). A bad
    // snap can only fail the residual check, never fake a success.
    const int kSnapEvery = 250;
    const double kSnapTol = 1e-3 * scale;

    CounterRng master(seed);
    NmfResult best;
    best.max_residual = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < restarts; ++restart) {
        CounterRng rng = master.stream(restart);
        std::vector<double> w(rows * r), h(static_cast<std::size_t>(r) * cols);
        std::uint64_t ctr = 0;
        for (auto& x : w) x = rng.uniform_open01(ctr++);
        for (auto& x : h) x = rng.uniform_open01(ctr++);

        // masked multiplicative updates for squared error
        std::vector<double> num_w(rows * r), den_w(rows * r);
        std::vector<double> num_h(h.size()), den_h(h.size());
        for (int it = 0; it < iters; ++it) {
            // W update: W *= ((B∘V) H^T) / ((B∘(WH)) H^T)
            std::fill(num_w.begin(), num_w.end(), 0.0);
            std::fill(den_w.begin(), den_w.end(), 0.0);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    if (!m.is_defined(i, j)) continue;
                    double acc = 0.0;
                    for (int k = 0; k < r; ++k) acc += w[i * r + k] * h[k * cols + j];
                    double v = m.at(i, j);
                    for (int k = 0; k < r; ++k) {
                        num_w[i * r + k] += v * h[k * cols + j];
                        den_w[i * r + k] += acc * h[k * cols + j];
                    }
                }
            for (std::size_t x = 0; x < w.size(); ++x)
                w[x] = std::max(w[x] * num_w[x] / std::max(den_w[x], kNmfFloor), kNmfFloor);

            // H update: H *= (W^T (B∘V)) / (W^T (B∘(WH)))
            std::fill(num_h.begin(), num_h.end(), 0.0);
            std::fill(den_h.begin(), den_h.end(), 0.0);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    if (!m.is_defined(i, j)) continue;
                    double acc = 0.0;
                    for (int k = 0; k < r; ++k) acc += w[i * r + k] * h[k * cols + j];
                    double v = m.at(i, j);
                    for (int k = 0; k < r; ++k) {
                        num_h[k * cols + j] += w[i * r + k] * v;
                        den_h[k * cols + j] += w[i * r + k] * acc;
                    }
                }
            for (std::size_t x = 0; x < h.size(); ++x)
                h[x] = std::max(h[x] * num_h[x] / std::max(den_h[x], kNmfFloor), kNmfFloor);

            if ((it + 1) % kSnapEvery == 0) {
                for (auto& x : w)
                    if (x <= kSnapTol) x = 0.0;
                for (auto& x : h)
                    if (x <= kSnapTol) x = 0.0;
                if (masked_max_residual(m, w, h, r) <= kNmfSuccessTol) break;
            }
        }

        double res = masked_max_residual(m, w, h, r);
        if (res < best.max_residual) {
            best.max_residual = res;
            best.restart_index = restart;
            best.factorization.left.assign(rows, std::vector<double>(r));
            best.factorization.right.assign(r, std::vector<double>(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (int k = 0; k < r; ++k) best.factorization.left[i][k] = w[i * r + k];
            for (int k = 0; k < r; ++k)
                for (std::size_t j = 0; j < cols; ++j)
                    best.factorization.right[k][j] = h[k * cols + j];
        }
    }
    best.found = best.max_residual <= kNmfSuccessTol;
    return best;
}

}  // namespace xfc
