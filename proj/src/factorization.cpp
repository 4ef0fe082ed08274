#include "xfc/factorization.hpp"

#include <cmath>

namespace xfc {

namespace {

template <typename T, typename Abs>
VerifyResult verify_impl(const PartialMatrix<T>& m, const Factorization<T>& f, const T& tol,
                         Abs abs_fn) {
    f.validate();
    if (f.rows() != m.rows() || (f.rank() > 0 && f.cols() != m.cols()))
        throw DimensionMismatch("factorization shape does not match the matrix");
    VerifyResult res;
    res.ok = true;
    T worst(0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.is_defined(r, c)) continue;
            T err = abs_fn(m.at(r, c) - f.product_at(r, c));
            if (err > worst) worst = err;
            if (err > tol) res.ok = false;
        }
    if constexpr (std::is_same_v<T, double>)
        res.max_residual = worst;
    else
        res.max_residual = to_double(worst);
    return res;
}

template <typename T>
std::pair<std::string, std::string> csv_pair_impl(const Factorization<T>& f) {
    PartialMatrix<T> left = PartialMatrix<T>::zeros(f.rows(), f.rank());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < f.rank(); ++k) left.set(i, k, f.left[i][k]);
    PartialMatrix<T> right = PartialMatrix<T>::zeros(f.rank(), f.cols());
    for (std::size_t k = 0; k < f.rank(); ++k)
        for (std::size_t j = 0; j < f.cols(); ++j) right.set(k, j, f.right[k][j]);
    return {matrix_to_csv(left), matrix_to_csv(right)};
}

template <typename T, typename M>
Factorization<T> from_csv_pair_impl(const M& left, const M& right) {
    if (left.cols() != right.rows())
        throw DimensionMismatch("left width differs from right height");
    Factorization<T> f;
    f.left.assign(left.rows(), std::vector<T>(left.cols()));
    for (std::size_t i = 0; i < left.rows(); ++i)
        for (std::size_t k = 0; k < left.cols(); ++k) f.left[i][k] = left.at(i, k);
    f.right.assign(right.rows(), std::vector<T>(right.cols()));
    for (std::size_t k = 0; k < right.rows(); ++k)
        for (std::size_t j = 0; j < right.cols(); ++j) f.right[k][j] = right.at(k, j);
    f.validate();
    return f;
}

}  // namespace

VerifyResult verify_factorization(const RatMatrix& m, const RatFactorization& f,
                                  const Rat& tol) {
    return verify_impl(m, f, tol, [](const Rat& v) { return v < 0 ? Rat(-v) : v; });
}

VerifyResult verify_factorization(const RealMatrix& m, const RealFactorization& f,
                                  double tol) {
    return verify_impl(m, f, tol, [](double v) { return std::fabs(v); });
}

RealFactorization to_real(const RatFactorization& f) {
    RealFactorization out;
    out.left.assign(f.rows(), {});
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (const Rat& v : f.left[i]) out.left[i].push_back(to_double(v));
    out.right.assign(f.rank(), {});
    for (std::size_t k = 0; k < f.rank(); ++k)
        for (const Rat& v : f.right[k]) out.right[k].push_back(to_double(v));
    return out;
}

std::pair<std::string, std::string> factorization_to_csv_pair(const RatFactorization& f) {
    return csv_pair_impl(f);
}
std::pair<std::string, std::string> factorization_to_csv_pair(const RealFactorization& f) {
    return csv_pair_impl(f);
}

RatFactorization rat_factorization_from_csv_pair(const std::string& left,
                                                 const std::string& right) {
    return from_csv_pair_impl<Rat>(rat_matrix_from_csv(left), rat_matrix_from_csv(right));
}

RealFactorization real_factorization_from_csv_pair(const std::string& left,
                                                   const std::string& right) {
    return from_csv_pair_impl<double>(real_matrix_from_csv(left),
                                      real_matrix_from_csv(right));
}

}  // namespace xfc
