#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xfc/matrix.hpp"
#include "xfc/rational.hpp"

namespace xfc {

/// Nonnegative factorization M = left * right with left m x r and
/// right r x n, both entrywise >= 0.
template <typename T>
struct Factorization {
    std::vector<std::vector<T>> left;
    std::vector<std::vector<T>> right;

    std::size_t rank() const { return right.size(); }
    std::size_t rows() const { return left.size(); }
    std::size_t cols() const { return right.empty() ? 0 : right[0].size(); }

    void validate() const {
        for (const auto& row : left) {
            if (row.size() != rank())
                throw DimensionMismatch("left factor width differs from rank");
            for (const T& v : row)
                if (v < T(0)) throw Error("left factor has a negative entry");
        }
        for (const auto& row : right) {
            if (row.size() != cols())
                throw DimensionMismatch("right factor has ragged rows");
            for (const T& v : row)
                if (v < T(0)) throw Error("right factor has a negative entry");
        }
    }

    T product_at(std::size_t r, std::size_t c) const {
        T acc(0);
        for (std::size_t k = 0; k < rank(); ++k) acc += left[r][k] * right[k][c];
        return acc;
    }
};

using RatFactorization = Factorization<Rat>;
using RealFactorization = Factorization<double>;

struct VerifyResult {
    bool ok = false;
    double max_residual = 0.0;  // over defined entries
};

/// Compares M against left*right on defined entries only. Exact mode uses
/// tol = 0.
VerifyResult verify_factorization(const RatMatrix& m, const RatFactorization& f,
                                  const Rat& tol = Rat(0));
VerifyResult verify_factorization(const RealMatrix& m, const RealFactorization& f,
                                  double tol);

RealFactorization to_real(const RatFactorization& f);

/// Paired CSV serialization (left, right).
std::pair<std::string, std::string> factorization_to_csv_pair(const RatFactorization& f);
std::pair<std::string, std::string> factorization_to_csv_pair(const RealFactorization& f);
RatFactorization rat_factorization_from_csv_pair(const std::string& left,
                                                 const std::string& right);
RealFactorization real_factorization_from_csv_pair(const std::string& left,
                                                   const std::string& right);

}  // namespace xfc
