#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xfc/errors.hpp"
#include "xfc/rational.hpp"

namespace xfc {

/// Dense matrix with labeled rows/columns and an explicit defined-entry
/// mask. Undefined entries are never sentinel values; consumers must
/// consult the mask. T is Rat (exact mode) or double (float mode).
template <typename T>
class PartialMatrix {
public:
    PartialMatrix() = default;

    /// All entries defined and zero-initialized.
    PartialMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                  bool defined = true)
        : row_labels_(std::move(row_labels)),
          col_labels_(std::move(col_labels)),
          values_(row_labels_.size() * col_labels_.size(), T(0)),
          defined_(row_labels_.size() * col_labels_.size(), defined ? 1 : 0) {}

    static PartialMatrix zeros(std::size_t rows, std::size_t cols) {
        return PartialMatrix(numbered_labels("r", rows), numbered_labels("c", cols));
    }

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    bool is_defined(std::size_t r, std::size_t c) const { return defined_[idx(r, c)] != 0; }

    const T& at(std::size_t r, std::size_t c) const {
        if (!is_defined(r, c))
            throw Error("entry (" + std::to_string(r) + "," + std::to_string(c) +
                        ") is undefined");
        return values_[idx(r, c)];
    }

    void set(std::size_t r, std::size_t c, T value) {
        values_[idx(r, c)] = std::move(value);
        defined_[idx(r, c)] = 1;
    }

    void set_undefined(std::size_t r, std::size_t c) {
        values_[idx(r, c)] = T(0);
        defined_[idx(r, c)] = 0;
    }

    std::size_t defined_count() const {
        std::size_t n = 0;
        for (auto d : defined_) n += d;
        return n;
    }

    bool fully_defined() const { return defined_count() == values_.size(); }

    /// Adds rho to every defined entry. Throws if any result is negative.
    PartialMatrix shifted(const T& rho) const {
        PartialMatrix out = *this;
        for (std::size_t i = 0; i < out.values_.size(); ++i)
            if (out.defined_[i]) {
                out.values_[i] += rho;
                if (out.values_[i] < T(0))
                    throw Error("shift produces a negative entry");
            }
        return out;
    }

    /// Adds u[r] to every defined entry of row r. u must be nonnegative
    /// and indexed by rows.
    PartialMatrix rank1_shifted(const std::vector<T>& u) const {
        if (u.size() != rows())
            throw DimensionMismatch("rank-1 shift vector has " + std::to_string(u.size()) +
                                    " entries for " + std::to_string(rows()) + " rows");
        for (const T& x : u)
            if (x < T(0)) throw Error("rank-1 shift vector must be nonnegative");
        PartialMatrix out = *this;
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols(); ++c)
                if (out.defined_[out.idx(r, c)]) out.values_[out.idx(r, c)] += u[r];
        return out;
    }

    PartialMatrix submatrix(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
        std::vector<std::string> rl, cl;
        for (auto r : row_idx) rl.push_back(row_labels_.at(r));
        for (auto c : col_idx) cl.push_back(col_labels_.at(c));
        PartialMatrix out(std::move(rl), std::move(cl));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                if (is_defined(row_idx[i], col_idx[j]))
                    out.set(i, j, at(row_idx[i], col_idx[j]));
                else
                    out.set_undefined(i, j);
            }
        return out;
    }

    bool operator==(const PartialMatrix& other) const {
        return row_labels_ == other.row_labels_ && col_labels_ == other.col_labels_ &&
               values_ == other.values_ && defined_ == other.defined_;
    }

private:
    static std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
        std::vector<std::string> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
        return out;
    }

    std::size_t idx(std::size_t r, std::size_t c) const {
        if (r >= rows() || c >= cols())
            throw DimensionMismatch("matrix index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of range");
        return r * cols() + c;
    }

    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<T> values_;
    std::vector<std::uint8_t> defined_;
};

using RatMatrix = PartialMatrix<Rat>;
using RealMatrix = PartialMatrix<double>;

RealMatrix to_real(const RatMatrix& m);

/// CSV: first header cell empty, then column labels; each data row starts
/// with its row label. Undefined entries serialize as the literal NA.
std::string matrix_to_csv(const RatMatrix& m);
std::string matrix_to_csv(const RealMatrix& m);
RatMatrix rat_matrix_from_csv(const std::string& text);
RealMatrix real_matrix_from_csv(const std::string& text);

/// JSON object {"rows": [...], "cols": [...], "values": [[...]], "mask": [[...]]}.
std::string matrix_to_json(const RatMatrix& m);
std::string matrix_to_json(const RealMatrix& m);
RatMatrix rat_matrix_from_json(const std::string& text);

}  // namespace xfc
