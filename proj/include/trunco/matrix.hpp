#pragma once

// Dense exact matrices over Q: row reduction, rank, kernel, linear solve.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trunco/rational.hpp"

namespace trunco {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const
    {
        for (const auto& x : data_) {
            if (x != 0) {
                return false;
            }
        }
        return true;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw ContractError("matrix product dimension mismatch");
        }
        RationalMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) != 0) {
                        out(i, j) += aik * b(k, j);
                    }
                }
            }
        }
        return out;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw ContractError("matrix difference dimension mismatch");
        }
        RationalMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            out.data_[i] = a.data_[i] - b.data_[i];
        }
        return out;
    }

    /// Appends the rows of `below`; column counts must agree (an empty matrix adopts them).
    void append_rows(const RationalMatrix& below)
    {
        if (rows_ == 0 && data_.empty()) {
            cols_ = below.cols_;
        }
        if (below.cols_ != cols_) {
            throw ContractError("row stacking with mismatched column counts");
        }
        data_.insert(data_.end(), below.data_.begin(), below.data_.end());
        rows_ += below.rows_;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0) {
                ++sel;
            }
            if (sel == rows_) {
                continue;
            }
            if (sel != row) {
                for (std::size_t c = 0; c < cols_; ++c) {
                    std::swap((*this)(sel, c), (*this)(row, c));
                }
            }
            const Rational inv = 1 / (*this)(row, col);
            for (std::size_t c = col; c < cols_; ++c) {
                (*this)(row, c) *= inv;
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || (*this)(r, col) == 0) {
                    continue;
                }
                const Rational f = (*this)(r, col);
                for (std::size_t c = col; c < cols_; ++c) {
                    if ((*this)(row, c) != 0) {
                        (*this)(r, c) -= f * (*this)(row, c);
                    }
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        RationalMatrix tmp = *this;
        return tmp.rref().size();
    }

    /// Row basis of the row space (the nonzero rows of the RREF).
    RationalMatrix row_basis() const
    {
        RationalMatrix tmp = *this;
        const auto pivots = tmp.rref();
        RationalMatrix out(pivots.size(), cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(r, c) = tmp(r, c);
            }
        }
        return out;
    }

    /// Columns of the result span the kernel {x : A x = 0}.
    RationalMatrix kernel() const
    {
        RationalMatrix tmp = *this;
        const auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) {
            is_pivot[p] = true;
        }
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!is_pivot[c]) {
                free_cols.push_back(c);
            }
        }
        RationalMatrix out(cols_, free_cols.size());
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            const std::size_t f = free_cols[k];
            out(f, k) = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                out(pivots[r], k) = -tmp(r, f);
            }
        }
        return out;
    }

    /// Solves A x = b; nullopt when inconsistent. Free variables are set to zero.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const
    {
        if (b.size() != rows_) {
            throw ContractError("right-hand side has wrong length");
        }
        RationalMatrix aug(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                aug(r, c) = (*this)(r, c);
            }
            aug(r, cols_) = b[r];
        }
        const auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) {
            return std::nullopt;
        }
        std::vector<Rational> x(cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            x[pivots[r]] = aug(r, cols_);
        }
        return x;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace trunco
