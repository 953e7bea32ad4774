#pragma once

#include <cstddef>
#include <vector>

#include "ga/error.hpp"
#include "ga/scalar.hpp"

namespace ga {

/// Small dense matrix, just enough for Gram matrices and basis changes.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, S fill = S(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw Error("matrix dimensions do not match");
        Matrix m(rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& a = at(r, k);
                if (scalar_is_zero(a)) continue;
                for (std::size_t c = 0; c < other.cols_; ++c)
                    m.at(r, c) += a * other.at(k, c);
            }
        return m;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (!(at(r, c) == at(c, r))) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

} // namespace ga
