#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace cauchydet {

/// Dense matrix over an exact field.
///
/// The public API is 1-based, matching the (i, l) indices of the formulas:
/// entry (i, l) with 1 <= i <= rows(), 1 <= l <= cols() lives at storage
/// offset (i - 1) * cols() + (l - 1). No other code touches the storage.
template <ExactField F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0L)) {}

    Matrix(std::initializer_list<std::initializer_list<F>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            m.at(i, i) = F(1L);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const F& at(std::size_t i, std::size_t l) const { return data_[offset(i, l)]; }
    F& at(std::size_t i, std::size_t l) { return data_[offset(i, l)]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t l = 1; l <= cols_; ++l)
                t.at(l, i) = at(i, l);
        return t;
    }

    /// Row-major nested serialization of each entry.
    std::vector<std::vector<std::string>> to_strings() const {
        std::vector<std::vector<std::string>> out(rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t l = 1; l <= cols_; ++l)
                out[i - 1].push_back(at(i, l).to_string());
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 1; i <= rows_; ++i) {
            s += i > 1 ? ", [" : "[";
            for (std::size_t l = 1; l <= cols_; ++l)
                s += (l > 1 ? ", " : "") + at(i, l).to_string();
            s += "]";
        }
        return s + "]";
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t offset(std::size_t i, std::size_t l) const {
        if (i < 1 || i > rows_ || l < 1 || l > cols_)
            throw DimensionMismatch("index (" + std::to_string(i) + "," + std::to_string(l) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
        return (i - 1) * cols_ + (l - 1);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& m) {
    return m.transpose();
}

template <ExactField F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<F> c(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t l = 1; l <= b.cols(); ++l) {
            F acc(0L);
            for (std::size_t j = 1; j <= a.cols(); ++j) {
                const F& x = a.at(i, j);
                const F& y = b.at(j, l);
                if (!x.is_zero() && !y.is_zero())
                    acc = acc + x * y;
            }
            c.at(i, l) = std::move(acc);
        }
    return c;
}

} // namespace cauchydet
