#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcakit {

// Dense real matrix, row-major. Dimensions are fixed at construction and
// strictly positive; entries from external sources are validated finite.
class Matrix {
public:
    // Zero-filled rows x cols matrix.
    Matrix(std::size_t rows, std::size_t cols);

    // Takes ownership of `entries` (row-major, size rows*cols). Throws
    // ShapeError on a size mismatch and ArgumentError on non-finite entries.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }

    std::span<const double> entries() const { return data_; }

    // Strided column read into a contiguous buffer.
    std::vector<double> column(std::size_t j) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

// Standard product; throws ShapeError naming both shapes when a.cols != b.rows.
// Accumulation over the inner index is sequential per output entry, so the
// result is deterministic and matches a naive triple loop bit for bit.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

double frobenius_norm(const Matrix& a);
double trace(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace pcakit
