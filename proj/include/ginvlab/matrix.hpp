#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ginvlab/exactnum.hpp"

namespace ginvlab {

/// Dense row-major matrix over the Gaussian rationals.
///
/// Zero-row and zero-column matrices are valid values: block assembly and
/// products treat them like any other shape.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_zero() const;

    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const GaussianRational> entries() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix madd(const Matrix& a, const Matrix& b);
Matrix msub(const Matrix& a, const Matrix& b);
Matrix scale(const GaussianRational& lambda, const Matrix& a);
Matrix ctranspose(const Matrix& a);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return madd(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return msub(a, b); }
inline Matrix operator*(const GaussianRational& s, const Matrix& a) { return scale(s, a); }

/// Shorthand for ctranspose, reads like A^* at call sites.
inline Matrix adj(const Matrix& a) { return ctranspose(a); }

Matrix hblock(std::span<const Matrix> parts);
Matrix vblock(std::span<const Matrix> parts);
inline Matrix hblock(std::initializer_list<Matrix> parts) { return hblock(std::span<const Matrix>(parts.begin(), parts.size())); }
inline Matrix vblock(std::initializer_list<Matrix> parts) { return vblock(std::span<const Matrix>(parts.begin(), parts.size())); }
/// [[a, b], [c, d]]
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Reduced row echelon form plus the pivot columns, pivoting on the first
/// nonzero entry found scanning each column top to bottom, columns left to right.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon rref(Matrix a);

std::size_t rank(const Matrix& a);

/// R(d) is a subset of R(c), decided as rank([c, d]) == rank(c).
bool range_subset(const Matrix& d, const Matrix& c);
/// R(a) == R(b).
bool range_equal(const Matrix& a, const Matrix& b);

/// a = f * g with f full column rank, g full row rank, inner size rank(a).
/// f holds the pivot columns of a, g the nonzero rows of rref(a).
std::pair<Matrix, Matrix> full_rank_factorization(const Matrix& a);

/// Exact inverse; throws SingularMatrix or DimensionMismatch.
Matrix inverse(const Matrix& a);

/// One solution x of a * x = b (b may have several columns), or nullopt
/// when the system is inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace ginvlab
