#include "ginvlab/matrix.hpp"

#include <sstream>

namespace ginvlab {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

[[noreturn]] void mismatch(const char* op, const Matrix& a, const Matrix& b) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) mismatch("matmul", a, b);
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(aik, b(k, j));
        }
    }
    return out;
}

Matrix madd(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) mismatch("madd", a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix msub(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) mismatch("msub", a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix scale(const GaussianRational& lambda, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= lambda;
    return out;
}

Matrix ctranspose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
    return out;
}

Matrix hblock(std::span<const Matrix> parts) {
    if (parts.empty()) return {};
    std::size_t rows = parts.front().rows(), cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) mismatch("hblock", parts.front(), p);
        cols += p.cols();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) out(i, off + j) = p(i, j);
        off += p.cols();
    }
    return out;
}

Matrix vblock(std::span<const Matrix> parts) {
    if (parts.empty()) return {};
    std::size_t cols = parts.front().cols(), rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) mismatch("vblock", parts.front(), p);
        rows += p.rows();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(off + i, j) = p(i, j);
        off += p.rows();
    }
    return out;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    if (a.rows() != b.rows()) mismatch("block2x2 top row", a, b);
    if (c.rows() != d.rows()) mismatch("block2x2 bottom row", c, d);
    if (a.cols() != c.cols()) mismatch("block2x2 left column", a, c);
    if (b.cols() != d.cols()) mismatch("block2x2 right column", b, d);
    return vblock({hblock({a, b}), hblock({c, d})});
}

Echelon rref(Matrix a) {
    Echelon out;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(row, j));
        GaussianRational inv_p = a(row, col).inv();
        for (std::size_t j = col; j < n; ++j) a(row, j) *= inv_p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            GaussianRational f = a(i, col);
            for (std::size_t j = col; j < n; ++j) {
                if (a(row, j).is_zero()) continue;
                a(i, j) -= f * a(row, j);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const Matrix& a) {
    // Forward elimination only; the rank does not need the reduced form.
    Matrix w = a;
    const std::size_t m = w.rows(), n = w.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = col; j < n; ++j) std::swap(w(piv, j), w(row, j));
        GaussianRational inv_p = w(row, col).inv();
        for (std::size_t i = row + 1; i < m; ++i) {
            if (w(i, col).is_zero()) continue;
            GaussianRational f = w(i, col) * inv_p;
            for (std::size_t j = col + 1; j < n; ++j) {
                if (w(row, j).is_zero()) continue;
                w(i, j) -= f * w(row, j);
            }
            w(i, col) = 0;
        }
        ++row;
    }
    return row;
}

bool range_subset(const Matrix& d, const Matrix& c) {
    if (d.rows() != c.rows()) mismatch("range_subset", d, c);
    if (d.is_zero()) return true;
    return rank(hblock({c, d})) == rank(c);
}

bool range_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) mismatch("range_equal", a, b);
    std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(hblock({a, b})) == ra;
}

std::pair<Matrix, Matrix> full_rank_factorization(const Matrix& a) {
    Echelon e = rref(a);
    const std::size_t r = e.pivots.size();
    Matrix f(a.rows(), r), g(r, a.cols());
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, e.pivots[k]);
        for (std::size_t j = 0; j < a.cols(); ++j) g(k, j) = e.reduced(k, j);
    }
    return {std::move(f), std::move(g)};
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse: " + shape(a) + " is not square");
    const std::size_t n = a.rows();
    Echelon e = rref(hblock({a, Matrix::identity(n)}));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw SingularMatrix("inverse: matrix of order " + std::to_string(n) + " is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) mismatch("solve", a, b);
    const std::size_t n = a.cols();
    Echelon e = rref(hblock({a, b}));
    for (std::size_t p : e.pivots)
        if (p >= n) return std::nullopt;
    Matrix x(n, b.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, n + j);
    return x;
}

}  // namespace ginvlab
