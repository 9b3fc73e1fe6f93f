#include "ginvlab/random.hpp"

#include <array>

namespace ginvlab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(base);
    for (auto p : path) s = mix64(s ^ mix64(p + 0x632be59bd9b4e019ULL));
    return s;
}

GaussianRational Rng::small_rational() {
    long p = uniform(-9, 9);
    long q = uniform(1, 3);
    return {p, q};
}

GaussianRational Rng::entry(bool complex) {
    if (!complex) return small_rational();
    return {small_rational().re(), small_rational().re()};
}

Matrix Rng::matrix(std::size_t m, std::size_t n, bool complex) {
    Matrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = entry(complex);
    return out;
}

Matrix Rng::matrix_of_rank(std::size_t m, std::size_t n, std::size_t r, bool complex) {
    if (r > std::min(m, n)) throw DimensionMismatch("matrix_of_rank: rank exceeds dimensions");
    if (r == 0) return Matrix::zero(m, n);
    for (;;) {
        Matrix a = matrix(m, r, complex) * matrix(r, n, complex);
        if (rank(a) == r) return a;
    }
}

Matrix Rng::nonsingular(std::size_t n, bool complex) {
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = entry(complex);
            u(j, i) = entry(complex);
        }
    }
    return l * u;
}

Matrix Rng::unitary(std::size_t n, bool complex) {
    static constexpr std::array<std::array<long, 3>, 4> triples{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}}};
    Matrix q = Matrix::identity(n);
    if (n >= 2) {
        for (std::size_t step = 0; step < 2 * n; ++step) {
            auto t = triples[static_cast<std::size_t>(uniform(0, static_cast<long>(triples.size()) - 1))];
            GaussianRational c(t[0], t[2]), s(t[1], t[2]);
            if (uniform(0, 1)) std::swap(c, s);
            if (uniform(0, 1)) s = -s;
            std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            Matrix g = Matrix::identity(n);
            g(i, i) = c;
            g(j, j) = c;
            g(i, j) = -s;
            g(j, i) = s;
            q = g * q;
        }
    }
    if (complex) {
        Matrix d = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto t = triples[static_cast<std::size_t>(uniform(0, static_cast<long>(triples.size()) - 1))];
            d(i, i) = GaussianRational(mpq_class(t[0], t[2]), mpq_class(uniform(0, 1) ? t[1] : -t[1], t[2]));
        }
        q = d * q;
    }
    return q;
}

Matrix Rng::idempotent(std::size_t n, std::size_t r) {
    Matrix x = nonsingular(n);
    // Shuffle the rows so the kept block is not always the leading one.
    for (std::size_t i = n; i > 1; --i) {
        std::size_t k = static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1));
        for (std::size_t j = 0; j < n; ++j) std::swap(x(i - 1, j), x(k, j));
    }
    Matrix d = Matrix::zero(n, n);
    for (std::size_t i = 0; i < r; ++i) d(i, i) = 1;
    return x * d * inverse(x);
}

}  // namespace ginvlab
