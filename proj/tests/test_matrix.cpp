#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ginvlab/matrix.hpp"

using namespace ginvlab;

namespace {

// Random integer matrix of a given rank, built as a product of factors.
Matrix random_rank(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t r) {
    for (;;) {
        Matrix f(m, r), g(r, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < r; ++k) f(i, k) = static_cast<long>(rng() % 7) - 3;
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < n; ++j) g(k, j) = static_cast<long>(rng() % 7) - 3;
        Matrix a = f * g;
        if (rank(a) == r) return a;
    }
}

// Brute-force rank oracle for 2x2: determinant and entries.
std::size_t rank2x2(const Matrix& a) {
    if ((a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) != 0) return 2;
    return a.is_zero() ? 0 : 1;
}

}  // namespace

TEST_CASE("products and sums") {
    Matrix a{{1, 2}, {3, 4}, {5, 6}};
    CHECK(Matrix::identity(3) * a == a);
    CHECK(a * Matrix::zero(2, 4) == Matrix::zero(3, 4));
    CHECK((Matrix{{1, 1}, {1, 1}} * Matrix{{1}, {-1}}) == Matrix::zero(2, 1));
    CHECK(a + a == scale(2, a));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a * a, DimensionMismatch);
    CHECK_THROWS_AS(a + Matrix::zero(2, 3), DimensionMismatch);
    // empty inner dimension gives a zero product of the outer shape
    CHECK(Matrix::zero(3, 0) * Matrix::zero(0, 2) == Matrix::zero(3, 2));
}

TEST_CASE("ctranspose") {
    Matrix s{{1, 2}, {2, 5}};
    CHECK(ctranspose(s) == s);
    Matrix i1{{GaussianRational::parse("i")}};
    CHECK(ctranspose(i1) == Matrix{{GaussianRational::parse("-i")}});
    Matrix c{{GaussianRational::parse("1+2i"), 3}, {0, GaussianRational::parse("1/2-i")}, {7, 8}};
    CHECK(ctranspose(ctranspose(c)) == c);
    CHECK(ctranspose(c)(1, 0) == 3);
}

TEST_CASE("rank") {
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix::zero(3, 5)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(Matrix::zero(0, 3)) == 0);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Matrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = static_cast<long>(rng() % 3) - 1;
        CHECK(rank(a) == rank2x2(a));
    }
    for (int t = 0; t < 100; ++t) {
        std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5, r = rng() % (std::min(m, n) + 1);
        Matrix a = random_rank(rng, m, n, r);
        CHECK(rank(ctranspose(a)) == r);
        Matrix b = random_rank(rng, m, 1 + rng() % 3, 1);
        CHECK(rank(hblock({a, b})) >= std::max(rank(a), rank(b)));
        // swap the first and last rows
        Matrix p = a;
        for (std::size_t j = 0; j < n; ++j) std::swap(p(0, j), p(m - 1, j));
        CHECK(rank(p) == r);
    }
}

TEST_CASE("range_subset") {
    Matrix c{{1, 0}, {0, 1}, {1, 1}};
    CHECK(range_subset(Matrix::zero(3, 2), c));
    CHECK(range_subset(c, c));
    CHECK_FALSE(range_subset(Matrix{{0}, {1}}, Matrix{{1}, {0}}));
    CHECK(range_subset(Matrix{{2}, {3}, {5}}, c));
    CHECK_FALSE(range_subset(Matrix{{2}, {3}, {4}}, c));
    CHECK_THROWS_AS(range_subset(Matrix::zero(2, 1), c), DimensionMismatch);
    CHECK(range_equal(c, c * Matrix{{1, 1}, {0, 1}}));
}

TEST_CASE("blocks") {
    Matrix a{{1, 2}, {3, 4}};
    CHECK(hblock({a}) == a);
    Matrix one{{1}}, zero1{{0}};
    CHECK(block2x2(one, zero1, zero1, one) == Matrix::identity(2));
    CHECK(vblock({Matrix{{1}}, Matrix{{2}}}) == Matrix{{1}, {2}});
    CHECK(hblock({a, Matrix::zero(2, 0)}) == a);
    CHECK_THROWS_AS(hblock({a, Matrix::zero(3, 1)}), DimensionMismatch);
    CHECK_THROWS_AS(vblock({a, Matrix::zero(1, 3)}), DimensionMismatch);
}

TEST_CASE("full rank factorization") {
    auto [f, g] = full_rank_factorization(Matrix::identity(2));
    CHECK(f == Matrix::identity(2));
    CHECK(g == Matrix::identity(2));
    auto [f0, g0] = full_rank_factorization(Matrix::zero(2, 3));
    CHECK(f0.rows() == 2);
    CHECK(f0.cols() == 0);
    CHECK(g0.rows() == 0);
    CHECK(g0.cols() == 3);
    CHECK(f0 * g0 == Matrix::zero(2, 3));
    auto [f1, g1] = full_rank_factorization(Matrix{{1, 2}, {2, 4}});
    CHECK(f1 == Matrix{{1}, {2}});
    CHECK(g1 == Matrix{{1, 2}});

    std::mt19937_64 rng(17);
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 40; ++t) {
                std::size_t r = rng() % (std::min(m, n) + 1);
                Matrix a = random_rank(rng, m, n, r);
                auto [ff, gg] = full_rank_factorization(a);
                CHECK(ff * gg == a);
                CHECK(ff.cols() == r);
                CHECK(rank(ff) == r);
                CHECK(rank(gg) == r);
            }
        }
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(inverse(Matrix{{2}}) == Matrix{{GaussianRational(1, 2)}});
    CHECK(inverse(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
    CHECK_THROWS_AS(inverse(Matrix::zero(2, 3)), DimensionMismatch);
    Matrix c{{GaussianRational::parse("1+i"), 2}, {GaussianRational::parse("1/3"), GaussianRational::parse("-i")}};
    Matrix ci = inverse(c);
    CHECK(c * ci == Matrix::identity(2));
    CHECK(ci * c == Matrix::identity(2));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 5;
        Matrix a = random_rank(rng, n, n, n);
        Matrix ai = inverse(a);
        CHECK(a * ai == Matrix::identity(n));
        CHECK(ai * a == Matrix::identity(n));
    }
}

TEST_CASE("solve") {
    Matrix a{{1, 2}, {2, 4}};
    auto x = solve(a, Matrix{{3}, {6}});
    REQUIRE(x);
    CHECK(a * *x == Matrix{{3}, {6}});
    CHECK_FALSE(solve(a, Matrix{{3}, {7}}));
}
