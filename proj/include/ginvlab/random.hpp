#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "ginvlab/matrix.hpp"

namespace ginvlab {

/// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Deterministic source of small exact scalars and test matrices.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform in [lo, hi]. Uses a plain modulo so results are identical across
    /// standard libraries (the distributions in <random> are not).
    long uniform(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// p/q with p in [-9, 9] and q in {1, 2, 3}.
    GaussianRational small_rational();
    /// Either a small rational or, when complex is set, a small Gaussian rational.
    GaussianRational entry(bool complex);

    Matrix matrix(std::size_t m, std::size_t n, bool complex = false);
    /// m x n matrix of rank exactly r, as a product of m x r and r x n factors.
    Matrix matrix_of_rank(std::size_t m, std::size_t n, std::size_t r, bool complex = false);
    /// (I + L)(I + U) with strictly triangular L, U: always invertible.
    Matrix nonsingular(std::size_t n, bool complex = false);
    /// Product of plane rotations with Pythagorean cos/sin pairs, times a
    /// diagonal of unit-modulus Gaussian rationals. Exactly unitary.
    Matrix unitary(std::size_t n, bool complex = true);
    /// X diag(I_r, 0) X^{-1} for a random nonsingular X.
    Matrix idempotent(std::size_t n, std::size_t r);

private:
    std::mt19937_64 eng_;
};

}  // namespace ginvlab
