#pragma once

#include <cstdint>

#include "ginvlab/ginverse.hpp"

namespace ginvlab {

struct ExtremalRank {
    std::size_t max_value = 0;
    std::size_t min_value = 0;
};

struct SolvabilityVerdict {
    bool exists_some = false;
    bool holds_for_all = false;
};

/// r[A, B] = r(A) + r(B - A A^(1) B) for the A^(1) drawn from g1seed.
bool rank_rowblock_identity(const Matrix& a, const Matrix& b, std::uint64_t g1seed);
/// r[A; C] = r(A) + r(C - C A^(1) A), the column-block twin.
bool rank_colblock_identity(const Matrix& a, const Matrix& c, std::uint64_t g1seed);

/// r(AB) through r(A) + r(B) - n + r[(I_n - BB^(1))(I_n - A^(1)A)], with A^(1)
/// and B^(1) drawn from the two seeds. Throws IdentityViolated if the value
/// differs from the directly computed r(AB).
std::size_t rank_product(const Matrix& a, const Matrix& b, std::uint64_t seed_a, std::uint64_t seed_b);

/// r(ABC) through r(AB) + r(BC) - r(B) + r[(I - BC(BC)^(1)) B (I - (AB)^(1)AB)].
std::size_t rank_triple_product(const Matrix& a, const Matrix& b, const Matrix& c, std::uint64_t seed_ab,
                                std::uint64_t seed_bc);

/// Closed-form extremes of r(D - C A^(1,2) B) over all {1,2}-inverses of A.
/// A is m x n, B m x k, C l x n, D l x k.
ExtremalRank extremal_rank_schur(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Closed-form extremes of r(A^(1,2) B C^(1,2)). A is m x n, B m x q, C p x q.
ExtremalRank extremal_rank_sandwich(const Matrix& a, const Matrix& b, const Matrix& c);

/// Whether C A^(1) B = D for some / for every {1}-inverse of A.
SolvabilityVerdict solvability_g1(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Whether C G B = D for every G in the given class of A (for MP, the single
/// equation C A^dagger B = D). G1 is handled by solvability_g1.
bool forall_identity(GInvClass cls, const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace ginvlab
