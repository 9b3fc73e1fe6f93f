#include "ginvlab/rankcalc.hpp"

#include <algorithm>

namespace ginvlab {

namespace {

long r(const Matrix& x) { return static_cast<long>(rank(x)); }

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

// Shape checks shared by the four-block formulas: A m x n, B m x k, C l x n, D l x k.
void check_abcd(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    require(b.rows() == a.rows(), "B must have as many rows as A");
    require(c.cols() == a.cols(), "C must have as many columns as A");
    require(d.rows() == c.rows() && d.cols() == b.cols(), "D must be (rows of C) x (cols of B)");
}

}  // namespace

bool rank_rowblock_identity(const Matrix& a, const Matrix& b, std::uint64_t g1seed) {
    require(a.rows() == b.rows(), "rank_rowblock_identity: A and B need the same row count");
    Matrix g = sample_ginverse(a, GInvClass::G1, g1seed);
    return rank(hblock({a, b})) == rank(a) + rank(b - a * g * b);
}

bool rank_colblock_identity(const Matrix& a, const Matrix& c, std::uint64_t g1seed) {
    require(a.cols() == c.cols(), "rank_colblock_identity: A and C need the same column count");
    Matrix g = sample_ginverse(a, GInvClass::G1, g1seed);
    return rank(vblock({a, c})) == rank(a) + rank(c - c * g * a);
}

std::size_t rank_product(const Matrix& a, const Matrix& b, std::uint64_t seed_a, std::uint64_t seed_b) {
    require(a.cols() == b.rows(), "rank_product: A and B are not conformable");
    const std::size_t n = a.cols();
    Matrix ga = sample_ginverse(a, GInvClass::G1, seed_a);
    Matrix gb = sample_ginverse(b, GInvClass::G1, seed_b);
    Matrix in = Matrix::identity(n);
    long value = r(a) + r(b) - static_cast<long>(n) + r((in - b * gb) * (in - ga * a));
    long direct = r(a * b);
    if (value != direct)
        throw IdentityViolated("rank_product: formula gives " + std::to_string(value) + ", direct rank " +
                               std::to_string(direct));
    return static_cast<std::size_t>(value);
}

std::size_t rank_triple_product(const Matrix& a, const Matrix& b, const Matrix& c, std::uint64_t seed_ab,
                                std::uint64_t seed_bc) {
    require(a.cols() == b.rows() && b.cols() == c.rows(), "rank_triple_product: chain is not conformable");
    Matrix ab = a * b, bc = b * c;
    Matrix gab = sample_ginverse(ab, GInvClass::G1, seed_ab);
    Matrix gbc = sample_ginverse(bc, GInvClass::G1, seed_bc);
    Matrix left = Matrix::identity(b.rows()) - bc * gbc;
    Matrix right = Matrix::identity(b.cols()) - gab * ab;
    long value = r(ab) + r(bc) - r(b) + r(left * b * right);
    long direct = r(ab * c);
    if (value != direct)
        throw IdentityViolated("rank_triple_product: formula gives " + std::to_string(value) + ", direct rank " +
                               std::to_string(direct));
    return static_cast<std::size_t>(value);
}

ExtremalRank extremal_rank_schur(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    check_abcd(a, b, c, d);
    const std::size_t m = a.rows(), n = a.cols(), k = b.cols(), l = c.rows();
    const long ra = r(a);
    const long rcd = r(hblock({c, d}));
    const long rbd = r(vblock({b, d}));
    const long rblock = r(block2x2(a, b, c, d));

    long hi = std::min({ra + r(d), rcd, rbd, rblock - ra});

    // [A 0 B; 0 C D] and [A 0; 0 B; C D]
    Matrix wide = vblock({hblock({a, Matrix::zero(m, n), b}), hblock({Matrix::zero(l, n), c, d})});
    Matrix tall = vblock({hblock({a, Matrix::zero(m, k)}), hblock({Matrix::zero(m, n), b}), hblock({c, d})});
    long r1 = rblock - r(wide) - r(tall);
    long r2 = r(d) - r(block2x2(a, Matrix::zero(m, k), c, d)) - r(block2x2(a, b, Matrix::zero(l, n), d));
    long lo = rbd + rcd + ra + std::max(r1, r2);

    if (lo < 0 || hi < lo)
        throw IdentityViolated("extremal_rank_schur: inconsistent extremes " + std::to_string(lo) + ".." +
                               std::to_string(hi));
    return {static_cast<std::size_t>(hi), static_cast<std::size_t>(lo)};
}

ExtremalRank extremal_rank_sandwich(const Matrix& a, const Matrix& b, const Matrix& c) {
    require(b.rows() == a.rows(), "extremal_rank_sandwich: B must have as many rows as A");
    require(c.cols() == b.cols(), "extremal_rank_sandwich: C must have as many columns as B");
    const long ra = r(a), rb = r(b), rc = r(c);
    long hi = std::min({ra, rb, rc});
    long lo = std::max(0L, ra + rb + rc - r(hblock({a, b})) - r(hblock({ctranspose(b), ctranspose(c)})));
    return {static_cast<std::size_t>(hi), static_cast<std::size_t>(lo)};
}

SolvabilityVerdict solvability_g1(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    check_abcd(a, b, c, d);
    SolvabilityVerdict v;
    const long ra = r(a);
    const long rblock = r(block2x2(a, b, c, d));
    v.exists_some = range_subset(d, c) && range_subset(ctranspose(d), ctranspose(b)) &&
                    rblock == r(vblock({a, c})) + r(hblock({a, b})) - ra;
    v.holds_for_all = hblock({c, d}).is_zero() || vblock({b, d}).is_zero() || rblock == ra;
    return v;
}

bool forall_identity(GInvClass cls, const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    check_abcd(a, b, c, d);
    const long ra = r(a);
    const Matrix as = ctranspose(a);
    auto left_rank = [&] { return r(block2x2(as * a, as * b, c, d)) == ra; };
    auto right_rank = [&] { return r(block2x2(a * as, b, c * as, d)) == ra; };
    const bool cd_zero = c.is_zero() && d.is_zero();
    const bool bd_zero = b.is_zero() && d.is_zero();
    switch (cls) {
        case GInvClass::G1:
            throw UnsupportedClass("forall_identity: use solvability_g1 for {1}-inverses");
        case GInvClass::G12:
            return (a.is_zero() && d.is_zero()) || cd_zero || bd_zero || r(block2x2(a, b, c, d)) == ra;
        case GInvClass::G13: return bd_zero || left_rank();
        case GInvClass::G14: return cd_zero || right_rank();
        case GInvClass::G123: return ((as * b).is_zero() && d.is_zero()) || left_rank();
        case GInvClass::G124: return ((c * as).is_zero() && d.is_zero()) || right_rank();
        case GInvClass::G134: return left_rank() || right_rank();
        case GInvClass::MP: return r(block2x2(as * a * as, as * b, c * as, d)) == ra;
    }
    return false;
}

}  // namespace ginvlab
