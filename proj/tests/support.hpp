#pragma once

// Helpers shared by the test binaries: random instance shapes and the
// {-1,0,1} parameter grid used to reach minimum ranks.

#include <cstdint>
#include <functional>
#include <vector>

#include "ginvlab/ginverse.hpp"
#include "ginvlab/random.hpp"

namespace ginvlab::testing {

inline std::size_t pick_rank(Rng& rng, std::size_t m, std::size_t n) {
    return static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(m, n))));
}

inline Matrix random_shape(Rng& rng, std::size_t max_m, std::size_t max_n, bool complex) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_m)));
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_n)));
    return rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
}

/// Calls visit(params) on points of the {-1,0,1} grid for `count` matrices of
/// shape rows x cols. The whole grid is walked when it has at most `limit`
/// points; otherwise `limit` deterministic points are drawn, each entry zero
/// with probability 1/2 so that low-rank parameters are well represented.
/// Always includes the all-zero point first.
inline void for_each_grid_point(std::size_t count, std::size_t rows, std::size_t cols, std::size_t limit,
                                std::uint64_t seed, const std::function<void(const std::vector<Matrix>&)>& visit) {
    const std::size_t cells = count * rows * cols;
    std::vector<Matrix> params(count, Matrix::zero(rows, cols));
    auto assign = [&](const std::vector<int>& digits) {
        for (std::size_t k = 0; k < cells; ++k) {
            std::size_t p = k / (rows * cols), rem = k % (rows * cols);
            params[p](rem / cols, rem % cols) = static_cast<long>(digits[k]);
        }
    };
    std::vector<int> digits(cells, 0);
    assign(digits);
    visit(params);

    double total = 1;
    for (std::size_t k = 0; k < cells; ++k) total *= 3;
    if (total <= static_cast<double>(limit)) {
        // odometer over {-1,0,1}^cells starting after all zeros
        std::vector<int> d(cells, -1);
        for (;;) {
            bool all_zero = true;
            for (int x : d) all_zero &= x == 0;
            if (!all_zero) {
                assign(d);
                visit(params);
            }
            std::size_t k = 0;
            while (k < cells && d[k] == 1) d[k++] = -1;
            if (k == cells) break;
            ++d[k];
        }
        return;
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < limit; ++t) {
        for (auto& x : digits) x = rng.uniform(0, 1) ? 0 : (rng.uniform(0, 1) ? 1 : -1);
        assign(digits);
        visit(params);
    }
}


/// Columns of the identity that extend the independent columns of f to a
/// basis, returned as [f, extra].
inline Matrix complete_columns(const Matrix& f) {
    Matrix basis = f;
    std::size_t r = rank(f);
    for (std::size_t j = 0; j < f.rows() && r < f.rows(); ++j) {
        Matrix e = Matrix::zero(f.rows(), 1);
        e(j, 0) = 1;
        Matrix trial = hblock({basis, e});
        if (rank(trial) > r) {
            basis = std::move(trial);
            ++r;
        }
    }
    return basis;
}

/// An exact minimizer U of r(R - P U Q). Reduces P and Q to [I; 0] and [I, 0]
/// by invertible changes of basis, then completes the free top-left block with
/// R12 R22^dagger R21, which attains the rank-completion minimum.
inline Matrix argmin_rank_pencil(const Matrix& r, const Matrix& p, const Matrix& q) {
    auto [fp, gp] = full_rank_factorization(p);
    auto [fq, gq] = full_rank_factorization(q);
    const std::size_t rp = fp.cols(), rq = gq.rows();
    if (rp == 0 || rq == 0) return Matrix::zero(p.cols(), q.rows());
    Matrix s = inverse(complete_columns(fp));
    Matrix t = inverse(ctranspose(complete_columns(ctranspose(gq))));
    Matrix srt = s * r * t;
    auto sub = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
        Matrix out(i1 - i0, j1 - j0);
        for (std::size_t i = i0; i < i1; ++i)
            for (std::size_t j = j0; j < j1; ++j) out(i - i0, j - j0) = srt(i, j);
        return out;
    };
    const std::size_t m = r.rows(), n = r.cols();
    Matrix r11 = sub(0, rp, 0, rq), r12 = sub(0, rp, rq, n), r21 = sub(rp, m, 0, rq), r22 = sub(rp, m, rq, n);
    Matrix y = r11 - r12 * pinv(r22) * r21;
    // Y = G_P U F_Q; G_P has full row rank and F_Q full column rank.
    return pinv(gp) * y * pinv(fq);
}


/// Smallest r(D - C G B) found over G in {A^(1,2)} by alternating exact
/// pencil minimization in the two parameters, starting from (u1, u2).
inline std::size_t schur_descent(const Family& fam, const Matrix& b, const Matrix& c, const Matrix& d, Matrix u1,
                                 Matrix u2, int rounds = 3) {
    const Matrix& a = fam.a();
    auto value = [&] { return rank(d - c * fam.make(GInvClass::G12, {{}, u1, u2}) * b); };
    std::size_t best = value();
    for (int k = 0; k < rounds && best > 0; ++k) {
        // G = (A^+ + F U1) W with W = A (A^+ + U2 E): affine in U1
        Matrix w = a * (fam.dagger() + u2 * fam.e());
        u1 = argmin_rank_pencil(d - c * fam.dagger() * w * b, c * fam.f(), w * b);
        best = std::min(best, value());
        // G = X A A^+ + X A U2 E with X = A^+ + F U1: affine in U2
        Matrix x = fam.dagger() + fam.f() * u1;
        u2 = argmin_rank_pencil(d - c * x * a * fam.dagger() * b, c * x * a, fam.e() * b);
        best = std::min(best, value());
    }
    return best;
}

/// Smallest r(GA B GC) found over GA in {A^(1,2)}, GC in {C^(1,2)} by the same
/// alternating scheme over the four parameters.
inline std::size_t sandwich_descent(const Family& fa, const Matrix& b, const Family& fc, std::vector<Matrix> u,
                                    int rounds = 3) {
    const Matrix& a = fa.a();
    const Matrix& c = fc.a();
    auto ga = [&] { return fa.make(GInvClass::G12, {{}, u[0], u[1]}); };
    auto gc = [&] { return fc.make(GInvClass::G12, {{}, u[2], u[3]}); };
    std::size_t best = rank(ga() * b * gc());
    for (int k = 0; k < rounds && best > 0; ++k) {
        // GA B GC = (A^+ + F U1) W B GC, minimize r(0 - (-F) U1 (W B GC) - A^+ W B GC)
        Matrix rest = b * gc();
        Matrix w = a * (fa.dagger() + u[1] * fa.e());
        u[0] = argmin_rank_pencil(fa.dagger() * w * rest, scale(-1, fa.f()), w * rest);
        best = std::min(best, rank(ga() * b * gc()));
        Matrix x = fa.dagger() + fa.f() * u[0];
        u[1] = argmin_rank_pencil(x * a * fa.dagger() * rest, scale(-1, x * a), fa.e() * rest);
        best = std::min(best, rank(ga() * b * gc()));
        Matrix lead = ga() * b;
        Matrix wc = c * (fc.dagger() + u[3] * fc.e());
        u[2] = argmin_rank_pencil(lead * fc.dagger() * wc, scale(-1, lead * fc.f()), wc);
        best = std::min(best, rank(ga() * b * gc()));
        Matrix xc = fc.dagger() + fc.f() * u[2];
        u[3] = argmin_rank_pencil(lead * xc * c * fc.dagger(), scale(-1, lead * xc * c), fc.e());
        best = std::min(best, rank(ga() * b * gc()));
    }
    return best;
}


/// Column-stacked vec(M).
inline Matrix vec(const Matrix& m) {
    Matrix out(m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(j * m.rows() + i, 0) = m(i, j);
    return out;
}

/// The matrix K with vec(P U Q) = K vec(U), i.e. the Kronecker product Q^T (x) P.
inline Matrix vec_operator(const Matrix& p, const Matrix& q) {
    Matrix k(p.rows() * q.cols(), p.cols() * q.rows());
    for (std::size_t a = 0; a < q.rows(); ++a)
        for (std::size_t b = 0; b < q.cols(); ++b)
            for (std::size_t i = 0; i < p.rows(); ++i)
                for (std::size_t j = 0; j < p.cols(); ++j) k(b * p.rows() + i, a * p.cols() + j) = q(a, b) * p(i, j);
    return k;
}

/// Exact answer to "C G B = D for some G in {A^(1)}": the equation is linear in
/// the two family parameters, C F U1 B + C U2 E B = D - C A^+ B.
inline bool exists_g1_solution(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    Family fam(a);
    Matrix lhs = hblock({vec_operator(c * fam.f(), b), vec_operator(c, fam.e() * b)});
    return solve(lhs, vec(d - c * fam.dagger() * b)).has_value();
}

struct FourBlocks {
    Matrix a, b, c, d;
};

/// Random A (m x n), B, C, D for the C G B = D predicates. The kind selects a
/// structure under which different class conditions hold, so that true and
/// false verdicts both occur:
///   0 generic with D = C A^+ B        1 B = 0, D = 0
///   2 C = X A, B = A Y, D = C A^+ B    3 C = X A, D = C A^+ B
///   4 B = A Y, D = C A^+ B            5 A* B = 0, D = 0
///   6 C A* = 0, D = 0                 7 C = 0, D = 0
///   8 generic with generic D          9 D = C G B for a sampled {1}-inverse G
inline FourBlocks four_block_instance(Rng& rng, int kind, bool complex) {
    std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3), k = rng.uniform(1, 3), l = rng.uniform(1, 3);
    std::size_t ra = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(m, n))));
    // leave room for a nonzero B with A* B = 0, or C with C A* = 0
    if (kind == 5) ra = std::min(ra, m - 1);
    if (kind == 6) ra = std::min(ra, n - 1);
    FourBlocks f;
    f.a = rng.matrix_of_rank(m, n, ra, complex);
    f.b = rng.matrix(m, k, complex);
    f.c = rng.matrix(l, n, complex);
    Family fam(f.a);
    switch (kind) {
        case 1: f.b = Matrix::zero(m, k); break;
        case 2:
            f.c = rng.matrix(l, m, complex) * f.a;
            f.b = f.a * rng.matrix(n, k, complex);
            break;
        case 3: f.c = rng.matrix(l, m, complex) * f.a; break;
        case 4: f.b = f.a * rng.matrix(n, k, complex); break;
        case 5: f.b = fam.e() * rng.matrix(m, k, complex); break;
        case 6: f.c = rng.matrix(l, n, complex) * fam.f(); break;
        case 7: f.c = Matrix::zero(l, n); break;
        default: break;
    }
    switch (kind) {
        case 1: case 5: case 6: case 7: f.d = Matrix::zero(l, k); break;
        case 8: f.d = rng.matrix(l, k, complex); break;
        case 9: f.d = f.c * fam.sample(GInvClass::G1, rng.next()) * f.b; break;
        default: f.d = f.c * fam.dagger() * f.b; break;
    }
    return f;
}

}  // namespace ginvlab::testing
