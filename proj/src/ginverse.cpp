#include "ginvlab/ginverse.hpp"

#include "ginvlab/random.hpp"

namespace ginvlab {

std::string_view class_name(GInvClass cls) {
    switch (cls) {
        case GInvClass::G1: return "1";
        case GInvClass::G12: return "12";
        case GInvClass::G13: return "13";
        case GInvClass::G14: return "14";
        case GInvClass::G123: return "123";
        case GInvClass::G124: return "124";
        case GInvClass::G134: return "134";
        case GInvClass::MP: return "mp";
    }
    return "?";
}

GInvClass parse_class(std::string_view name) {
    for (auto c : kAllClasses)
        if (class_name(c) == name) return c;
    if (name == "dagger" || name == "1234" || name == "MP") return GInvClass::MP;
    throw ParseError("unknown class '" + std::string(name) + "'");
}

bool class_requires(GInvClass cls, int eq) {
    switch (eq) {
        case 1: return true;
        case 2:
            return cls == GInvClass::G12 || cls == GInvClass::G123 || cls == GInvClass::G124 || cls == GInvClass::MP;
        case 3:
            return cls == GInvClass::G13 || cls == GInvClass::G123 || cls == GInvClass::G134 || cls == GInvClass::MP;
        case 4:
            return cls == GInvClass::G14 || cls == GInvClass::G124 || cls == GInvClass::G134 || cls == GInvClass::MP;
        default: return false;
    }
}

bool is_hermitian(const Matrix& a) { return a.is_square() && ctranspose(a) == a; }

Matrix pinv(const Matrix& a) {
    auto [f, g] = full_rank_factorization(a);
    Matrix x;
    if (f.cols() == 0) {
        x = Matrix::zero(a.cols(), a.rows());
    } else {
        Matrix gs = ctranspose(g), fs = ctranspose(f);
        x = gs * inverse(g * gs) * inverse(fs * f) * fs;
    }
    Matrix ax = a * x, xa = x * a;
    if (ax * a != a || xa * x != x || !is_hermitian(ax) || !is_hermitian(xa))
        throw IdentityViolated("pinv: Penrose equations fail on " + a.to_string());
    return x;
}

Matrix proj_left(const Matrix& a) { return Matrix::identity(a.rows()) - a * pinv(a); }
Matrix proj_right(const Matrix& a) { return Matrix::identity(a.cols()) - pinv(a) * a; }

Family::Family(Matrix a) : a_(std::move(a)), dagger_(pinv(a_)) {
    e_ = Matrix::identity(a_.rows()) - a_ * dagger_;
    f_ = Matrix::identity(a_.cols()) - dagger_ * a_;
}

Matrix Family::make(GInvClass cls, const GInvParams& p) const {
    const std::size_t m = a_.rows(), n = a_.cols();
    auto need = [&](const Matrix& u, const char* what) {
        if (u.rows() != n || u.cols() != m)
            throw DimensionMismatch(std::string("parameter ") + what + " must be " + std::to_string(n) + "x" +
                                    std::to_string(m));
    };
    switch (cls) {
        case GInvClass::MP: return dagger_;
        case GInvClass::G1:
            need(p.u1, "u1");
            need(p.u2, "u2");
            return dagger_ + f_ * p.u1 + p.u2 * e_;
        case GInvClass::G12:
            need(p.u1, "u1");
            need(p.u2, "u2");
            return (dagger_ + f_ * p.u1) * a_ * (dagger_ + p.u2 * e_);
        default: break;
    }
    need(p.u, "u");
    switch (cls) {
        case GInvClass::G13: return dagger_ + f_ * p.u;
        case GInvClass::G14: return dagger_ + p.u * e_;
        case GInvClass::G123: return dagger_ + f_ * p.u * a_ * dagger_;
        case GInvClass::G124: return dagger_ + dagger_ * a_ * p.u * e_;
        case GInvClass::G134: return dagger_ + f_ * p.u * e_;
        default: break;
    }
    throw UnsupportedClass("make: unhandled class");
}

GInvParams Family::sample_params(std::uint64_t seed) const {
    Rng rng(seed);
    const std::size_t m = a_.rows(), n = a_.cols();
    // complex parameters only when A itself is complex
    bool complex = false;
    for (const auto& x : a_.entries()) complex |= !x.is_real();
    GInvParams p;
    p.u = rng.matrix(n, m, complex);
    p.u1 = rng.matrix(n, m, complex);
    p.u2 = rng.matrix(n, m, complex);
    return p;
}

Matrix Family::sample(GInvClass cls, std::uint64_t seed) const {
    if (cls == GInvClass::MP) return dagger_;
    return make(cls, sample_params(seed));
}

Matrix make_ginverse(const Matrix& a, GInvClass cls, const GInvParams& p) { return Family(a).make(cls, p); }

Matrix sample_ginverse(const Matrix& a, GInvClass cls, std::uint64_t seed) { return Family(a).sample(cls, seed); }

struct MemberTest::Facts {
    bool p1 = false, p2 = false, p3 = false, p4 = false;
    bool left = false, right = false, rank_eq = false;
};

MemberTest::MemberTest(Matrix a) : a_(std::move(a)) {
    a_star_ = ctranspose(a_);
    a_star_a_ = a_star_ * a_;
    a_a_star_ = a_ * a_star_;
    rank_a_ = rank(a_);
}

MemberTest::Facts MemberTest::facts(const Matrix& g, bool need_rank, bool need_left, bool need_right,
                                    bool need_23) const {
    if (g.rows() != a_.cols() || g.cols() != a_.rows())
        throw DimensionMismatch("membership: candidate is " + std::to_string(g.rows()) + "x" +
                                std::to_string(g.cols()) + ", expected " + std::to_string(a_.cols()) + "x" +
                                std::to_string(a_.rows()));
    Facts f;
    Matrix ag = a_ * g;
    f.p1 = ag * a_ == a_;
    f.p3 = is_hermitian(ag);
    if (need_23) {
        Matrix ga = g * a_;
        f.p2 = ga * g == g;
        f.p4 = is_hermitian(ga);
    }
    if (need_left) f.left = a_star_a_ * g == a_star_;
    if (need_right) f.right = g * a_a_star_ == a_star_;
    if (need_rank) f.rank_eq = rank(g) == rank_a_;
    return f;
}

namespace {

// Evaluates one class against precomputed facts; returns {penrose, characterization}.
std::pair<bool, bool> verdicts(GInvClass cls, bool p1, bool p2, bool p3, bool p4, bool left, bool right, bool rk) {
    switch (cls) {
        case GInvClass::G1: return {p1, p1};
        case GInvClass::G12: return {p1 && p2, p1 && rk};
        case GInvClass::G13: return {p1 && p3, left};
        case GInvClass::G14: return {p1 && p4, right};
        case GInvClass::G123: return {p1 && p2 && p3, left && rk};
        case GInvClass::G124: return {p1 && p2 && p4, right && rk};
        case GInvClass::G134: return {p1 && p3 && p4, left && right};
        case GInvClass::MP: return {p1 && p2 && p3 && p4, left && right && rk};
    }
    return {false, false};
}

}  // namespace

bool MemberTest::contains(const Matrix& g, GInvClass cls) const {
    bool rk = cls == GInvClass::G12 || cls == GInvClass::G123 || cls == GInvClass::G124 || cls == GInvClass::MP;
    bool left = cls == GInvClass::G13 || cls == GInvClass::G123 || cls == GInvClass::G134 || cls == GInvClass::MP;
    bool right = cls == GInvClass::G14 || cls == GInvClass::G124 || cls == GInvClass::G134 || cls == GInvClass::MP;
    Facts f = facts(g, rk, left, right, cls != GInvClass::G1 && cls != GInvClass::G13);
    auto [pen, chr] = verdicts(cls, f.p1, f.p2, f.p3, f.p4, f.left, f.right, f.rank_eq);
    if (pen != chr)
        throw CharacterizationMismatch("class " + std::string(class_name(cls)) + ": Penrose test says " +
                                       (pen ? "member" : "non-member") + ", characterization disagrees");
    return pen;
}

ClassSet MemberTest::classes(const Matrix& g) const {
    Facts f = facts(g, true, true, true, true);
    ClassSet out = 0;
    for (auto cls : kAllClasses) {
        auto [pen, chr] = verdicts(cls, f.p1, f.p2, f.p3, f.p4, f.left, f.right, f.rank_eq);
        if (pen != chr)
            throw CharacterizationMismatch("class " + std::string(class_name(cls)) +
                                           ": Penrose test and characterization disagree");
        if (pen) out |= bit(cls);
    }
    return out;
}

bool is_member(const Matrix& g, const Matrix& a, GInvClass cls) { return MemberTest(a).contains(g, cls); }

bool is_ep(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("is_ep: matrix is not square");
    Matrix as = ctranspose(a);
    return range_subset(as, a) && range_subset(a, as);
}

std::vector<IdentityCheck> dagger_identities_check(const Matrix& a) {
    const Matrix as = ctranspose(a);
    const Matrix ad = pinv(a);
    const Matrix asd = pinv(as);
    const Matrix aad = a * ad, ada = ad * a;
    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

    add("adjoint of dagger", ctranspose(ad) == asd);
    add("dagger of dagger", pinv(ad) == a);
    add("(A*)^dagger A* = (A A^dagger)*", asd * as == ctranspose(aad));
    add("A A^dagger hermitian", is_hermitian(aad));
    add("A* (A*)^dagger = (A^dagger A)*", as * asd == ctranspose(ada));
    add("A^dagger A hermitian", is_hermitian(ada));

    auto same_range = [](const Matrix& x, const Matrix& y) { return range_subset(x, y) && range_subset(y, x); };
    add("R(A) = R(AA*)", same_range(a, a * as));
    add("R(A) = R(AA*A)", same_range(a, a * as * a));
    add("R(A) = R(AA^dagger)", same_range(a, aad));
    add("R(A) = R((A^dagger)*)", same_range(a, ctranspose(ad)));
    add("R(A*) = R(A*A)", same_range(as, as * a));
    add("R(A*) = R(A*AA*)", same_range(as, as * a * as));
    add("R(A*) = R(A^dagger)", same_range(as, ad));
    add("R(A*) = R(A^dagger A)", same_range(as, ada));

    const std::size_t r = rank(a);
    add("r(A) = r(A*)", rank(as) == r);
    add("r(A) = r(A^dagger)", rank(ad) == r);
    add("r(A) = r(AA*)", rank(a * as) == r);
    add("r(A) = r(A*A)", rank(as * a) == r);
    add("r(A) = r(AA^dagger)", rank(aad) == r);
    add("r(A) = r(A^dagger A)", rank(ada) == r);
    return out;
}

}  // namespace ginvlab
