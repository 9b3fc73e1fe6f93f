#include "ginvlab/rol.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ginvlab/random.hpp"

namespace ginvlab {

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

void require_two_or_twelve(GInvClass cls, const char* who) {
    if (cls != GInvClass::G1 && cls != GInvClass::G12)
        throw UnsupportedClass(std::string(who) + ": only classes 1 and 12 have these constructions");
}

// Memoized inverses for the templates: one sample per symbol, so that a symbol
// like A^- means the same matrix everywhere it occurs.
class Inverses {
public:
    Inverses(GInvClass cls, std::uint64_t seed) : cls_(cls), seed_(seed) {}

    const Matrix& operator()(const std::string& key, const Matrix& x) {
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, sample_ginverse(x, cls_, derive_seed(seed_, {fnv1a(key)}))).first;
        return it->second;
    }

private:
    GInvClass cls_;
    std::uint64_t seed_;
    std::map<std::string, Matrix> cache_;
};

}  // namespace

std::string_view relation_name(SetRelation rel) {
    switch (rel) {
        case SetRelation::IntersectNonempty: return "cap";
        case SetRelation::Superset: return "supseteq";
        case SetRelation::Subset: return "subseteq";
        case SetRelation::Equal: return "eq";
        case SetRelation::ContainsDagger: return "dagger";
    }
    return "?";
}

SetRelation parse_relation(std::string_view name) {
    for (auto rel : {SetRelation::IntersectNonempty, SetRelation::Superset, SetRelation::Subset, SetRelation::Equal,
                     SetRelation::ContainsDagger})
        if (relation_name(rel) == name) return rel;
    throw ParseError("unknown relation '" + std::string(name) + "'");
}

std::string_view evidence_name(Evidence e) {
    switch (e) {
        case Evidence::ConfirmedTrue: return "ConfirmedTrue";
        case Evidence::ConfirmedFalse: return "ConfirmedFalse";
        case Evidence::ConsistentTrue: return "ConsistentTrue";
        case Evidence::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------- two factors

std::vector<NamedMatrix> mixed_rol_candidates_two(const Matrix& a, const Matrix& b, GInvClass cls,
                                                  std::uint64_t seed) {
    require(a.cols() == b.rows(), "mixed_rol_candidates_two: A and B are not conformable");
    require_two_or_twelve(cls, "mixed_rol_candidates_two");
    Inverses g(cls, seed);
    const Matrix as = ctranspose(a), bs = ctranspose(b);
    const Matrix& ai = g("A", a);
    const Matrix& bi = g("B", b);
    std::vector<NamedMatrix> out;
    out.push_back({"(A^-AB)^-A^-", g("A^-AB", ai * a * b) * ai});
    out.push_back({"B^-(ABB^-)^-", bi * g("ABB^-", a * b * bi)});
    out.push_back({"(A*AB)^-A*", g("A*AB", as * a * b) * as});
    out.push_back({"B*(ABB*)^-", bs * g("ABB*", a * b * bs)});
    out.push_back({"(AA*AB)^-AA*", g("AA*AB", a * as * a * b) * a * as});
    out.push_back({"B*B(ABB*B)^-", bs * b * g("ABB*B", a * b * bs * b)});
    out.push_back({"B^-(A^-ABB^-)^-A^-", bi * g("A^-ABB^-", ai * a * b * bi) * ai});
    out.push_back({"B*(A*ABB*)^-A*", bs * g("A*ABB*", as * a * b * bs) * as});
    out.push_back({"B*B(AA*ABB*B)^-AA*", bs * b * g("AA*ABB*B", a * as * a * b * bs * b) * a * as});
    return out;
}

Construction huang_construction_two(const Matrix& a, const Matrix& b, GInvClass cls, std::uint64_t seed) {
    require(a.cols() == b.rows(), "huang_construction_two: A and B are not conformable");
    require_two_or_twelve(cls, "huang_construction_two");
    Inverses g(cls, seed);
    const Matrix in = Matrix::identity(a.cols());
    const Matrix& ai = g("A", a);
    const Matrix& bi = g("B", b);
    Matrix p = in - ai * a;
    Matrix q = in - b * bi;
    Construction c;
    c.g = bi * ai - bi * p * g("QP", q * p) * q * ai;
    c.member = is_member(c.g, a * b, cls);
    return c;
}

bool huang_condition_two_12(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "huang_condition_two_12: A and B are not conformable");
    std::size_t rab = rank(a * b);
    return rab == rank(a) && rab == rank(b);
}

// -------------------------------------------------------------- three factors

std::vector<NamedMatrix> mixed_rol_candidates_three(const Matrix& a, const Matrix& b, const Matrix& c,
                                                    GInvClass cls, std::uint64_t seed) {
    require(a.cols() == b.rows() && b.cols() == c.rows(), "mixed_rol_candidates_three: chain is not conformable");
    require_two_or_twelve(cls, "mixed_rol_candidates_three");
    Inverses g(cls, seed);
    const Matrix m = a * b * c, ab = a * b, bc = b * c;
    const Matrix as = ctranspose(a), cs = ctranspose(c), abs = ctranspose(ab), bcs = ctranspose(bc);
    const Matrix bs = ctranspose(b);
    const Matrix& ai = g("A", a);
    const Matrix& ci = g("C", c);
    const Matrix& bi = g("B", b);
    const Matrix& abi = g("AB", ab);
    const Matrix& bci = g("BC", bc);
    // the products that get inverted inside the longer templates
    const Matrix abbi = a * b * bi, bibc = bi * b * c, abbs = a * b * bs, bsbc = bs * b * c;
    const Matrix& abbi_i = g("ABB^-", abbi);
    const Matrix& bibc_i = g("B^-BC", bibc);
    const Matrix& abbs_i = g("ABB*", abbs);
    const Matrix& bsbc_i = g("B*BC", bsbc);
    const Matrix abbi_s = ctranspose(abbi), bibc_s = ctranspose(bibc), abbs_s = ctranspose(abbs),
                 bsbc_s = ctranspose(bsbc);

    std::vector<NamedMatrix> out;
    out.push_back({"(A^-M)^-A^-", g("A^-M", ai * m) * ai});
    out.push_back({"C^-(MC^-)^-", ci * g("MC^-", m * ci)});
    out.push_back({"(A*M)^-A*", g("A*M", as * m) * as});
    out.push_back({"C*(MC*)^-", cs * g("MC*", m * cs)});
    out.push_back({"(AA*M)^-AA*", g("AA*M", a * as * m) * a * as});
    out.push_back({"C*C(MC*C)^-", cs * c * g("MC*C", m * cs * c)});
    out.push_back({"C^-(A^-MC^-)^-A^-", ci * g("A^-MC^-", ai * m * ci) * ai});
    out.push_back({"C*(A*MC*)^-A*", cs * g("A*MC*", as * m * cs) * as});
    out.push_back({"[(AB)^-M]^-(AB)^-", g("(AB)^-M", abi * m) * abi});
    out.push_back({"(BC)^-[M(BC)^-]^-", bci * g("M(BC)^-", m * bci)});
    out.push_back({"[(AB)*M]^-(AB)*", g("(AB)*M", abs * m) * abs});
    out.push_back({"(BC)*[M(BC)*]^-", bcs * g("M(BC)*", m * bcs)});
    out.push_back({"[(ABB^-)^-M]^-(ABB^-)^-", g("(ABB^-)^-M", abbi_i * m) * abbi_i});
    out.push_back({"(B^-BC)^-[M(B^-BC)^-]^-", bibc_i * g("M(B^-BC)^-", m * bibc_i)});
    out.push_back({"[(ABB*)^-M]^-(ABB*)^-", g("(ABB*)^-M", abbs_i * m) * abbs_i});
    out.push_back({"(B*BC)^-[M(B*BC)^-]^-", bsbc_i * g("M(B*BC)^-", m * bsbc_i)});
    out.push_back({"C*C(AA*MC*C)^-AA*", cs * c * g("AA*MC*C", a * as * m * cs * c) * a * as});
    out.push_back({"(BC)^-[(AB)^-M(BC)^-]^-(AB)^-", bci * g("(AB)^-M(BC)^-", abi * m * bci) * abi});
    out.push_back({"(BC)*[(AB)*M(BC)*]^-(AB)*", bcs * g("(AB)*M(BC)*", abs * m * bcs) * abs});
    out.push_back({"(B^-BC)^-[(ABB^-)^-M(B^-BC)^-]^-(ABB^-)^-",
                   bibc_i * g("(ABB^-)^-M(B^-BC)^-", abbi_i * m * bibc_i) * abbi_i});
    out.push_back({"(B*BC)^-[(ABB*)^-M(B*BC)^-]^-(ABB*)^-",
                   bsbc_i * g("(ABB*)^-M(B*BC)^-", abbs_i * m * bsbc_i) * abbs_i});
    out.push_back({"(B^-BC)*[(ABB^-)*M(B^-BC)*]^-(ABB^-)*",
                   bibc_s * g("(ABB^-)*M(B^-BC)*", abbi_s * m * bibc_s) * abbi_s});
    out.push_back({"(B*BC)*[(ABB*)*M(B*BC)*]^-(ABB*)*",
                   bsbc_s * g("(ABB*)*M(B*BC)*", abbs_s * m * bsbc_s) * abbs_s});
    return out;
}

Construction huang_construction_three(const Matrix& a, const Matrix& b, const Matrix& c, GInvClass cls,
                                      std::uint64_t seed) {
    require(a.cols() == b.rows() && b.cols() == c.rows(), "huang_construction_three: chain is not conformable");
    require_two_or_twelve(cls, "huang_construction_three");
    Inverses g(cls, seed);
    const Matrix ab = a * b, bc = b * c;
    const Matrix& abi = g("AB", ab);
    const Matrix& bci = g("BC", bc);
    Matrix p = Matrix::identity(b.cols()) - abi * ab;
    Matrix q = Matrix::identity(b.rows()) - bc * bci;
    Construction out;
    out.g = bci * b * abi - bci * b * p * g("QBP", q * b * p) * q * b * abi;
    out.member = is_member(out.g, ab * c, cls);
    return out;
}

bool huang_condition_three_12(const Matrix& a, const Matrix& b, const Matrix& c) {
    require(a.cols() == b.rows() && b.cols() == c.rows(), "huang_condition_three_12: chain is not conformable");
    const Matrix ab = a * b;
    std::size_t rm = rank(ab * c);
    return rm == rank(ab) && rm == rank(b * c);
}

// --------------------------------------------------------- nonsingular sandwich

TripleInstance::TripleInstance(Matrix a, Matrix b, Matrix c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    require(a_.is_square() && c_.is_square(), "TripleInstance: A and C must be square");
    require(a_.cols() == b_.rows() && b_.cols() == c_.rows(), "TripleInstance: A B C is not conformable");
    if (rank(a_) != a_.rows()) throw SingularMatrix("TripleInstance: A is singular");
    if (rank(c_) != c_.rows()) throw SingularMatrix("TripleInstance: C is singular");
    a_inv_ = inverse(a_);
    c_inv_ = inverse(c_);
    m_ = a_ * b_ * c_;
    rank_b_ = rank(b_);
    if (rank(m_) != rank_b_) throw IdentityViolated("TripleInstance: r(ABC) differs from r(B)");
    hash_ = fnv1a(c_.to_string(), fnv1a(b_.to_string(), fnv1a(a_.to_string())));
    left_ = range_equal(ctranspose(a_) * a_ * b_, b_);
    const Matrix bs = ctranspose(b_);
    right_ = range_equal(c_ * ctranspose(c_) * bs, bs);
}

std::string_view condition_text(Condition c) {
    switch (c) {
        case Condition::Always: return "always";
        case Condition::RankMin: return "r(B) = min(m,n)";
        case Condition::RankM: return "r(B) = m";
        case Condition::RankN: return "r(B) = n";
        case Condition::RankMN: return "r(B) = m = n";
        case Condition::RankMorN: return "r(B) = m or r(B) = n";
        case Condition::ZeroOrRankM: return "B = 0 or r(B) = m";
        case Condition::ZeroOrRankN: return "B = 0 or r(B) = n";
        case Condition::ZeroOrRankMN: return "B = 0 or r(B) = m = n";
        case Condition::Left: return "R(A*AB) = R(B)";
        case Condition::Right: return "R(CC*B*) = R(B*)";
        case Condition::LeftRight: return "R(A*AB) = R(B) and R(CC*B*) = R(B*)";
        case Condition::LeftRankMin: return "R(A*AB) = R(B) and r(B) = min(m,n)";
        case Condition::RightRankMin: return "R(CC*B*) = R(B*) and r(B) = min(m,n)";
        case Condition::LeftRankN: return "R(A*AB) = R(B) and r(B) = n";
        case Condition::RightRankM: return "R(CC*B*) = R(B*) and r(B) = m";
        case Condition::ZeroOrLeftRankN: return "B = 0 or (R(A*AB) = R(B) and r(B) = n)";
        case Condition::ZeroOrRightRankM: return "B = 0 or (R(CC*B*) = R(B*) and r(B) = m)";
    }
    return "?";
}

bool holds(Condition c, const TripleInstance& inst) {
    const std::size_t r = inst.rank_b(), m = inst.rows(), n = inst.cols();
    const bool zero = r == 0, rm = r == m, rn = r == n, rmin = r == std::min(m, n);
    const bool left = inst.left_condition(), right = inst.right_condition();
    switch (c) {
        case Condition::Always: return true;
        case Condition::RankMin: return rmin;
        case Condition::RankM: return rm;
        case Condition::RankN: return rn;
        case Condition::RankMN: return rm && rn;
        case Condition::RankMorN: return rm || rn;
        case Condition::ZeroOrRankM: return zero || rm;
        case Condition::ZeroOrRankN: return zero || rn;
        case Condition::ZeroOrRankMN: return zero || (rm && rn);
        case Condition::Left: return left;
        case Condition::Right: return right;
        case Condition::LeftRight: return left && right;
        case Condition::LeftRankMin: return left && rmin;
        case Condition::RightRankMin: return right && rmin;
        case Condition::LeftRankN: return left && rn;
        case Condition::RightRankM: return right && rm;
        case Condition::ZeroOrLeftRankN: return zero || (left && rn);
        case Condition::ZeroOrRightRankM: return zero || (right && rm);
    }
    return false;
}

namespace {

constexpr GInvClass k1 = GInvClass::G1, k12 = GInvClass::G12, k13 = GInvClass::G13, k14 = GInvClass::G14,
                    k123 = GInvClass::G123, k124 = GInvClass::G124, k134 = GInvClass::G134, kMP = GInvClass::MP;
constexpr SetRelation kCap = SetRelation::IntersectNonempty, kSup = SetRelation::Superset,
                      kSub = SetRelation::Subset, kEq = SetRelation::Equal, kDag = SetRelation::ContainsDagger;
using C = Condition;

// lhs is the class of M = ABC, rhs the class of B in {C^-1 B^(rhs) A^-1}.
// "a ⇔ b ⇔ c" groups in the table become one row per relation.
constexpr CaseEntry kCatalog[] = {
    {"1", k1, k1, kEq, C::Always, ""},
    {"2a", k1, k12, kSup, C::Always, ""},
    {"2b", k1, k12, kSub, C::RankMin, ""},
    {"2b", k1, k12, kEq, C::RankMin, ""},
    {"3a", k1, k13, kSup, C::Always, ""},
    {"3b", k1, k13, kSub, C::ZeroOrRankM, ""},
    {"3b", k1, k13, kEq, C::ZeroOrRankM, ""},
    {"4a", k1, k14, kSup, C::Always, ""},
    {"4b", k1, k14, kSub, C::ZeroOrRankN, ""},
    {"4b", k1, k14, kEq, C::ZeroOrRankN, ""},
    {"5a", k1, k123, kSup, C::Always, ""},
    {"5b", k1, k123, kSub, C::RankM, ""},
    {"5b", k1, k123, kEq, C::RankM, ""},
    {"6a", k1, k124, kSup, C::Always, ""},
    {"6b", k1, k124, kSub, C::RankN, ""},
    {"6b", k1, k124, kEq, C::RankN, ""},
    {"7a", k1, k134, kSup, C::Always, ""},
    {"7b", k1, k134, kSub, C::ZeroOrRankMN, ""},
    {"7b", k1, k134, kEq, C::ZeroOrRankMN, ""},
    {"8", k1, kMP, kDag, C::Always, ""},

    {"9a", k12, k1, kSub, C::Always, ""},
    {"9b", k12, k1, kSup, C::RankMorN, ""},
    {"9b", k12, k1, kEq, C::RankMorN, ""},
    {"10", k12, k12, kEq, C::Always, ""},
    {"11a", k12, k13, kCap, C::Always, ""},
    {"11b", k12, k13, kSup, C::RankMorN, ""},
    {"11c", k12, k13, kSub, C::ZeroOrRankM, ""},
    {"11d", k12, k13, kEq, C::RankM, ""},
    {"12a", k12, k14, kCap, C::Always, ""},
    {"12b", k12, k14, kSup, C::RankMorN, ""},
    {"12c", k12, k14, kSub, C::ZeroOrRankN, ""},
    {"12d", k12, k14, kEq, C::RankN, ""},
    {"13a", k12, k123, kSup, C::Always, ""},
    {"13b", k12, k123, kSub, C::ZeroOrRankM, ""},
    {"13b", k12, k123, kEq, C::ZeroOrRankM, ""},
    {"14a", k12, k124, kSup, C::Always, ""},
    {"14c", k12, k124, kSub, C::ZeroOrRankN, "label printed as 14c; the group has no 14b"},
    {"14c", k12, k124, kEq, C::ZeroOrRankN, "label printed as 14c; the group has no 14b"},
    {"15a", k12, k134, kCap, C::Always, ""},
    {"15b", k12, k134, kSup, C::RankMorN, ""},
    {"15c", k12, k134, kSub, C::ZeroOrRankMN, ""},
    {"15d", k12, k134, kEq, C::RankMN, ""},
    {"16", k12, kMP, kDag, C::Always, ""},

    {"17a", k13, k1, kSub, C::Always, ""},
    {"17b", k13, k1, kSup, C::ZeroOrRankM, ""},
    {"17b", k13, k1, kEq, C::ZeroOrRankM, ""},
    {"18a", k13, k12, kCap, C::Always, ""},
    {"18b", k13, k12, kSup, C::ZeroOrRankM, ""},
    {"18c", k13, k12, kSub, C::RankMorN, ""},
    {"18d", k13, k12, kEq, C::RankM, ""},
    {"19a", k13, k13, kCap, C::Always, ""},
    {"19b", k13, k13, kSup, C::Left, ""},
    {"19b", k13, k13, kSub, C::Left, ""},
    {"19b", k13, k13, kEq, C::Left, ""},
    {"20a", k13, k14, kCap, C::Always, ""},
    {"20b", k13, k14, kSup, C::ZeroOrRankM, ""},
    {"20c", k13, k14, kSub, C::ZeroOrRankN, ""},
    {"20d", k13, k14, kEq, C::ZeroOrRankMN, ""},
    {"21a", k13, k123, kCap, C::Left, ""},
    {"21a", k13, k123, kSup, C::Left, ""},
    {"21b", k13, k123, kSub, C::LeftRankMin, ""},
    {"21b", k13, k123, kEq, C::LeftRankMin, ""},
    {"22a", k13, k124, kCap, C::Always, ""},
    {"22b", k13, k124, kSup, C::ZeroOrRankM, ""},
    {"22c", k13, k124, kSub, C::RankN, ""},
    {"22d", k13, k124, kEq, C::RankMN, ""},
    {"23a", k13, k134, kCap, C::Left, ""},
    {"23a", k13, k134, kSup, C::Left, ""},
    {"23b", k13, k134, kSub, C::ZeroOrLeftRankN, ""},
    {"23b", k13, k134, kEq, C::ZeroOrLeftRankN, ""},
    {"24", k13, kMP, kDag, C::Left, ""},

    {"25a", k14, k1, kSub, C::Always, ""},
    {"25b", k14, k1, kSup, C::ZeroOrRankN, ""},
    {"25b", k14, k1, kEq, C::ZeroOrRankN, "the printed equality names {M^(1,3)}; read as {M^(1,4)}"},
    {"26a", k14, k12, kCap, C::Always, ""},
    {"26b", k14, k12, kSup, C::ZeroOrRankN, ""},
    {"26c", k14, k12, kSub, C::RankMorN, ""},
    {"26d", k14, k12, kEq, C::RankN, ""},
    {"27a", k14, k13, kCap, C::Always, ""},
    {"27b", k14, k13, kSup, C::ZeroOrRankN, ""},
    {"27c", k14, k13, kSub, C::ZeroOrRankM, ""},
    {"27d", k14, k13, kEq, C::ZeroOrRankMN, ""},
    {"28a", k14, k14, kCap, C::Always, ""},
    {"28b", k14, k14, kSup, C::Right, ""},
    {"28b", k14, k14, kSub, C::Right, ""},
    {"28b", k14, k14, kEq, C::Right, ""},
    {"29a", k14, k123, kCap, C::Always, ""},
    {"29b", k14, k123, kSup, C::ZeroOrRankN, ""},
    {"29c", k14, k123, kSub, C::RankM, ""},
    {"29d", k14, k123, kEq, C::RankMN, ""},
    {"30a", k14, k124, kCap, C::Right, ""},
    {"30a", k14, k124, kSup, C::Right, ""},
    {"30b", k14, k124, kSub, C::RightRankMin, ""},
    {"30b", k14, k124, kEq, C::RightRankMin, ""},
    {"31a", k14, k134, kCap, C::Right, ""},
    {"31a", k14, k134, kSup, C::Right, ""},
    {"31b", k14, k134, kSub, C::ZeroOrRightRankM, ""},
    {"31b", k14, k134, kEq, C::ZeroOrRightRankM, ""},
    {"32", k14, kMP, kDag, C::Right, ""},

    {"33a", k123, k1, kSub, C::Always, ""},
    {"33b", k123, k1, kSup, C::RankM, ""},
    {"33b", k123, k1, kEq, C::RankM, ""},
    {"34a", k123, k12, kSub, C::Always, ""},
    {"34b", k123, k12, kSup, C::ZeroOrRankM, ""},
    {"34b", k123, k12, kEq, C::ZeroOrRankM, ""},
    {"35a", k123, k13, kCap, C::Left, ""},
    {"35a", k123, k13, kSub, C::Left, ""},
    {"35b", k123, k13, kSup, C::LeftRankMin, ""},
    {"35b", k123, k13, kEq, C::LeftRankMin, ""},
    {"36a", k123, k14, kCap, C::Always, ""},
    {"36b", k123, k14, kSup, C::RankM, ""},
    {"36c", k123, k14, kSub, C::ZeroOrRankN, ""},
    {"36d", k123, k14, kEq, C::RankMN, ""},
    {"37", k123, k123, kCap, C::Left, ""},
    {"37", k123, k123, kEq, C::Left, ""},
    {"38a", k123, k124, kCap, C::Always, ""},
    {"38b", k123, k124, kSup, C::ZeroOrRankM, ""},
    {"38c", k123, k124, kSub, C::ZeroOrRankN, ""},
    {"38d", k123, k124, kEq, C::ZeroOrRankMN, ""},
    {"39a", k123, k134, kCap, C::Left, ""},
    {"39b", k123, k134, kSup, C::LeftRankMin, ""},
    {"39c", k123, k134, kSub, C::ZeroOrLeftRankN, ""},
    {"39d", k123, k134, kSub, C::LeftRankN,
     "printed with the subset sign a second time and a different condition; shadowed by 39c in lookups"},
    {"40", k123, kMP, kDag, C::Left, ""},

    {"41a", k124, k1, kSub, C::Always, ""},
    {"41b", k124, k1, kSup, C::RankN, ""},
    {"41b", k124, k1, kEq, C::RankN, ""},
    {"42a", k124, k12, kSub, C::Always, ""},
    {"42b", k124, k12, kSup, C::ZeroOrRankN, ""},
    {"42b", k124, k12, kEq, C::ZeroOrRankN, ""},
    {"43a", k124, k13, kCap, C::Always, ""},
    {"43b", k124, k13, kSup, C::RankN, ""},
    {"43c", k124, k13, kSub, C::ZeroOrRankM, ""},
    {"43d", k124, k13, kEq, C::RankMN, ""},
    {"44a", k124, k14, kCap, C::Right, ""},
    {"44a", k124, k14, kSub, C::Right, ""},
    {"44b", k124, k14, kSup, C::RightRankMin, ""},
    {"44b", k124, k14, kEq, C::RightRankMin, ""},
    {"45a", k124, k123, kCap, C::Always, ""},
    {"45b", k124, k123, kSup, C::ZeroOrRankN, ""},
    {"45c", k124, k123, kSub, C::ZeroOrRankM, ""},
    {"45d", k124, k123, kEq, C::ZeroOrRankMN, ""},
    {"46", k124, k124, kCap, C::Right, ""},
    {"46", k124, k124, kEq, C::Right, ""},
    {"47a", k124, k134, kCap, C::Right, ""},
    {"47b", k124, k134, kSup, C::RightRankMin, ""},
    {"47c", k124, k134, kSub, C::ZeroOrRightRankM, ""},
    {"47d", k124, k134, kEq, C::RightRankM, ""},
    {"48", k124, kMP, kDag, C::Right, ""},

    {"49a", k134, k1, kSub, C::Always, ""},
    {"49b", k134, k1, kSup, C::ZeroOrRankMN, ""},
    {"49b", k134, k1, kEq, C::ZeroOrRankMN, ""},
    {"50a", k134, k12, kCap, C::Always, ""},
    {"50b", k134, k12, kSup, C::ZeroOrRankMN, ""},
    {"50c", k134, k12, kSub, C::RankMorN, ""},
    {"50d", k134, k12, kEq, C::RankMN, ""},
    {"51a", k134, k13, kCap, C::Left, ""},
    {"51a", k134, k13, kSub, C::Left, ""},
    {"51b", k134, k13, kSup, C::ZeroOrLeftRankN, ""},
    {"51b", k134, k13, kEq, C::ZeroOrLeftRankN, ""},
    {"52a", k134, k14, kCap, C::Right, ""},
    {"52a", k134, k14, kSub, C::Right, ""},
    {"52b", k134, k14, kSup, C::ZeroOrRightRankM, ""},
    {"52b", k134, k14, kEq, C::ZeroOrRightRankM, ""},
    {"53a", k134, k123, kCap, C::Left, ""},
    {"53b", k134, k123, kSup, C::ZeroOrLeftRankN, ""},
    {"53c", k134, k123, kSub, C::LeftRankMin, ""},
    {"53d", k134, k123, kEq, C::LeftRankN, ""},
    {"54a", k134, k124, kCap, C::Right, ""},
    {"54b", k134, k124, kSup, C::ZeroOrRightRankM, ""},
    {"54c", k134, k124, kSub, C::RightRankMin, ""},
    {"54d", k134, k124, kEq, C::RightRankM, ""},
    {"55", k134, k134, kCap, C::LeftRight, ""},
    {"55", k134, k134, kEq, C::LeftRight, ""},
    {"56", k134, kMP, kDag, C::LeftRight, ""},

    {"57", kMP, k1, kDag, C::Always, ""},
    {"58", kMP, k12, kDag, C::Always, ""},
    {"59", kMP, k13, kDag, C::Left, ""},
    {"60", kMP, k14, kDag, C::Right, ""},
    {"61", kMP, k123, kDag, C::Left, ""},
    {"62", kMP, k124, kDag, C::Right, ""},
    {"63", kMP, k134, kDag, C::LeftRight, ""},
    {"64", kMP, kMP, kEq, C::LeftRight, ""},
};

}  // namespace

std::span<const CaseEntry> case_catalog() { return kCatalog; }

const CaseEntry& find_case(GInvClass lhs, GInvClass rhs, SetRelation rel) {
    for (const auto& e : kCatalog)
        if (e.lhs == lhs && e.rhs == rhs && e.relation == rel) return e;
    throw UnknownCase("no stated result for M^(" + std::string(class_name(lhs)) + ") " +
                      std::string(relation_name(rel)) + " C^-1 B^(" + std::string(class_name(rhs)) + ") A^-1");
}

const CaseEntry& find_case(std::string_view id, SetRelation rel) {
    for (const auto& e : kCatalog)
        if (e.id == id && e.relation == rel) return e;
    throw UnknownCase("no case " + std::string(id) + " with relation " + std::string(relation_name(rel)));
}

bool analytic_case(const TripleInstance& inst, GInvClass lhs, GInvClass rhs, SetRelation rel) {
    return holds(find_case(lhs, rhs, rel).condition, inst);
}

bool CaseReport::violation() const {
    return (analytic && empirical == Evidence::ConfirmedFalse) || (!analytic && empirical == Evidence::ConfirmedTrue);
}

// ------------------------------------------------------------------ sampling

SamplePool::SamplePool(const TripleInstance& inst, const SurveyOptions& opt, ClassSet lhs_mask, ClassSet rhs_mask)
    : inst_(&inst), opt_(opt) {
    if (opt_.budget == 0) throw Error("SamplePool: budget must be at least 1");
    const Family fam_b(inst.b()), fam_m(inst.m_product());
    const MemberTest test_b(inst.b()), test_m(inst.m_product());
    const std::uint64_t base = opt_.seed ^ inst.hash();

    struct Task {
        bool lhs;
        GInvClass cls;
        std::size_t k;
    };
    std::vector<Task> tasks;
    for (auto cls : kAllClasses) {
        std::size_t count = cls == GInvClass::MP ? 1 : opt_.budget;
        if (lhs_mask & bit(cls)) {
            lhs_[static_cast<int>(cls)].resize(count);
            for (std::size_t k = 0; k < count; ++k) tasks.push_back({true, cls, k});
        }
        if (rhs_mask & bit(cls)) {
            rhs_[static_cast<int>(cls)].resize(count);
            for (std::size_t k = 0; k < count; ++k) tasks.push_back({false, cls, k});
        }
    }

    // Every task writes its own slot, so the parallel and serial loops give
    // identical pools.
    auto run = [&](const Task& t) {
        std::uint64_t seed = derive_seed(base, {t.lhs ? 0u : 1u, static_cast<std::uint64_t>(t.cls), t.k});
        Sample s{seed, {}, 0};
        if (t.lhs) {
            s.g = fam_m.sample(t.cls, seed);
            s.other = test_b.classes(inst.c() * s.g * inst.a());
            lhs_[static_cast<int>(t.cls)][t.k] = std::move(s);
        } else {
            s.g = inst.c_inv() * fam_b.sample(t.cls, seed) * inst.a_inv();
            s.other = test_m.classes(s.g);
            rhs_[static_cast<int>(t.cls)][t.k] = std::move(s);
        }
    };
    const long n = static_cast<long>(tasks.size());
    if (opt_.policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) run(tasks[static_cast<std::size_t>(i)]);
    } else {
        for (long i = 0; i < n; ++i) run(tasks[static_cast<std::size_t>(i)]);
    }
}

std::optional<Matrix> intersect_witness(const TripleInstance& inst, GInvClass lhs, GInvClass rhs) {
    const Matrix& b = inst.b();
    if (rhs == GInvClass::MP) {
        Matrix g = inst.c_inv() * pinv(b) * inst.a_inv();
        if (is_member(g, inst.m_product(), lhs)) return g;
        return std::nullopt;
    }
    if (lhs == GInvClass::MP) {
        Matrix g = pinv(inst.m_product());
        if (is_member(inst.c() * g * inst.a(), b, rhs)) return g;
        return std::nullopt;
    }

    // Unknown H (n x m) in {B^(rhs)} with C^-1 H A^-1 in {M^(lhs)}. Equation (1)
    // reads BHB = B on both sides; (3) and (4) are Hermitian constraints on BH,
    // HB, ABHA^-1 and C^-1 HBC. All are real-linear in (Re H, Im H). Equation
    // (2) is restored afterwards by H -> HBH, which keeps BH and HB.
    const std::size_t m = b.rows(), n = b.cols();
    const Matrix& a = inst.a();
    const Matrix& c = inst.c();
    auto herm_gap = [](const Matrix& k) { return k - ctranspose(k); };
    struct Constraint {
        std::function<Matrix(const Matrix&)> f;
        Matrix target;
    };
    std::vector<Constraint> cons;
    cons.push_back({[&](const Matrix& h) { return b * h * b; }, b});
    if (class_requires(rhs, 3)) cons.push_back({[&](const Matrix& h) { return herm_gap(b * h); }, Matrix::zero(m, m)});
    if (class_requires(rhs, 4)) cons.push_back({[&](const Matrix& h) { return herm_gap(h * b); }, Matrix::zero(n, n)});
    if (class_requires(lhs, 3))
        cons.push_back({[&](const Matrix& h) { return herm_gap(a * b * h * inst.a_inv()); }, Matrix::zero(m, m)});
    if (class_requires(lhs, 4))
        cons.push_back({[&](const Matrix& h) { return herm_gap(inst.c_inv() * h * b * c); }, Matrix::zero(n, n)});

    std::size_t rows = 0;
    for (const auto& k : cons) rows += 2 * k.target.rows() * k.target.cols();
    const std::size_t unknowns = 2 * n * m;
    Matrix sys(rows, unknowns), rhs_vec(rows, 1);
    auto flatten = [&](const std::vector<Matrix>& parts, Matrix& dst, std::size_t col) {
        std::size_t r = 0;
        for (const auto& p : parts)
            for (const auto& z : p.entries()) {
                dst(r++, col) = GaussianRational(z.re());
                dst(r++, col) = GaussianRational(z.im());
            }
    };
    std::vector<Matrix> targets;
    for (const auto& k : cons) targets.push_back(k.target);
    flatten(targets, rhs_vec, 0);
    for (std::size_t u = 0; u < unknowns; ++u) {
        Matrix e = Matrix::zero(n, m);
        std::size_t cell = u / 2;
        e(cell / m, cell % m) = u % 2 == 0 ? GaussianRational(1) : GaussianRational(mpq_class(0), mpq_class(1));
        std::vector<Matrix> images;
        for (const auto& k : cons) images.push_back(k.f(e));
        flatten(images, sys, u);
    }
    auto sol = solve(sys, rhs_vec);
    if (!sol) return std::nullopt;
    Matrix h(n, m);
    for (std::size_t cell = 0; cell < n * m; ++cell)
        h(cell / m, cell % m) = GaussianRational((*sol)(2 * cell, 0).re(), (*sol)(2 * cell + 1, 0).re());
    h = h * b * h;
    Matrix g = inst.c_inv() * h * inst.a_inv();
    if (!is_member(h, b, rhs) || !is_member(g, inst.m_product(), lhs))
        throw IdentityViolated("intersect_witness: solver output fails the membership test");
    return g;
}

namespace {

void add_witness(CaseReport& r, const SamplePool::Sample& s, const char* role) {
    if (r.witnesses.size() >= 1) return;
    r.seeds.push_back(s.seed);
    r.witnesses.push_back({s.seed, role, s.g});
}

}  // namespace

CaseReport evaluate_case(const SamplePool& pool, const CaseEntry& entry) {
    const TripleInstance& inst = pool.instance();
    const GInvClass x = entry.lhs, y = entry.rhs;
    CaseReport r;
    r.case_id = std::string(entry.id);
    r.lhs = x;
    r.rhs = y;
    r.relation = entry.relation;
    r.condition = std::string(condition_text(entry.condition));
    r.note = std::string(entry.note);
    r.analytic = holds(entry.condition, inst);

    const bool lhs_single = x == GInvClass::MP, rhs_single = y == GInvClass::MP;
    // every sampled member of the rhs set lies in {M^(x)}
    auto rhs_inside = [&]() {
        for (const auto& s : pool.rhs(y)) {
            if (!(s.other & bit(x))) {
                add_witness(r, s, "counterexample");
                return false;
            }
            ++r.witness_count;
        }
        return true;
    };
    // every sampled member of {M^(x)} lies in the rhs set
    auto lhs_inside = [&]() {
        for (const auto& s : pool.lhs(x)) {
            if (!(s.other & bit(y))) {
                add_witness(r, s, "counterexample");
                return false;
            }
            ++r.witness_count;
        }
        return true;
    };

    switch (entry.relation) {
        case SetRelation::Superset:
            r.empirical = !rhs_inside() ? Evidence::ConfirmedFalse
                                        : (rhs_single ? Evidence::ConfirmedTrue : Evidence::ConsistentTrue);
            break;
        case SetRelation::Subset:
            r.empirical = !lhs_inside() ? Evidence::ConfirmedFalse
                                        : (lhs_single ? Evidence::ConfirmedTrue : Evidence::ConsistentTrue);
            break;
        case SetRelation::Equal:
            if (!rhs_inside() || !lhs_inside())
                r.empirical = Evidence::ConfirmedFalse;
            else
                r.empirical = lhs_single && rhs_single ? Evidence::ConfirmedTrue : Evidence::ConsistentTrue;
            break;
        case SetRelation::ContainsDagger: {
            // C^-1 B^+ A^-1 in {M^(x)} when the rhs class is MP, else M^+ in the rhs set
            const auto& s = rhs_single ? pool.rhs(GInvClass::MP).front() : pool.lhs(GInvClass::MP).front();
            bool in = rhs_single ? (s.other & bit(x)) != 0 : (s.other & bit(y)) != 0;
            r.empirical = in ? Evidence::ConfirmedTrue : Evidence::ConfirmedFalse;
            r.witness_count = in ? 1 : 0;
            add_witness(r, s, in ? "witness" : "counterexample");
            break;
        }
        case SetRelation::IntersectNonempty: {
            for (const auto& s : pool.rhs(y))
                if (s.other & bit(x)) {
                    ++r.witness_count;
                    add_witness(r, s, "witness");
                }
            for (const auto& s : pool.lhs(x))
                if (s.other & bit(y)) {
                    ++r.witness_count;
                    add_witness(r, s, "witness");
                }
            // C^-1 B^+ A^-1 lies in every rhs set and M^+ in every lhs set
            if (y != GInvClass::MP && !pool.rhs(GInvClass::MP).empty()) {
                const auto& s = pool.rhs(GInvClass::MP).front();
                if (s.other & bit(x)) {
                    ++r.witness_count;
                    add_witness(r, s, "witness");
                }
            }
            if (x != GInvClass::MP && !pool.lhs(GInvClass::MP).empty()) {
                const auto& s = pool.lhs(GInvClass::MP).front();
                if (s.other & bit(y)) {
                    ++r.witness_count;
                    add_witness(r, s, "witness");
                }
            }
            if (r.witness_count > 0) {
                r.empirical = Evidence::ConfirmedTrue;
            } else if (pool.options().exact_intersect) {
                auto g = intersect_witness(inst, x, y);
                r.empirical = g ? Evidence::ConfirmedTrue : Evidence::ConfirmedFalse;
                if (g) {
                    r.witness_count = 1;
                    r.witnesses.push_back({0, "witness", *g});
                }
            } else {
                r.empirical = Evidence::Inconclusive;
            }
            break;
        }
    }
    return r;
}

Evidence empirical_case(const TripleInstance& inst, GInvClass lhs, GInvClass rhs, SetRelation rel,
                        const SurveyOptions& opt) {
    const CaseEntry& entry = find_case(lhs, rhs, rel);
    // the dagger cells also read the MP samples of either side
    ClassSet mp = bit(GInvClass::MP);
    SamplePool pool(inst, opt, static_cast<ClassSet>(bit(lhs) | mp), static_cast<ClassSet>(bit(rhs) | mp));
    return evaluate_case(pool, entry).empirical;
}

TheoremViolation::TheoremViolation(CaseReport report, const TripleInstance& inst)
    : Error("case " + report.case_id + " (" + std::string(relation_name(report.relation)) + "): analytic " +
            (report.analytic ? "true" : "false") + ", empirical " + std::string(evidence_name(report.empirical))),
      report_(std::move(report)),
      a_(inst.a()),
      b_(inst.b()),
      c_(inst.c()) {}

std::vector<CaseReport> survey_reports(const TripleInstance& inst, const SurveyOptions& opt) {
    SamplePool pool(inst, opt);
    std::vector<CaseReport> out;
    out.reserve(std::size(kCatalog));
    for (const auto& e : kCatalog) out.push_back(evaluate_case(pool, e));
    return out;
}

std::vector<CaseReport> survey(const TripleInstance& inst, const SurveyOptions& opt) {
    auto reports = survey_reports(inst, opt);
    for (const auto& r : reports)
        if (r.violation()) throw TheoremViolation(r, inst);
    return reports;
}

TripleInstance random_instance(std::uint64_t seed, std::size_t m, std::size_t n, std::size_t r, bool complex) {
    Rng rng(seed);
    Matrix a = rng.nonsingular(m, complex);
    Matrix b = rng.matrix_of_rank(m, n, r, complex);
    Matrix c = rng.nonsingular(n, complex);
    return TripleInstance(std::move(a), std::move(b), std::move(c));
}

// ------------------------------------------------------- dagger of the product

HartwigCheck hartwig_characterizations(const TripleInstance& inst) {
    const Matrix &a = inst.a(), &b = inst.b(), &c = inst.c(), &m = inst.m_product();
    const Matrix as = ctranspose(a), bs = ctranspose(b), cs = ctranspose(c), ms = ctranspose(m);
    HartwigCheck h{};
    h.dagger_rol = pinv(m) == inst.c_inv() * pinv(b) * inst.a_inv();
    h.ranges_b = inst.left_condition() && inst.right_condition();
    h.ranges_m = range_equal(a * as * m, m) && range_equal(cs * c * ms, ms);
    const Matrix aab = as * a * b, bcc = b * c * cs;
    h.projectors = aab * pinv(aab) == b * pinv(b) && pinv(bcc) * bcc == pinv(b) * b;
    h.ep_b = is_ep(as * a * b * bs) && is_ep(bs * b * c * cs);
    h.ep_m = is_ep(a * as * m * ms) && is_ep(ms * m * cs * c);
    return h;
}

// ------------------------------------------------------------------ corollaries

CaseReport covariance_case(const Matrix& a, const Matrix& b, GInvClass lhs, GInvClass rhs, SetRelation rel,
                           const SurveyOptions& opt) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "covariance_case: A and B must be square of one order");
    TripleInstance inst(a, b, inverse(a));
    const CaseEntry& entry = find_case(lhs, rhs, rel);
    ClassSet mp = bit(GInvClass::MP);
    SamplePool pool(inst, opt, static_cast<ClassSet>(bit(lhs) | mp), static_cast<ClassSet>(bit(rhs) | mp));
    return evaluate_case(pool, entry);
}

std::vector<CaseReport> unitary_similarity(const Matrix& a, const Matrix& b, const SurveyOptions& opt) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "unitary_similarity: A and B must be square of one order");
    if (ctranspose(a) * a != Matrix::identity(a.rows())) throw Error("unitary_similarity: A is not unitary");
    // with C = A* the rhs set is {A B^(X) A*}
    TripleInstance inst(a, b, ctranspose(a));
    SamplePool pool(inst, opt);
    std::vector<CaseReport> out;
    for (auto cls : kAllClasses) {
        const CaseEntry& entry = find_case(cls, cls, SetRelation::Equal);
        CaseReport r = evaluate_case(pool, entry);
        r.case_id = "unitary:" + std::string(class_name(cls));
        r.condition = "A*A = I";
        r.analytic = true;
        out.push_back(std::move(r));
    }
    return out;
}

Matrix sum_pinv_via_block(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sum_pinv_via_block: A and B must have one shape");
    const std::size_t m = a.rows(), n = a.cols();
    Matrix n_block = block2x2(a, b, b, a);
    Matrix left = hblock({Matrix::identity(n), Matrix::identity(n)});
    Matrix right = vblock({Matrix::identity(m), Matrix::identity(m)});
    Matrix out = GaussianRational(1, 2) * (left * pinv(n_block) * right);
    if (out != pinv(a + b)) throw IdentityViolated("sum_pinv_via_block: result differs from pinv(A + B)");
    return out;
}

std::vector<CaseReport> sum_block_classes(const Matrix& a, const Matrix& b, const SurveyOptions& opt) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sum_block_classes: A and B must have one shape");
    const std::size_t m = a.rows(), n = a.cols();
    const Matrix s = a + b, d = a - b;
    const Matrix n_block = block2x2(a, b, b, a);
    const Matrix left = hblock({Matrix::identity(n), Matrix::identity(n)});
    const Matrix right = vblock({Matrix::identity(m), Matrix::identity(m)});
    // K_k = [[I, I], [I, -I]] of order 2k; K N K = 2 diag(A + B, A - B)
    auto k_of = [](std::size_t k) {
        Matrix i = Matrix::identity(k);
        return block2x2(i, i, i, GaussianRational(-1) * i);
    };
    const Matrix kn = k_of(n), km = k_of(m);
    const Matrix d_dagger = pinv(d);
    const Family fam_n(n_block), fam_s(s);
    const MemberTest test_n(n_block), test_s(s);
    const GaussianRational half(1, 2);
    std::vector<CaseReport> out;
    for (auto cls : kAllClasses) {
        CaseReport r;
        r.case_id = "sum:" + std::string(class_name(cls));
        r.lhs = r.rhs = cls;
        r.relation = SetRelation::Equal;
        r.condition = "always";
        r.analytic = true;
        bool ok = true;
        const std::size_t count = cls == GInvClass::MP ? 1 : opt.budget;
        for (std::size_t k = 0; k < count && ok; ++k) {
            std::uint64_t seed = derive_seed(opt.seed, {static_cast<std::uint64_t>(cls), k});
            // N-side member mapped down
            Matrix g = half * (left * fam_n.sample(cls, seed) * right);
            if (!test_s.contains(g, cls)) {
                ok = false;
                r.seeds.push_back(seed);
                r.witnesses.push_back({seed, "counterexample", g});
                break;
            }
            // (A+B)-side member lifted to 1/2 K diag(G, (A-B)^+) K, which maps back to G
            Matrix h = fam_s.sample(cls, seed);
            Matrix lifted = half * (kn * block2x2(h, Matrix::zero(n, m), Matrix::zero(n, m), d_dagger) * km);
            if (!test_n.contains(lifted, cls) || half * (left * lifted * right) != h) {
                ok = false;
                r.seeds.push_back(seed);
                r.witnesses.push_back({seed, "counterexample", h});
                break;
            }
            r.witness_count += 2;
        }
        r.empirical = !ok ? Evidence::ConfirmedFalse
                          : (cls == GInvClass::MP ? Evidence::ConfirmedTrue : Evidence::ConsistentTrue);
        out.push_back(std::move(r));
    }
    return out;
}

IdempotentReport idempotent_rol(const Matrix& a, const Matrix& b, const GaussianRational& alpha,
                                const GaussianRational& beta, const SurveyOptions& opt) {
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "idempotent_rol: A and B must be square of one order");
    if (a * a != a) throw NotIdempotent("idempotent_rol: A*A differs from A");
    if (b * b != b) throw NotIdempotent("idempotent_rol: B*B differs from B");
    const GaussianRational one(1), minus_one(-1);
    for (const auto* s : {&alpha, &beta})
        if (s->is_zero() || *s == minus_one) throw InvalidScalar("idempotent_rol: alpha and beta must avoid 0 and -1");

    const std::size_t k = a.rows();
    const Matrix i = Matrix::identity(k);
    const Matrix pa = i + alpha * a, pb = i + beta * b;
    const Matrix n_mat = i + alpha * a + beta * b;
    IdempotentReport rep;
    rep.lambda = alpha * beta / ((one + alpha) * (one + beta));
    const Matrix core = i - rep.lambda * (a * b);
    rep.factorization = pa * core * pb == n_mat;
    rep.factorization_swapped = pb * (i - rep.lambda * (b * a)) * pa == n_mat;
    if (alpha != one && beta != one) {
        GaussianRational lm = alpha * beta / ((one - alpha) * (one - beta));
        rep.factorization_minus = pa * (i - lm * (a * b)) * pb == n_mat;
    }

    // I - lambda AB = (I + aA)^-1 N (I + bB)^-1 as an instance of the table
    TripleInstance inst(inverse(pa), n_mat, inverse(pb));
    if (inst.m_product() != core) throw IdentityViolated("idempotent_rol: factorization does not hold");
    ClassSet mp = bit(GInvClass::MP);
    SamplePool pool(inst, opt, static_cast<ClassSet>(bit(GInvClass::G1) | mp),
                    static_cast<ClassSet>(bit(GInvClass::G1) | mp));
    rep.g1_equality = evaluate_case(pool, find_case("1", SetRelation::Equal));
    rep.g1_equality.case_id = "idempotent:1";

    rep.dagger_rol = pinv(core) == pb * pinv(n_mat) * pa;
    const Matrix ns = ctranspose(n_mat);
    rep.stated_ranges = range_equal(pb * ctranspose(pb) * n_mat, n_mat) && range_equal(ctranspose(pa) * pa * ns, ns);
    rep.derived_ranges = range_equal(pa * ctranspose(pa) * n_mat, n_mat) && range_equal(ctranspose(pb) * pb * ns, ns);
    return rep;
}

}  // namespace ginvlab
