#pragma once

// Reverse-order laws for generalized inverses of products AB and ABC.
//
// The three-factor table relates {M^(X)} and {C^-1 B^(Y) A^-1} for M = ABC with
// A, C nonsingular. Each cell is decided twice: by the closed-form predicate
// from the catalog, and empirically from sampled class members.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ginvlab/exactnum.hpp"
#include "ginvlab/ginverse.hpp"

namespace ginvlab {

enum class SetRelation : std::uint8_t { IntersectNonempty, Superset, Subset, Equal, ContainsDagger };

/// "cap", "supseteq", "subseteq", "eq", "dagger"
std::string_view relation_name(SetRelation rel);
SetRelation parse_relation(std::string_view name);

enum class Evidence : std::uint8_t { ConfirmedTrue, ConfirmedFalse, ConsistentTrue, Inconclusive };
std::string_view evidence_name(Evidence e);

enum class ExecutionPolicy : std::uint8_t { Serial, Parallel };

struct NamedMatrix {
    std::string name;
    Matrix value;
};

// ---------------------------------------------------------------- two factors

/// The nine constructions of a {1}- (cls = G1) or {1,2}-inverse (cls = G12) of
/// AB from inverses of A, B and related products. "^-" is an inverse of class
/// cls; one symbol always maps to the same sample. Throws UnsupportedClass for
/// other classes.
std::vector<NamedMatrix> mixed_rol_candidates_two(const Matrix& a, const Matrix& b, GInvClass cls,
                                                  std::uint64_t seed);

struct Construction {
    Matrix g;
    bool member = false;
};

/// B^- A^- - B^- P (QP)^- Q A^- with P = I - A^- A, Q = I - B B^-. For G1 the
/// result is always in {(AB)^(1)}; for G12 all inverses are {1,2}-inverses and
/// member reports whether the result lies in {(AB)^(1,2)}.
Construction huang_construction_two(const Matrix& a, const Matrix& b, GInvClass cls, std::uint64_t seed);
/// r(AB) = r(A) = r(B)
bool huang_condition_two_12(const Matrix& a, const Matrix& b);

// -------------------------------------------------------------- three factors

/// The 23 constructions of an inverse of M = ABC, cls in {G1, G12}.
std::vector<NamedMatrix> mixed_rol_candidates_three(const Matrix& a, const Matrix& b, const Matrix& c,
                                                    GInvClass cls, std::uint64_t seed);
/// (BC)^- B (AB)^- - (BC)^- B P (QBP)^- Q B (AB)^- with P = I - (AB)^- AB and
/// Q = I - BC (BC)^-.
Construction huang_construction_three(const Matrix& a, const Matrix& b, const Matrix& c, GInvClass cls,
                                      std::uint64_t seed);
/// r(ABC) = r(AB) = r(BC)
bool huang_condition_three_12(const Matrix& a, const Matrix& b, const Matrix& c);

// --------------------------------------------------------- nonsingular sandwich

/// A (m x m) and C (n x n) nonsingular, B m x n, M = ABC.
class TripleInstance {
public:
    /// Throws DimensionMismatch or SingularMatrix.
    TripleInstance(Matrix a, Matrix b, Matrix c);

    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Matrix& c() const { return c_; }
    const Matrix& m_product() const { return m_; }
    const Matrix& a_inv() const { return a_inv_; }
    const Matrix& c_inv() const { return c_inv_; }
    std::size_t rows() const { return b_.rows(); }
    std::size_t cols() const { return b_.cols(); }
    std::size_t rank_b() const { return rank_b_; }
    /// FNV-1a of the printed matrices; stable across platforms.
    std::uint64_t hash() const { return hash_; }

    /// R(A*AB) = R(B)
    bool left_condition() const { return left_; }
    /// R(CC*B*) = R(B*)
    bool right_condition() const { return right_; }

private:
    Matrix a_, b_, c_, m_, a_inv_, c_inv_;
    std::size_t rank_b_ = 0;
    std::uint64_t hash_ = 0;
    bool left_ = false, right_ = false;
};

/// Conditions that appear on the right of the table entries.
enum class Condition : std::uint8_t {
    Always,
    RankMin,          // r(B) = min(m, n)
    RankM,            // r(B) = m
    RankN,            // r(B) = n
    RankMN,           // r(B) = m = n
    RankMorN,         // r(B) = m or r(B) = n
    ZeroOrRankM,
    ZeroOrRankN,
    ZeroOrRankMN,
    Left,             // R(A*AB) = R(B)
    Right,            // R(CC*B*) = R(B*)
    LeftRight,
    LeftRankMin,
    RightRankMin,
    LeftRankN,
    RightRankM,
    ZeroOrLeftRankN,
    ZeroOrRightRankM,
};

std::string_view condition_text(Condition c);
bool holds(Condition c, const TripleInstance& inst);

struct CaseEntry {
    std::string_view id;
    GInvClass lhs, rhs;
    SetRelation relation;
    Condition condition;
    std::string_view note;
};

/// Every stated cell, in table order. Labels are kept as printed.
std::span<const CaseEntry> case_catalog();
/// First catalog entry for the triple; throws UnknownCase.
const CaseEntry& find_case(GInvClass lhs, GInvClass rhs, SetRelation rel);
const CaseEntry& find_case(std::string_view id, SetRelation rel);

bool analytic_case(const TripleInstance& inst, GInvClass lhs, GInvClass rhs, SetRelation rel);

struct Witness {
    std::uint64_t seed = 0;
    std::string role;  // "witness" or "counterexample"
    Matrix g;
};

struct CaseReport {
    std::string case_id;
    GInvClass lhs = GInvClass::G1, rhs = GInvClass::G1;
    SetRelation relation = SetRelation::Equal;
    std::string condition;
    std::string note;
    bool analytic = false;
    Evidence empirical = Evidence::Inconclusive;
    std::size_t witness_count = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<Witness> witnesses;

    /// Analytic verdict contradicted by exact evidence.
    bool violation() const;
};

struct SurveyOptions {
    std::size_t budget = 64;
    std::uint64_t seed = 0;
    ExecutionPolicy policy = ExecutionPolicy::Parallel;
    /// Decide empty intersections with the exact linear solver instead of
    /// reporting them Inconclusive.
    bool exact_intersect = true;
};

/// Sampled members of both sides of the table for one instance, with the
/// membership of every sample in every class of the opposite side.
class SamplePool {
public:
    struct Sample {
        std::uint64_t seed;
        Matrix g;        // a member of the sampled side (n x m)
        ClassSet other;  // classes of the opposite side that contain g
    };

    /// lhs_mask / rhs_mask select which classes are sampled.
    SamplePool(const TripleInstance& inst, const SurveyOptions& opt, ClassSet lhs_mask = 0xff,
               ClassSet rhs_mask = 0xff);

    const TripleInstance& instance() const { return *inst_; }
    const SurveyOptions& options() const { return opt_; }
    /// Members G of {M^(X)}; other = {Y : CGA in B^(Y)}.
    const std::vector<Sample>& lhs(GInvClass x) const { return lhs_[static_cast<int>(x)]; }
    /// Members C^-1 H A^-1 with H in {B^(Y)}; other = {X : member of M^(X)}.
    const std::vector<Sample>& rhs(GInvClass y) const { return rhs_[static_cast<int>(y)]; }

private:
    const TripleInstance* inst_;
    SurveyOptions opt_;
    std::vector<Sample> lhs_[8], rhs_[8];
};

/// Exact search for H in {B^(Y)} with C^-1 H A^-1 in {M^(X)}. Returns the
/// member of {M^(X)} found, or an empty optional when the intersection is empty.
std::optional<Matrix> intersect_witness(const TripleInstance& inst, GInvClass lhs, GInvClass rhs);

/// Empirical verdict for one cell, with its evidence.
CaseReport evaluate_case(const SamplePool& pool, const CaseEntry& entry);
Evidence empirical_case(const TripleInstance& inst, GInvClass lhs, GInvClass rhs, SetRelation rel,
                        const SurveyOptions& opt = {});

class TheoremViolation : public Error {
public:
    TheoremViolation(CaseReport report, const TripleInstance& inst);
    const CaseReport& report() const { return report_; }
    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Matrix& c() const { return c_; }

private:
    CaseReport report_;
    Matrix a_, b_, c_;
};

/// All catalog cells for the instance, in catalog order; no checking.
std::vector<CaseReport> survey_reports(const TripleInstance& inst, const SurveyOptions& opt = {});
/// survey_reports, throwing TheoremViolation for the first violating cell.
std::vector<CaseReport> survey(const TripleInstance& inst, const SurveyOptions& opt = {});

/// Random instance for sweeps. B has rank r; A and C are (I + L)(I + U).
TripleInstance random_instance(std::uint64_t seed, std::size_t m, std::size_t n, std::size_t r,
                               bool complex = false);

// ------------------------------------------------------- dagger of the product

/// The equivalent forms of "M^dagger = C^-1 B^dagger A^-1".
struct HartwigCheck {
    bool dagger_rol;   // pinv(M) == C^-1 pinv(B) A^-1
    bool ranges_b;     // R(A*AB) = R(B) and R(CC*B*) = R(B*)
    bool ranges_m;     // R(AA*M) = R(M) and R(C*CM*) = R(M*)
    bool projectors;   // (A*AB)(A*AB)^+ = BB^+ and (BCC*)^+(BCC*) = B^+B
    bool ep_b;         // A*ABB* and B*BCC* are EP
    bool ep_m;         // AA*MM* and M*MC*C are EP

    bool consistent() const {
        return dagger_rol == ranges_b && dagger_rol == ranges_m && dagger_rol == projectors && dagger_rol == ep_b &&
               dagger_rol == ep_m;
    }
};
HartwigCheck hartwig_characterizations(const TripleInstance& inst);

// ------------------------------------------------------------------ corollaries

/// The similarity case M = A B A^-1, i.e. the table with C = A^-1. When A is
/// unitary the rhs is {A B^(Y) A*}.
CaseReport covariance_case(const Matrix& a, const Matrix& b, GInvClass lhs, GInvClass rhs, SetRelation rel,
                           const SurveyOptions& opt = {});

/// Whether (A B A*)^(X) sets equal A B^(X) A* for every class, sampled both ways
/// (A unitary). Returns one report per class.
std::vector<CaseReport> unitary_similarity(const Matrix& a, const Matrix& b, const SurveyOptions& opt = {});

/// (A + B)^dagger from N = [[A, B], [B, A]] as 1/2 [I, I] N^dagger [I; I].
/// Throws IdentityViolated when it differs from pinv(A + B).
Matrix sum_pinv_via_block(const Matrix& a, const Matrix& b);
/// The seven set equalities {(A+B)^(X)} = {1/2 [I,I] N^(X) [I;I]}, sampled from
/// N's side and tested against A + B. One report per class.
std::vector<CaseReport> sum_block_classes(const Matrix& a, const Matrix& b, const SurveyOptions& opt = {});

struct IdempotentReport {
    GaussianRational lambda;           // alpha beta / ((1 + alpha)(1 + beta))
    bool factorization = false;        // I + aA + bB = (I + aA)(I - lambda AB)(I + bB)
    bool factorization_swapped = false;  // same with (I + bB)(I - lambda BA)(I + aA)
    bool factorization_minus = false;  // the identity with (1 - alpha)(1 - beta) in lambda
    CaseReport g1_equality;            // {(I - lambda AB)^(1)} = {(I + bB) N^(1) (I + aA)}
    bool dagger_rol = false;           // the MP version holds on this instance
    bool stated_ranges = false;        // the range pair as printed
    bool derived_ranges = false;       // the range pair obtained from the table with A, C swapped in
};

/// A, B idempotent (NotIdempotent); alpha, beta not in {-1, 0} (InvalidScalar).
IdempotentReport idempotent_rol(const Matrix& a, const Matrix& b, const GaussianRational& alpha,
                                const GaussianRational& beta, const SurveyOptions& opt = {});

}  // namespace ginvlab
