#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ginvlab/matrix.hpp"

namespace ginvlab {

/// The eight {i,...,j}-inverse classes, ordered as they are indexed in the
/// three-factor case table.
enum class GInvClass : std::uint8_t { G1, G12, G13, G14, G123, G124, G134, MP };

inline constexpr std::array<GInvClass, 8> kAllClasses{GInvClass::G1,   GInvClass::G12,  GInvClass::G13,  GInvClass::G14,
                                                      GInvClass::G123, GInvClass::G124, GInvClass::G134, GInvClass::MP};

/// "1", "12", ..., "134", "mp"
std::string_view class_name(GInvClass cls);
/// Inverse of class_name; also accepts "dagger" and "1234" for MP.
GInvClass parse_class(std::string_view name);
/// Whether Penrose equation eq (1..4) is part of the class definition.
bool class_requires(GInvClass cls, int eq);
/// Bitmask of class membership, bit i for kAllClasses[i].
using ClassSet = std::uint8_t;
inline constexpr ClassSet bit(GInvClass c) { return static_cast<ClassSet>(1u << static_cast<unsigned>(c)); }

/// Free parameters of the class families, each n x m for an m x n matrix.
struct GInvParams {
    Matrix u, u1, u2;
};

bool is_hermitian(const Matrix& a);

/// Moore-Penrose inverse from a full-rank factorization. The four Penrose
/// equations are checked before returning (IdentityViolated otherwise).
Matrix pinv(const Matrix& a);
/// E_A = I - A A^dagger
Matrix proj_left(const Matrix& a);
/// F_A = I - A^dagger A
Matrix proj_right(const Matrix& a);

/// Caches A^dagger, E_A and F_A so that many members of the classes of one
/// matrix can be generated cheaply.
class Family {
public:
    explicit Family(Matrix a);

    const Matrix& a() const { return a_; }
    const Matrix& dagger() const { return dagger_; }
    const Matrix& e() const { return e_; }
    const Matrix& f() const { return f_; }

    Matrix make(GInvClass cls, const GInvParams& p) const;
    GInvParams sample_params(std::uint64_t seed) const;
    Matrix sample(GInvClass cls, std::uint64_t seed) const;

private:
    Matrix a_, dagger_, e_, f_;
};

Matrix make_ginverse(const Matrix& a, GInvClass cls, const GInvParams& p);
Matrix sample_ginverse(const Matrix& a, GInvClass cls, std::uint64_t seed);

/// Membership oracle for the classes of a fixed matrix A. Every query is
/// decided twice, from the Penrose equations and from the rank/equation
/// characterizations, and a disagreement throws CharacterizationMismatch.
class MemberTest {
public:
    explicit MemberTest(Matrix a);

    const Matrix& a() const { return a_; }
    bool contains(const Matrix& g, GInvClass cls) const;
    /// All eight memberships at once.
    ClassSet classes(const Matrix& g) const;

private:
    struct Facts;
    Facts facts(const Matrix& g, bool need_rank, bool need_left, bool need_right, bool need_23) const;

    Matrix a_, a_star_, a_star_a_, a_a_star_;
    std::size_t rank_a_;
};

bool is_member(const Matrix& g, const Matrix& a, GInvClass cls);

/// R(A) = R(A*); square matrices only.
bool is_ep(const Matrix& a);

struct IdentityCheck {
    std::string name;
    bool pass;
};
/// The standard Moore-Penrose identities (adjoint and double dagger, the
/// projector forms, range and rank equalities) evaluated exactly.
std::vector<IdentityCheck> dagger_identities_check(const Matrix& a);

}  // namespace ginvlab
