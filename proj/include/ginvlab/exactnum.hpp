#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "ginvlab/errors.hpp"

namespace ginvlab {

/// Exact complex scalar re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept in lowest terms with a positive denominator after
/// every operation, so equality is a plain structural comparison.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by design of the scalar field
    GaussianRational(long num, long den);
    GaussianRational(mpq_class re, mpq_class im = 0);

    /// Parses "p/q", "p/q+r/s i", "p/q-r/s i", "r/s i" (whitespace ignored).
    static GaussianRational parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws DivisionByZero for 0.
    GaussianRational inv() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    /// this += a * b without a temporary for the product.
    void add_product(const GaussianRational& a, const GaussianRational& b);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical text form, the inverse of parse().
    std::string to_string() const;

private:
    mpq_class re_;
    mpq_class im_;
};

inline GaussianRational add(const GaussianRational& a, const GaussianRational& b) { return a + b; }
inline GaussianRational sub(const GaussianRational& a, const GaussianRational& b) { return a - b; }
inline GaussianRational mul(const GaussianRational& a, const GaussianRational& b) { return a * b; }
inline GaussianRational neg(const GaussianRational& a) { return -a; }
inline GaussianRational inv(const GaussianRational& a) { return a.inv(); }
inline GaussianRational conj(const GaussianRational& a) { return a.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace ginvlab
