#include "ginvlab/exactnum.hpp"

#include <cctype>

namespace ginvlab {

namespace {

// Parses an optionally signed "p" or "p/q" with no whitespace. Returns false
// on any malformed input rather than letting GMP accept junk.
bool parse_rational(std::string_view s, mpq_class& out) {
    if (s.empty()) return false;
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && (d[0] == '+' || d[0] == '-')) d.remove_prefix(1);
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s.substr(0, slash);
    if (!digits_ok(num, true)) return false;
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    if (slash == std::string_view::npos) {
        out = mpq_class(mpz_class(n));
        return true;
    }
    std::string_view den = s.substr(slash + 1);
    if (!digits_ok(den, false)) return false;
    mpz_class d{std::string(den)};
    if (d == 0) return false;
    out = mpq_class(mpz_class(n), d);
    out.canonicalize();
    return true;
}

}  // namespace

GaussianRational::GaussianRational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    re_ = mpq_class(mpz_class(num), mpz_class(den));
    re_.canonicalize();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    auto fail = [&]() -> GaussianRational { throw ParseError("malformed scalar '" + std::string(text) + "'"); };

    if (s.back() != 'i') {
        mpq_class re;
        if (!parse_rational(s, re)) return fail();
        return {re, 0};
    }
    s.pop_back();
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    mpq_class re = 0;
    std::string im_part = s;
    if (split != std::string::npos) {
        if (!parse_rational(s.substr(0, split), re)) return fail();
        im_part = s.substr(split);
    }
    mpq_class im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else if (!parse_rational(im_part, im)) {
        return fail();
    }
    return {re, im};
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_real()) return {1 / re_, 0};
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_real() && b.is_real()) {
        re_ += a.re_ * b.re_;
        return;
    }
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string GaussianRational::to_string() const {
    std::string out = re_.get_str();
    if (is_real()) return out;
    if (sgn(im_) > 0) out += '+';
    out += im_.get_str();
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace ginvlab
