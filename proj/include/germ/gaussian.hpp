#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "germ/rational.hpp"

namespace germ {

/// Element of Q(i): re + im*i with exact rational parts. The coefficient
/// field of everything in this library.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |x|^2 = x * conj(x), always a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("gaussian rational: division by zero");
        Rational n = b.norm2();
        GaussianRational num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_ = 0;
    Rational im_ = 0;
};

inline GaussianRational pow(const GaussianRational& x, unsigned k) {
    GaussianRational r(1);
    GaussianRational base = x;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

/// Square root of a rational inside Q(i): s with s^2 = q when q = s^2 or
/// q = -(s^2) for some rational s >= 0 (s respectively s*i). Absent when
/// |q| is not a rational square.
inline std::optional<GaussianRational> sqrt_if_exact(const Rational& q) {
    if (q >= 0) {
        auto s = rational_sqrt(q);
        if (!s) return std::nullopt;
        return GaussianRational(*s);
    }
    auto s = rational_sqrt(-q);
    if (!s) return std::nullopt;
    return GaussianRational(Rational(0), *s);
}

/// Renders "0", "3/2", "i", "-2i", "1+2i", "1/2-3i".
inline std::string to_string(const GaussianRational& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.re() != 0) out += to_string(x.re());
    if (x.im() != 0) {
        if (x.im() > 0 && !out.empty()) out += "+";
        if (x.im() == -1)
            out += "-";
        else if (x.im() != 1)
            out += to_string(x.im());
        out += "i";
    }
    return out;
}

/// Parses the format produced by to_string: a rational, "bi", or "a+bi"/"a-bi"
/// where a and b are rationals and a bare "i" means coefficient 1.
inline GaussianRational parse_gaussian(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("gaussian rational: empty string");
    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last top-level +/- that separates real and imaginary parts.
    // A sign at position 0 or right after '/' belongs to the imaginary term.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            split = k;
            break;
        }
    }
    auto imag_part = [](std::string t) {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        if (t.front() == '+') t.erase(0, 1);
        return parse_rational(t);
    };
    if (split == std::string::npos) return {Rational(0), imag_part(body)};
    return {parse_rational(body.substr(0, split)),
            imag_part(body.substr(split))};
}

}  // namespace germ
