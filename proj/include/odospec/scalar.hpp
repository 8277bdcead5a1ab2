#ifndef ODOSPEC_SCALAR_HPP
#define ODOSPEC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

#include "odospec/errors.hpp"

namespace odospec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using ComplexFloat = std::complex<double>;

/// Gaussian rational a + b·i with exact rational parts: the ground field for
/// all symbolic computation. Arithmetic never rounds; equality is decidable.
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(long long n) : re_(n) {}                       // NOLINT(google-explicit-constructor)
    ExactScalar(BigRational re) : re_(std::move(re)) {}        // NOLINT(google-explicit-constructor)
    ExactScalar(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar from_ratio(long long num, long long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        return ExactScalar(BigRational(BigInt(num), BigInt(den)));
    }
    static ExactScalar i() { return ExactScalar(BigRational(0), BigRational(1)); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    ExactScalar conj() const { return ExactScalar(re_, -im_); }

    // |z|^2 as a rational; exact.
    BigRational norm2() const { return re_ * re_ + im_ * im_; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar(-a.re_, -a.im_); }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        return a * b.inverse();
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    ExactScalar inverse() const {
        if (is_zero()) throw DomainError("division by the zero scalar");
        BigRational n = norm2();
        return ExactScalar(re_ / n, -im_ / n);
    }

    ExactScalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        ExactScalar r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ComplexFloat to_complex() const {
        return {re_.convert_to<double>(), im_.convert_to<double>()};
    }

    // Canonical text form: "3", "-3/4", "1/2+2/3i", "i", "-i", "5-i".
    std::string str() const;

    // Inverse of str() for a single rational part, e.g. "-7/2". No imaginary unit.
    static BigRational parse_rational(const std::string& s);

  private:
    BigRational re_{0};
    BigRational im_{0};
};

inline std::string rational_str(const BigRational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline std::string ExactScalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string im_part;
    if (im_ == 1) im_part = "i";
    else if (im_ == -1) im_part = "-i";
    else im_part = rational_str(im_) + "i";
    if (re_ == 0) return im_part;
    if (im_ > 0 && im_part[0] != '-') return rational_str(re_) + "+" + im_part;
    return rational_str(re_) + im_part;
}

inline BigRational ExactScalar::parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return BigRational(num, den);
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal '" + s + "'");
    }
}

} // namespace odospec

#endif
