#ifndef SL2VIR_SCALAR_HPP
#define SL2VIR_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sl2vir {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are kept as canonical GMP rationals (lowest terms, positive
/// denominator), so structural equality is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit from integer literals
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar frac(long num, long den);

  /// Parses `a/b+c/d*i`; the imaginary part is optional, `i` alone is allowed.
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  /// True when the value is a (real) integer.
  bool is_integer() const { return is_real() && re_.get_den() == 1; }
  /// The integer value; requires is_integer().
  long to_long() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  /// |z|^2 = a^2 + b^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (real part, then imaginary part); used for deterministic sorting only.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Integer power; negative exponents invert (DivisionByZero for 0).
  Scalar pow(long n) const;

  /// Canonical text form, e.g. `0`, `3/2`, `-i`, `1/2-3/4*i`.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square root in Q(i): the root with nonnegative real part, or with
/// nonnegative imaginary part when the real part vanishes.
/// Throws NotRepresentable when `a` is not a square in Q(i).
Scalar sqrt_exact(const Scalar& a);

/// Square root of a nonnegative rational, when it is itself rational.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace sl2vir

#endif
