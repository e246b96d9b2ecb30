#include "sl2vir/scalar.hpp"

#include <cctype>
#include <ostream>

#include "sl2vir/error.hpp"

namespace sl2vir {

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

long Scalar::to_long() const {
  if (!is_integer() || !re_.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidParameter, "not a machine integer: " + to_string());
  return re_.get_num().get_si();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::InvalidParameter, "empty number");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'))
      throw Error(ErrorKind::InvalidParameter, "bad number '" + std::string(text) + "'");
  auto slash = text.find('/');
  if (slash != std::string_view::npos &&
      (slash == 0 || slash + 1 == text.size() || text.find('/', slash + 1) != std::string_view::npos))
    throw Error(ErrorKind::InvalidParameter, "bad fraction '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0)
    throw Error(ErrorKind::InvalidParameter, "bad number '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorKind::InvalidParameter, "empty scalar");

  Rational re(0), im(0);
  bool seen_re = false, seen_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorKind::InvalidParameter, "bad scalar '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw Error(ErrorKind::InvalidParameter, "bad scalar '" + s + "'");
    if (term.back() == 'i') {
      if (seen_im) throw Error(ErrorKind::InvalidParameter, "two imaginary parts in '" + s + "'");
      seen_im = true;
      std::string_view mag = term.substr(0, term.size() - 1);
      if (!mag.empty() && mag.back() == '*') mag.remove_suffix(1);
      else if (!mag.empty())
        throw Error(ErrorKind::InvalidParameter, "imaginary part must be written c/d*i in '" + s + "'");
      im = mag.empty() ? Rational(1) : parse_rational(mag);
      if (sign < 0) im = -im;
    } else {
      if (seen_re || seen_im)
        throw Error(ErrorKind::InvalidParameter, "real part must come first in '" + s + "'");
      seen_re = true;
      re = parse_rational(term);
      if (sign < 0) re = -re;
    }
    pos = end;
  }
  return Scalar(re, im);
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_text(re_);
  Rational mag = abs(im_);
  if (sgn(im_) < 0) out += "-";
  else if (!out.empty()) out += "+";
  if (mag != 1) out += rational_text(mag) + "*";
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

Scalar sqrt_exact(const Scalar& a) {
  // (p + qi)^2 = a + bi  <=>  p^2 = (a + |z|)/2, q^2 = (|z| - a)/2, 2pq = b.
  Rational modulus;
  if (!rational_sqrt(a.norm(), modulus))
    throw Error(ErrorKind::NotRepresentable, "no square root of " + a.to_string() + " in Q(i)");
  Rational p, q;
  if (!rational_sqrt((a.re() + modulus) / 2, p) || !rational_sqrt((modulus - a.re()) / 2, q))
    throw Error(ErrorKind::NotRepresentable, "no square root of " + a.to_string() + " in Q(i)");
  if (sgn(p) != 0) {
    if (sgn(a.im()) < 0) q = -q;
  }
  Scalar s(p, q);
  if (s * s != a) throw Error(ErrorKind::NotRepresentable, "no square root of " + a.to_string());
  return s;
}

}  // namespace sl2vir
