#ifndef SL2VIR_PBW_HPP
#define SL2VIR_PBW_HPP

#include <compare>
#include <map>
#include <string>

#include "sl2vir/automorphism.hpp"
#include "sl2vir/lie.hpp"
#include "sl2vir/scalar.hpp"

namespace sl2vir {

/// PBW monomial f^a h^b e^c of U(sl2).
struct SL2Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return a + b + c; }

  /// Degree-lex order: total degree first, then the e-exponent, then the h-exponent.
  friend std::strong_ordering operator<=>(const SL2Monomial& x, const SL2Monomial& y) {
    if (auto d = x.degree() <=> y.degree(); d != 0) return d;
    if (auto d = x.c <=> y.c; d != 0) return d;
    if (auto d = x.b <=> y.b; d != 0) return d;
    return x.a <=> y.a;
  }
  friend bool operator==(const SL2Monomial&, const SL2Monomial&) = default;

  std::string to_string() const;
};

/// Element of U(sl2), always in PBW normal form (order f < h < e).
class UEnvElt {
 public:
  using Terms = std::map<SL2Monomial, Scalar>;

  UEnvElt() = default;
  explicit UEnvElt(Terms terms);

  static UEnvElt one() { return monomial({0, 0, 0}); }
  static UEnvElt scalar(const Scalar& s) { return monomial({0, 0, 0}, s); }
  static UEnvElt monomial(SL2Monomial m, Scalar c = Scalar(1));
  static UEnvElt from_sl2(const SL2Elt& x);
  static UEnvElt e() { return monomial({0, 0, 1}); }
  static UEnvElt h() { return monomial({0, 1, 0}); }
  static UEnvElt f() { return monomial({1, 0, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Scalar coeff(const SL2Monomial& m) const;

  void add_term(const SL2Monomial& m, const Scalar& c);

  UEnvElt& operator+=(const UEnvElt& o);
  UEnvElt& operator-=(const UEnvElt& o);
  UEnvElt& operator*=(const Scalar& s);
  friend UEnvElt operator+(UEnvElt a, const UEnvElt& b) { return a += b; }
  friend UEnvElt operator-(UEnvElt a, const UEnvElt& b) { return a -= b; }
  friend UEnvElt operator*(UEnvElt a, const Scalar& s) { return a *= s; }
  friend UEnvElt operator*(const Scalar& s, UEnvElt a) { return a *= s; }
  friend bool operator==(const UEnvElt& a, const UEnvElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UEnvElt& a, const UEnvElt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Left multiplication by a single generator (SL2Elt::E, H or F), straightened
/// by single adjacent swaps.
UEnvElt left_mul_generator(int gen, const UEnvElt& u);

/// Normal form of the product u*v.
UEnvElt nf_multiply(const UEnvElt& u, const UEnvElt& v);

/// Integer power of u.
UEnvElt nf_power(const UEnvElt& u, int n);

/// The Casimir 4fe + h^2 + 2h + 1.
UEnvElt casimir_elt();

/// Multiplicative extension of an automorphism to U(sl2).
UEnvElt aut_extend(const Automorphism& a, const UEnvElt& u);

}  // namespace sl2vir

#endif
