#ifndef SL2VIR_LIE_HPP
#define SL2VIR_LIE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2vir/laurent.hpp"
#include "sl2vir/scalar.hpp"

namespace sl2vir {

/// Element of sl2 in the basis {e, h, f}.
class SL2Elt {
 public:
  enum Basis { E = 0, H = 1, F = 2 };

  SL2Elt() = default;
  SL2Elt(Scalar ce, Scalar ch, Scalar cf) : c_{std::move(ce), std::move(ch), std::move(cf)} {}

  static SL2Elt e() { return {1, 0, 0}; }
  static SL2Elt h() { return {0, 1, 0}; }
  static SL2Elt f() { return {0, 0, 1}; }
  static SL2Elt basis(int i);

  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }
  const Scalar& ce() const { return c_[E]; }
  const Scalar& ch() const { return c_[H]; }
  const Scalar& cf() const { return c_[F]; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  SL2Elt& operator+=(const SL2Elt& o);
  SL2Elt& operator-=(const SL2Elt& o);
  SL2Elt& operator*=(const Scalar& s);
  friend SL2Elt operator+(SL2Elt a, const SL2Elt& b) { return a += b; }
  friend SL2Elt operator-(SL2Elt a, const SL2Elt& b) { return a -= b; }
  friend SL2Elt operator*(SL2Elt a, const Scalar& s) { return a *= s; }
  friend SL2Elt operator*(const Scalar& s, SL2Elt a) { return a *= s; }
  SL2Elt operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const SL2Elt& a, const SL2Elt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SL2Elt& a, const SL2Elt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_{};
};

/// Element of the Virasoro algebra: finite combination of e_i plus a central part z.
class VirElt {
 public:
  VirElt() = default;

  static VirElt basis(long i, Scalar c = Scalar(1));
  static VirElt central(Scalar c = Scalar(1));
  /// Identification t^i <-> e_i.
  static VirElt from_laurent(const LaurentPoly& p);

  const std::map<long, Scalar>& terms() const { return terms_; }
  const Scalar& z() const { return z_; }
  LaurentPoly laurent_part() const { return LaurentPoly(terms_); }
  bool is_zero() const { return terms_.empty() && z_.is_zero(); }

  void add(long i, const Scalar& c);
  void add_central(const Scalar& c) { z_ += c; }

  VirElt& operator+=(const VirElt& o);
  VirElt& operator-=(const VirElt& o);
  VirElt& operator*=(const Scalar& s);
  friend VirElt operator+(VirElt a, const VirElt& b) { return a += b; }
  friend VirElt operator-(VirElt a, const VirElt& b) { return a -= b; }
  friend VirElt operator*(VirElt a, const Scalar& s) { return a *= s; }
  friend VirElt operator*(const Scalar& s, VirElt a) { return a *= s; }
  friend bool operator==(const VirElt& a, const VirElt& b) { return a.terms_ == b.terms_ && a.z_ == b.z_; }
  friend bool operator!=(const VirElt& a, const VirElt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<long, Scalar> terms_;
  Scalar z_;
};

/// [h,e] = 2e, [e,f] = h, [h,f] = -2f.
SL2Elt bracket_sl2(const SL2Elt& x, const SL2Elt& y);

/// [e_i, e_j] = (j - i) e_{i+j} + delta_{i+j,0} (i^3 - i)/12 z, with z central.
VirElt bracket_vir(const VirElt& x, const VirElt& y);

/// h -> 2 e_0, e -> e_1, f -> -e_{-1}.
VirElt embed_sl2(const SL2Elt& x);

/// Inverse of embed_sl2 on its image; nullopt for elements outside span{e_-1, e_0, e_1}.
std::optional<SL2Elt> pullback_sl2(const VirElt& x);

/// Basis {t^i f : supp(t^i f) within [-1,1]} of the intersection of the embedded
/// sl2 with Vir^f, ordered by decreasing i. Its size is 3 - deg f.
std::vector<VirElt> intersect_virf_sl2(const LaurentPoly& f);

}  // namespace sl2vir

#endif
