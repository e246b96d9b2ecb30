#ifndef SL2VIR_LAURENT_HPP
#define SL2VIR_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "sl2vir/scalar.hpp"

namespace sl2vir {

/// Sparse Laurent polynomial in t with Q(i) coefficients; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<long, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(long exponent, Scalar coeff = Scalar(1));
  static LaurentPoly constant(Scalar c) { return monomial(0, std::move(c)); }
  /// t - root
  static LaurentPoly linear(const Scalar& root);
  /// prod_i (t - roots[i].first)^roots[i].second
  static LaurentPoly from_roots(const std::vector<std::pair<Scalar, int>>& roots);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(long exponent) const;
  long min_exponent() const;  // requires !is_zero()
  long max_exponent() const;  // requires !is_zero()
  long width() const { return max_exponent() - min_exponent(); }

  void add_term(long exponent, const Scalar& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return laurent_mul(a, b); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplication by t^shift.
  LaurentPoly shifted(long shift) const;

  friend LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

  std::string to_string() const;

 private:
  Terms terms_;
};

/// The three complement windows {0}, {0,1}, {-1,0,1}; `degree` must be 1, 2 or 3.
std::vector<long> default_window(int degree);

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Writes t^n = q*f + r with r supported on `window`.
///
/// `f` must be supported on 0..k with nonzero constant and leading coefficient,
/// k in {1,2,3}, and `window` one of the default windows for k (BadPolynomial
/// otherwise). The quotient is unique: nonzero multiples of f have width >= k
/// while window-supported polynomials have width < k.
DivMod laurent_divmod_f(long n, const LaurentPoly& f, const std::vector<long>& window);
DivMod laurent_divmod_f(long n, const LaurentPoly& f);

/// Degree k of a valid polynomial f (see laurent_divmod_f); throws BadPolynomial otherwise.
int checked_degree(const LaurentPoly& f);

}  // namespace sl2vir

#endif
