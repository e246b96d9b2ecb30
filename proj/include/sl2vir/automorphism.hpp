#ifndef SL2VIR_AUTOMORPHISM_HPP
#define SL2VIR_AUTOMORPHISM_HPP

#include <array>
#include <string>

#include "sl2vir/lie.hpp"

namespace sl2vir {

/// Linear automorphism of sl2 stored as a 3x3 matrix in the (e, h, f)
/// coordinates; column j is the image of the j-th basis vector.
class Automorphism {
 public:
  using Matrix = std::array<std::array<Scalar, 3>, 3>;

  /// Throws InvalidParameter if the matrix is singular. The tag is recognised from the matrix.
  explicit Automorphism(Matrix m);

  static Automorphism identity();
  /// gamma_l(e) = e - l h - l^2 f, gamma_l(h) = h + 2 l f, gamma_l(f) = f.
  static Automorphism gamma(const Scalar& lambda);
  /// The two-parameter family; requires l1 != l2.
  static Automorphism gamma2(const Scalar& l1, const Scalar& l2);
  /// sigma(e) = f, sigma(f) = e, sigma(h) = -h.
  static Automorphism sigma();

  /// Builds from the images of e, h, f.
  static Automorphism from_images(const SL2Elt& ie, const SL2Elt& ih, const SL2Elt& if_);

  const Matrix& matrix() const { return m_; }
  const std::string& tag() const { return tag_; }
  Scalar determinant() const;

  SL2Elt apply(const SL2Elt& x) const;
  SL2Elt image(int basis) const { return apply(SL2Elt::basis(basis)); }

  Automorphism inverse() const;
  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;

  /// True when apply([x,y]) == [apply(x), apply(y)] on all basis pairs.
  bool preserves_brackets() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }

 private:
  Matrix m_;
  std::string tag_;
};

inline SL2Elt aut_apply(const Automorphism& a, const SL2Elt& x) { return a.apply(x); }

/// Standard form of the matrix, if it belongs to one of the named families:
/// `identity`, `sigma`, `gamma(l)`, `gamma2(l1,l2)` or the inverse of one of those.
std::string recognise_automorphism(const Automorphism::Matrix& m);

enum class Subalgebra1D { NLambda, NMinus, HLambda, HLambda12 };
enum class Subalgebra2D { BPlus, BMinus, BLambda };

const char* to_string(Subalgebra1D t);
const char* to_string(Subalgebra2D t);

struct Classification1D {
  Subalgebra1D type;
  /// gamma with gamma(std) spanning the subalgebra; std = e for n types, h for h types.
  Automorphism automorphism;
  /// Parameters of the family (lambda, or lambda1 and lambda2).
  std::vector<Scalar> params;
  /// The normalised basis vector of the subalgebra.
  SL2Elt basis;
  /// gamma(std) = scale * input.
  Scalar scale;
};

/// Classifies span{x} as n_l, n^-, h_l or h_{l1,l2}.
///
/// A nonzero e-coordinate is normalised to 1, giving e - beta h - delta f:
/// delta = beta^2 gives n_beta, otherwise h_{l1,l2} with l = beta +- sqrt(beta^2 - delta).
/// With no e-component, h - delta f gives h_{-delta/2} and f gives n^-.
/// Throws NotRepresentable when the square root leaves Q(i), InvalidParameter for x = 0.
Classification1D classify_subalgebra_1d(const SL2Elt& x);

struct Classification2D {
  Subalgebra2D type;
  Automorphism automorphism;  // gamma with gamma(b+) equal to the subalgebra
  Scalar lambda;              // meaningful for BLambda
};

/// Classifies span{x, y} as b+, b- or b_l = gamma_l(b+).
/// Throws NotASubalgebra if x, y are dependent or the span is not bracket-closed.
Classification2D classify_subalgebra_2d(const SL2Elt& x, const SL2Elt& y);

/// Rank of a family of sl2 elements.
int sl2_rank(const std::vector<SL2Elt>& elts);

}  // namespace sl2vir

#endif
