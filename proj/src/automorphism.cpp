#include "sl2vir/automorphism.hpp"

#include "sl2vir/error.hpp"

namespace sl2vir {

namespace {

using Matrix = Automorphism::Matrix;

Matrix from_columns(const SL2Elt& c0, const SL2Elt& c1, const SL2Elt& c2) {
  Matrix m;
  const SL2Elt* cols[] = {&c0, &c1, &c2};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = (*cols[c])[r];
  return m;
}

Scalar det3(const Matrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix inverse3(const Matrix& m) {
  Scalar d = det3(m);
  if (d.is_zero()) throw Error(ErrorKind::InvalidParameter, "singular automorphism matrix");
  Matrix inv;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // adjugate: cofactor of (c, r)
      int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      inv[r][c] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  }
  return inv;
}

Matrix gamma_matrix(const Scalar& l) {
  return from_columns(SL2Elt(1, -l, -(l * l)), SL2Elt(0, 1, Scalar(2) * l), SL2Elt(0, 0, 1));
}

Matrix gamma2_matrix(const Scalar& l1, const Scalar& l2) {
  Scalar d = (l2 - l1).inverse();
  return from_columns(SL2Elt(1, -l1, -(l1 * l1)) * d, SL2Elt(-2, l1 + l2, Scalar(2) * l1 * l2) * d,
                      SL2Elt(-1, l2, l2 * l2) * d);
}

Matrix sigma_matrix() { return from_columns(SL2Elt::f(), -SL2Elt::h(), SL2Elt::e()); }

Matrix identity_matrix() { return from_columns(SL2Elt::e(), SL2Elt::h(), SL2Elt::f()); }

std::string recognise_direct(const Matrix& m) {
  if (m == identity_matrix()) return "identity";
  if (m == sigma_matrix()) return "sigma";
  // gamma(l): e-column (1, -l, -l^2).
  if (m[0][0].is_one()) {
    Scalar l = -m[1][0];
    if (m == gamma_matrix(l)) return "gamma(" + l.to_string() + ")";
  }
  // gamma2(l1,l2): e-column (1, -l1, -l1^2)/(l2 - l1), f-column (-1, l2, l2^2)/(l2 - l1).
  if (!m[0][0].is_zero()) {
    Scalar d = m[0][0].inverse();
    Scalar l1 = -m[1][0] * d;
    Scalar l2 = m[1][2] * d;
    if (l1 != l2 && l2 - l1 == d && m == gamma2_matrix(l1, l2))
      return "gamma2(" + l1.to_string() + "," + l2.to_string() + ")";
  }
  return {};
}

}  // namespace

std::string recognise_automorphism(const Matrix& m) {
  std::string direct = recognise_direct(m);
  if (!direct.empty()) return direct;
  std::string inv = recognise_direct(inverse3(m));
  if (!inv.empty()) return inv + "^-1";
  return "composite";
}

Automorphism::Automorphism(Matrix m) : m_(std::move(m)) {
  if (det3(m_).is_zero()) throw Error(ErrorKind::InvalidParameter, "singular automorphism matrix");
  tag_ = recognise_automorphism(m_);
}

Automorphism Automorphism::identity() { return Automorphism(identity_matrix()); }
Automorphism Automorphism::gamma(const Scalar& lambda) { return Automorphism(gamma_matrix(lambda)); }

Automorphism Automorphism::gamma2(const Scalar& l1, const Scalar& l2) {
  if (l1 == l2) throw Error(ErrorKind::InvalidParameter, "gamma2 requires distinct parameters");
  return Automorphism(gamma2_matrix(l1, l2));
}

Automorphism Automorphism::sigma() { return Automorphism(sigma_matrix()); }

Automorphism Automorphism::from_images(const SL2Elt& ie, const SL2Elt& ih, const SL2Elt& if_) {
  return Automorphism(from_columns(ie, ih, if_));
}

Scalar Automorphism::determinant() const { return det3(m_); }

SL2Elt Automorphism::apply(const SL2Elt& x) const {
  SL2Elt out;
  for (int r = 0; r < 3; ++r) {
    Scalar acc;
    for (int c = 0; c < 3; ++c)
      if (!x[c].is_zero() && !m_[r][c].is_zero()) acc += m_[r][c] * x[c];
    out[r] = acc;
  }
  return out;
}

Automorphism Automorphism::inverse() const { return Automorphism(inverse3(m_)); }

Automorphism Automorphism::compose(const Automorphism& other) const {
  Matrix p;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Scalar acc;
      for (int k = 0; k < 3; ++k) acc += m_[r][k] * other.m_[k][c];
      p[r][c] = acc;
    }
  return Automorphism(p);
}

bool Automorphism::preserves_brackets() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SL2Elt x = SL2Elt::basis(i), y = SL2Elt::basis(j);
      if (apply(bracket_sl2(x, y)) != bracket_sl2(apply(x), apply(y))) return false;
    }
  return true;
}

const char* to_string(Subalgebra1D t) {
  switch (t) {
    case Subalgebra1D::NLambda: return "n_lambda";
    case Subalgebra1D::NMinus: return "n_minus";
    case Subalgebra1D::HLambda: return "h_lambda";
    case Subalgebra1D::HLambda12: return "h_lambda1_lambda2";
  }
  return "?";
}

const char* to_string(Subalgebra2D t) {
  switch (t) {
    case Subalgebra2D::BPlus: return "b_plus";
    case Subalgebra2D::BMinus: return "b_minus";
    case Subalgebra2D::BLambda: return "b_lambda";
  }
  return "?";
}

namespace {

// Returns s with a = s * b, assuming a and b are parallel and b != 0.
Scalar parallel_ratio(const SL2Elt& a, const SL2Elt& b) {
  for (int i = 0; i < 3; ++i)
    if (!b[i].is_zero()) {
      Scalar s = a[i] / b[i];
      if (a != b * s) break;
      return s;
    }
  throw Error(ErrorKind::InvalidParameter, "classification produced a non-parallel generator");
}

}  // namespace

Classification1D classify_subalgebra_1d(const SL2Elt& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidParameter, "zero element spans no subalgebra");
  if (!x.ce().is_zero()) {
    SL2Elt n = x * x.ce().inverse();
    Scalar beta = -n.ch();
    Scalar delta = -n.cf();
    Scalar disc = beta * beta - delta;
    if (disc.is_zero()) {
      Automorphism g = Automorphism::gamma(beta);
      return {Subalgebra1D::NLambda, g, {beta}, n, parallel_ratio(g.image(SL2Elt::E), x)};
    }
    Scalar root = sqrt_exact(disc);
    Scalar l1 = beta + root, l2 = beta - root;
    Automorphism g = Automorphism::gamma2(l1, l2);
    return {Subalgebra1D::HLambda12, g, {l1, l2}, n, parallel_ratio(g.image(SL2Elt::H), x)};
  }
  if (!x.ch().is_zero()) {
    SL2Elt n = x * x.ch().inverse();
    Scalar lambda = n.cf() / Scalar(2);  // h - delta f with lambda = -delta/2
    Automorphism g = Automorphism::gamma(lambda);
    return {Subalgebra1D::HLambda, g, {lambda}, n, parallel_ratio(g.image(SL2Elt::H), x)};
  }
  Automorphism g = Automorphism::sigma();
  return {Subalgebra1D::NMinus, g, {}, SL2Elt::f(), parallel_ratio(g.image(SL2Elt::E), x)};
}

int sl2_rank(const std::vector<SL2Elt>& elts) {
  std::vector<SL2Elt> rows = elts;
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && !rows[r][col].is_zero()) rows[r] -= rows[rank] * (rows[r][col] / rows[rank][col]);
    ++rank;
  }
  return rank;
}

Classification2D classify_subalgebra_2d(const SL2Elt& x, const SL2Elt& y) {
  if (sl2_rank({x, y}) != 2) throw Error(ErrorKind::NotASubalgebra, "elements are linearly dependent");
  if (sl2_rank({x, y, bracket_sl2(x, y)}) != 2)
    throw Error(ErrorKind::NotASubalgebra, "span is not closed under the bracket");
  // Normal vector n with span{x,y} = {v : n.v = 0}; b_l has n ~ (l^2, 2l, -1),
  // b+ is the case l = 0 and b- has n ~ (1, 0, 0).
  SL2Elt n(x.ch() * y.cf() - x.cf() * y.ch(), x.cf() * y.ce() - x.ce() * y.cf(),
           x.ce() * y.ch() - x.ch() * y.ce());
  if (n.cf().is_zero()) {
    if (!n.ch().is_zero())
      throw Error(ErrorKind::NotASubalgebra, "span is not a Borel subalgebra");
    return {Subalgebra2D::BMinus, Automorphism::sigma(), Scalar()};
  }
  n *= -n.cf().inverse();
  Scalar lambda = n.ch() / Scalar(2);
  if (n.ce() != lambda * lambda) throw Error(ErrorKind::NotASubalgebra, "span is not a Borel subalgebra");
  if (lambda.is_zero()) return {Subalgebra2D::BPlus, Automorphism::identity(), Scalar()};
  return {Subalgebra2D::BLambda, Automorphism::gamma(lambda), lambda};
}

}  // namespace sl2vir
