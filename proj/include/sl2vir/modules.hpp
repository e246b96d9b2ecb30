#ifndef SL2VIR_MODULES_HPP
#define SL2VIR_MODULES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sl2vir/automorphism.hpp"
#include "sl2vir/laurent.hpp"
#include "sl2vir/lie.hpp"
#include "sl2vir/linalg.hpp"
#include "sl2vir/pbw.hpp"

namespace sl2vir {

/// Family-specific basis index; see the individual module classes for its layout.
using BasisKey = std::vector<long>;

/// Finite combination of basis vectors of one module.
class ModVec {
 public:
  using Terms = SparseVec<BasisKey>;

  ModVec() = default;
  explicit ModVec(Terms terms);
  static ModVec basis(BasisKey key, Scalar c = Scalar(1));

  const Terms& terms() const { return terms_; }
  Terms& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const BasisKey& k) const;
  void add_term(const BasisKey& k, const Scalar& c);

  ModVec& operator+=(const ModVec& o);
  ModVec& operator-=(const ModVec& o);
  ModVec& operator*=(const Scalar& s);
  friend ModVec operator+(ModVec a, const ModVec& b) { return a += b; }
  friend ModVec operator-(ModVec a, const ModVec& b) { return a -= b; }
  friend ModVec operator*(ModVec a, const Scalar& s) { return a *= s; }
  friend ModVec operator*(const Scalar& s, ModVec a) { return a *= s; }
  friend bool operator==(const ModVec& a, const ModVec& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ModVec& a, const ModVec& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

std::string key_to_string(const BasisKey& k);

enum class Family { Whittaker, X, Xbar, Vdense, Verma, LowVerma, VirPoly, Induced, Twist, Tensor };
const char* to_string(Family f);

class Module;
using ModuleHandle = std::shared_ptr<const Module>;

/// An sl2-module (optionally a Vir-module) with a fixed basis indexed by BasisKey.
/// Modules are immutable once constructed and safe to share across threads.
class Module {
 public:
  virtual ~Module() = default;

  virtual Family family() const = 0;
  virtual std::string name() const = 0;
  virtual nlohmann::json to_json() const = 0;

  virtual int key_arity() const = 0;
  virtual BasisKey generator_key() const = 0;
  virtual int depth(const BasisKey& k) const = 0;
  /// All basis keys of depth <= d, sorted.
  virtual std::vector<BasisKey> window(int d) const = 0;

  virtual ModVec act_basis(const SL2Elt& x, const BasisKey& k) const = 0;
  virtual ModVec act(const SL2Elt& x, const ModVec& v) const;

  virtual bool accepts_vir() const { return false; }
  /// Vir action; non-Vir families accept elements of the embedded sl2 only (WrongAlgebra otherwise).
  virtual ModVec act_vir(const VirElt& x, const ModVec& v) const;

  /// The element acting diagonally on the basis, if any.
  virtual std::optional<SL2Elt> cartan() const { return std::nullopt; }
  /// Eigenvalue of cartan() on a basis vector; nullopt for non-weight modules.
  virtual std::optional<Scalar> weight(const BasisKey&) const { return std::nullopt; }

  ModVec generator() const { return ModVec::basis(generator_key()); }
};

/// W(eta) = U(sl2) (x)_{U(Ce)} C_eta; key (a, b) for f^a h^b x.
ModuleHandle make_whittaker(const Scalar& eta);
/// X(xi) = U(sl2) (x)_{U(Ch)} C_xi; key (k, l) for f^k e^l x.
ModuleHandle make_x(const Scalar& xi);
/// X(xi)/(c - tau)X(xi); key (s): e^s x for s >= 0, f^{-s} x for s < 0.
ModuleHandle make_xbar(const Scalar& xi, const Scalar& tau);
/// Dense module on {v_eta : eta in xi + 2Z}; key (s) for v_{xi + 2s}.
ModuleHandle make_vdense(const Scalar& xi, const Scalar& tau);
/// Highest weight Verma module M(delta); key (k) for f^k m.
ModuleHandle make_verma(const Scalar& delta);
/// Lowest weight Verma module V(delta); key (k) for e^k m.
ModuleHandle make_low_verma(const Scalar& delta);
/// M^A: same space, x acts as A(x).
ModuleHandle make_twist(ModuleHandle inner, const Automorphism& a);
/// Leibniz action on the tensor product; key = left key followed by right key.
ModuleHandle make_tensor(ModuleHandle left, ModuleHandle right);

/// Lie homomorphism mu: Vir^f -> C given by roots lambda_i (multiplicity n_i) of f and
/// polynomials p_i with deg p_i < n_i: mu(t^j f) = sum_i p_i(j) lambda_i^j, mu(z) = 0.
struct MuData {
  std::vector<std::pair<Scalar, int>> roots;
  std::vector<std::vector<Scalar>> polys;  // ascending coefficients

  /// Throws BadPolynomial (zero root, degree outside 1..3) or InvalidParameter.
  void validate() const;
  int degree() const;
  LaurentPoly f() const;
  /// mu(t^j f)
  Scalar value_at(long j) const;
  std::string to_string() const;
};

/// mu(w) for w in Vir^f; throws NotInSubalgebra otherwise.
Scalar mu_eval(const MuData& mu, const VirElt& w);

/// V^f_mu restricted to a depth-bounded window of normal forms.
/// Key (a, b, c): the class of f^a h^b e^c v_mu with f^a h^b e^c a standard monomial.
ModuleHandle make_virpoly(const MuData& mu, int depth = 6);

/// Character of a subalgebra of sl2: the subalgebra basis and the value on each element.
struct Character {
  std::vector<SL2Elt> basis;
  std::vector<Scalar> values;
};

/// U(sl2) (x)_{U(a)} C_mu built from the left-ideal normal form; key (a, b, c) as for VirPoly.
ModuleHandle make_induced(const Character& chi, int depth = 6);

/// Left ideal of U(sl2) generated by elements of filtration degree 1, with
/// normal forms precomputed up to a fixed degree.
class LeftIdealQuotient {
 public:
  LeftIdealQuotient(std::vector<UEnvElt> generators, int depth);

  int depth() const { return depth_; }
  bool is_standard(const SL2Monomial& m) const;
  const std::vector<SL2Monomial>& standard_monomials() const { return standard_; }
  /// Normal form modulo the ideal; DepthExceeded beyond the precomputed degree.
  UEnvElt reduce(const UEnvElt& u) const;

 private:
  int depth_;
  EchelonBasis<SL2Monomial> ideal_;
  std::vector<SL2Monomial> standard_;
};

/// All PBW monomials of degree <= d in degree-lex order.
std::vector<SL2Monomial> monomials_up_to(int d);

BasisKey monomial_key(const SL2Monomial& m);
SL2Monomial key_monomial(const BasisKey& k);

/// Applies u in U(sl2) to v.
ModVec act_uenv(const Module& m, const UEnvElt& u, const ModVec& v);

/// Action of the Casimir. For Vir-families it is evaluated as -4 e_{-1} e_1 + (2 e_0 + 1)^2
/// through the Vir action.
ModVec casimir_action(const Module& m, const ModVec& v);

/// Groups the terms of v by weight; throws NotWeightModule.
std::vector<std::pair<Scalar, ModVec>> weight_decompose(const Module& m, const ModVec& v);

/// Independent rewriting route for Verma, Xbar and Vdense used to cross-check
/// the closed-form actions; InvalidParameter for other families.
ModVec act_generic(const Module& m, const SL2Elt& x, const ModVec& v);

/// Data of a Twist handle; nullopt for other families.
struct TwistView {
  ModuleHandle inner;
  const Automorphism* automorphism;
};
std::optional<TwistView> as_twist(const Module& m);

/// Data of a Tensor handle.
std::optional<std::pair<ModuleHandle, ModuleHandle>> as_tensor(const Module& m);

/// {schema: "modvec/1", family, params, terms: [[key...], Scalar]}.
nlohmann::json modvec_to_json(const Module& m, const ModVec& v);

/// Scalar parameters of a primitive family by name, e.g. {"delta": 2}.
std::map<std::string, Scalar> module_params(const Module& m);

/// Parses a compact module description, e.g. `Verma(2)`, `Xbar(0,9)`,
/// `Twist(Verma(3),gamma(1)^-1)`, `Tensor(Verma(1),Verma(2))`, `VirPoly((t-1)^2;0,1)`.
ModuleHandle parse_module(std::string_view text, int depth = 6);

/// Parses `identity`, `sigma`, `gamma(l)`, `gamma2(l1,l2)`, optionally suffixed with `^-1`.
Automorphism parse_automorphism(std::string_view text);

/// Parses a factored polynomial such as `t-2`, `(t-1)^2`, `(t-1)(t-2)(t+3)` into roots.
std::vector<std::pair<Scalar, int>> parse_factored(std::string_view text);

/// Parses p_i coefficient lists: `;` separates roots, `,` separates ascending coefficients.
std::vector<std::vector<Scalar>> parse_polys(std::string_view text);

}  // namespace sl2vir

#endif
