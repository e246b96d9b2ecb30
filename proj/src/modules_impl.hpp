#ifndef SL2VIR_MODULES_IMPL_HPP
#define SL2VIR_MODULES_IMPL_HPP

#include <mutex>

#include "sl2vir/modules.hpp"

namespace sl2vir::detail {

nlohmann::json scalar_params(std::initializer_list<std::pair<const char*, Scalar>> params);

class WhittakerModule final : public Module {
 public:
  explicit WhittakerModule(Scalar eta) : eta_(std::move(eta)) {}
  Family family() const override { return Family::Whittaker; }
  std::string name() const override { return "W(" + eta_.to_string() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return 2; }
  BasisKey generator_key() const override { return {0, 0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0] + k[1]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  const Scalar& eta() const { return eta_; }

 private:
  Scalar eta_;
};

class XModule final : public Module {
 public:
  explicit XModule(Scalar xi) : xi_(std::move(xi)) {}
  Family family() const override { return Family::X; }
  std::string name() const override { return "X(" + xi_.to_string() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return 2; }
  BasisKey generator_key() const override { return {0, 0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0] + k[1]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  std::optional<SL2Elt> cartan() const override { return SL2Elt::h(); }
  std::optional<Scalar> weight(const BasisKey& k) const override { return xi_ + Scalar(2 * (k[1] - k[0])); }
  const Scalar& xi() const { return xi_; }
  /// Rewrites a PBW element applied to x_xi into the f^k e^l basis.
  ModVec from_uenv(const UEnvElt& u) const;

 private:
  Scalar xi_;
};

class XbarModule final : public Module {
 public:
  XbarModule(Scalar xi, Scalar tau) : xi_(std::move(xi)), tau_(std::move(tau)) {}
  Family family() const override { return Family::Xbar; }
  std::string name() const override { return "Xbar(" + xi_.to_string() + "," + tau_.to_string() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return 1; }
  BasisKey generator_key() const override { return {0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0] < 0 ? -k[0] : k[0]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  std::optional<SL2Elt> cartan() const override { return SL2Elt::h(); }
  std::optional<Scalar> weight(const BasisKey& k) const override { return xi_ + Scalar(2 * k[0]); }
  ModVec act_generic(const SL2Elt& x, const ModVec& v) const;
  const Scalar& xi() const { return xi_; }
  const Scalar& tau() const { return tau_; }
  /// (tau - (xi + 2l - 1)^2)/4: the scalar by which f e acts on e^{l-1} xbar.
  Scalar fe_scalar(long l) const;

 private:
  Scalar xi_, tau_;
};

class VdenseModule final : public Module {
 public:
  VdenseModule(Scalar xi, Scalar tau) : xi_(std::move(xi)), tau_(std::move(tau)) {}
  Family family() const override { return Family::Vdense; }
  std::string name() const override { return "Vdense(" + xi_.to_string() + "," + tau_.to_string() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return 1; }
  BasisKey generator_key() const override { return {0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0] < 0 ? -k[0] : k[0]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  std::optional<SL2Elt> cartan() const override { return SL2Elt::h(); }
  std::optional<Scalar> weight(const BasisKey& k) const override { return xi_ + Scalar(2 * k[0]); }
  ModVec act_generic(const SL2Elt& x, const ModVec& v) const;
  const Scalar& xi() const { return xi_; }
  const Scalar& tau() const { return tau_; }

 private:
  Scalar xi_, tau_;
};

class VermaModule final : public Module {
 public:
  VermaModule(Scalar delta, bool lowest) : delta_(std::move(delta)), lowest_(lowest) {}
  Family family() const override { return lowest_ ? Family::LowVerma : Family::Verma; }
  std::string name() const override {
    return std::string(lowest_ ? "LowVerma(" : "Verma(") + delta_.to_string() + ")";
  }
  nlohmann::json to_json() const override;
  int key_arity() const override { return 1; }
  BasisKey generator_key() const override { return {0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  std::optional<SL2Elt> cartan() const override { return SL2Elt::h(); }
  std::optional<Scalar> weight(const BasisKey& k) const override {
    return delta_ + Scalar(lowest_ ? 2 * k[0] : -2 * k[0]);
  }
  ModVec act_generic(const SL2Elt& x, const ModVec& v) const;
  const Scalar& delta() const { return delta_; }
  bool lowest() const { return lowest_; }

 private:
  Scalar delta_;
  bool lowest_;
};

class TwistModule final : public Module {
 public:
  TwistModule(ModuleHandle inner, Automorphism a) : inner_(std::move(inner)), aut_(std::move(a)) {}
  Family family() const override { return Family::Twist; }
  std::string name() const override { return "Twist(" + inner_->name() + "," + aut_.tag() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return inner_->key_arity(); }
  BasisKey generator_key() const override { return inner_->generator_key(); }
  int depth(const BasisKey& k) const override { return inner_->depth(k); }
  std::vector<BasisKey> window(int d) const override { return inner_->window(d); }
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override {
    return inner_->act_basis(aut_.apply(x), k);
  }
  ModVec act(const SL2Elt& x, const ModVec& v) const override { return inner_->act(aut_.apply(x), v); }
  std::optional<SL2Elt> cartan() const override;
  std::optional<Scalar> weight(const BasisKey& k) const override { return inner_->weight(k); }
  const ModuleHandle& inner() const { return inner_; }
  const Automorphism& automorphism() const { return aut_; }

 private:
  ModuleHandle inner_;
  Automorphism aut_;
};

class TensorModule final : public Module {
 public:
  TensorModule(ModuleHandle left, ModuleHandle right) : left_(std::move(left)), right_(std::move(right)) {}
  Family family() const override { return Family::Tensor; }
  std::string name() const override { return "Tensor(" + left_->name() + "," + right_->name() + ")"; }
  nlohmann::json to_json() const override;
  int key_arity() const override { return left_->key_arity() + right_->key_arity(); }
  BasisKey generator_key() const override;
  int depth(const BasisKey& k) const override;
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  bool accepts_vir() const override { return left_->accepts_vir() && right_->accepts_vir(); }
  ModVec act_vir(const VirElt& x, const ModVec& v) const override;
  std::optional<SL2Elt> cartan() const override;
  std::optional<Scalar> weight(const BasisKey& k) const override;
  const ModuleHandle& left() const { return left_; }
  const ModuleHandle& right() const { return right_; }

 private:
  std::pair<BasisKey, BasisKey> split(const BasisKey& k) const;
  static BasisKey join(const BasisKey& a, const BasisKey& b);
  template <class Fn>
  ModVec leibniz(const ModVec& v, Fn&& act_left, Fn&& act_right) const;

  ModuleHandle left_, right_;
};

/// Shared machinery for U(sl2) / U(sl2) I with I spanned by s - mu(s).
class QuotientModule : public Module {
 public:
  QuotientModule(Character chi, int depth);
  int key_arity() const override { return 3; }
  BasisKey generator_key() const override { return {0, 0, 0}; }
  int depth(const BasisKey& k) const override { return static_cast<int>(k[0] + k[1] + k[2]); }
  std::vector<BasisKey> window(int d) const override;
  ModVec act_basis(const SL2Elt& x, const BasisKey& k) const override;
  const LeftIdealQuotient& quotient() const { return quotient_; }
  const Character& character() const { return chi_; }
  int table_depth() const { return quotient_.depth(); }
  ModVec to_modvec(const UEnvElt& u) const;
  UEnvElt to_uenv(const ModVec& v) const;

 protected:
  Character chi_;
  LeftIdealQuotient quotient_;
};

class InducedModule final : public QuotientModule {
 public:
  InducedModule(Character chi, int depth) : QuotientModule(std::move(chi), depth) {}
  Family family() const override { return Family::Induced; }
  std::string name() const override;
  nlohmann::json to_json() const override;
};

class VirPolyModule final : public QuotientModule {
 public:
  VirPolyModule(MuData mu, Character chi, int depth)
      : QuotientModule(std::move(chi), depth), mu_(std::move(mu)), f_(mu_.f()) {}
  Family family() const override { return Family::VirPoly; }
  std::string name() const override;
  nlohmann::json to_json() const override;
  bool accepts_vir() const override { return true; }
  ModVec act_vir(const VirElt& x, const ModVec& v) const override;
  const MuData& mu() const { return mu_; }
  const LaurentPoly& poly() const { return f_; }

 private:
  UEnvElt vir_on_monomial(long n, const SL2Monomial& m) const;

  MuData mu_;
  LaurentPoly f_;
  // e_n applied to a monomial times v_mu, reduced; filled lazily, guarded by cache_mutex_.
  mutable std::map<std::pair<long, SL2Monomial>, UEnvElt> cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace sl2vir::detail

#endif
