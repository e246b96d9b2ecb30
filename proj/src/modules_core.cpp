#include <algorithm>

#include "modules_impl.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"

namespace sl2vir {

ModVec::ModVec(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ModVec ModVec::basis(BasisKey key, Scalar c) {
  ModVec v;
  v.add_term(key, c);
  return v;
}

Scalar ModVec::coeff(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void ModVec::add_term(const BasisKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModVec& ModVec::operator+=(const ModVec& o) {
  axpy(terms_, Scalar(1), o.terms_);
  return *this;
}

ModVec& ModVec::operator-=(const ModVec& o) {
  axpy(terms_, Scalar(-1), o.terms_);
  return *this;
}

ModVec& ModVec::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string key_to_string(const BasisKey& k) {
  std::string out = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k[i]);
  }
  return out + ")";
}

std::string ModVec::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + key_to_string(k);
  }
  return out;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Whittaker: return "W";
    case Family::X: return "X";
    case Family::Xbar: return "Xbar";
    case Family::Vdense: return "Vdense";
    case Family::Verma: return "Verma";
    case Family::LowVerma: return "LowVerma";
    case Family::VirPoly: return "VirPoly";
    case Family::Induced: return "Induced";
    case Family::Twist: return "Twist";
    case Family::Tensor: return "Tensor";
  }
  return "?";
}

ModVec Module::act(const SL2Elt& x, const ModVec& v) const {
  ModVec out;
  for (const auto& [k, c] : v.terms()) axpy(out.mutable_terms(), c, act_basis(x, k).terms());
  return out;
}

ModVec Module::act_vir(const VirElt& x, const ModVec& v) const {
  auto y = pullback_sl2(x);
  if (!y) throw Error(ErrorKind::WrongAlgebra, name() + " is not a Vir-module; cannot act by " + x.to_string());
  return act(*y, v);
}

std::vector<SL2Monomial> monomials_up_to(int d) {
  std::vector<SL2Monomial> out;
  for (int n = 0; n <= d; ++n)
    for (int c = 0; c <= n; ++c)
      for (int b = 0; b + c <= n; ++b) out.push_back({n - b - c, b, c});
  return out;  // already in degree-lex order
}

BasisKey monomial_key(const SL2Monomial& m) { return {m.a, m.b, m.c}; }

SL2Monomial key_monomial(const BasisKey& k) {
  if (k.size() != 3) throw Error(ErrorKind::InvalidParameter, "monomial key needs 3 entries: " + key_to_string(k));
  return {static_cast<int>(k[0]), static_cast<int>(k[1]), static_cast<int>(k[2])};
}

ModVec act_uenv(const Module& m, const UEnvElt& u, const ModVec& v) {
  ModVec out;
  for (const auto& [mono, c] : u.terms()) {
    ModVec w = v;
    for (int i = 0; i < mono.c && !w.is_zero(); ++i) w = m.act(SL2Elt::e(), w);
    for (int i = 0; i < mono.b && !w.is_zero(); ++i) w = m.act(SL2Elt::h(), w);
    for (int i = 0; i < mono.a && !w.is_zero(); ++i) w = m.act(SL2Elt::f(), w);
    axpy(out.mutable_terms(), c, w.terms());
  }
  return out;
}

ModVec casimir_action(const Module& m, const ModVec& v) {
  if (!m.accepts_vir()) return act_uenv(m, casimir_elt(), v);
  // -4 e_{-1} e_1 + (2 e_0 + 1)^2
  auto e1 = m.act_vir(VirElt::basis(1), v);
  ModVec out = m.act_vir(VirElt::basis(-1), e1) * Scalar(-4);
  auto w = m.act_vir(VirElt::basis(0, 2), v) + v;
  out += m.act_vir(VirElt::basis(0, 2), w) + w;
  return out;
}

std::vector<std::pair<Scalar, ModVec>> weight_decompose(const Module& m, const ModVec& v) {
  if (!m.cartan()) throw Error(ErrorKind::NotWeightModule, m.name() + " has no diagonal Cartan action");
  std::map<Scalar, ModVec> parts;
  for (const auto& [k, c] : v.terms()) {
    auto w = m.weight(k);
    if (!w) throw Error(ErrorKind::NotWeightModule, m.name() + " basis vector is not a weight vector");
    parts[*w].add_term(k, c);
  }
  return {parts.begin(), parts.end()};
}

ModVec act_generic(const Module& m, const SL2Elt& x, const ModVec& v) {
  using namespace detail;
  if (auto* p = dynamic_cast<const VermaModule*>(&m)) {
    if (!p->lowest()) return p->act_generic(x, v);
    // V(delta) is M(-delta) twisted by sigma, with e^k m matching f^k m.
    VermaModule mirror(-p->delta(), false);
    return mirror.act_generic(Automorphism::sigma().apply(x), v);
  }
  if (auto* p = dynamic_cast<const XbarModule*>(&m)) return p->act_generic(x, v);
  if (auto* p = dynamic_cast<const VdenseModule*>(&m)) return p->act_generic(x, v);
  if (auto* p = dynamic_cast<const TwistModule*>(&m)) return act_generic(*p->inner(), p->automorphism().apply(x), v);
  throw Error(ErrorKind::InvalidParameter, std::string("no generic path for ") + to_string(m.family()));
}

std::optional<TwistView> as_twist(const Module& m) {
  if (auto* p = dynamic_cast<const detail::TwistModule*>(&m)) return TwistView{p->inner(), &p->automorphism()};
  return std::nullopt;
}

std::optional<std::pair<ModuleHandle, ModuleHandle>> as_tensor(const Module& m) {
  if (auto* p = dynamic_cast<const detail::TensorModule*>(&m)) return std::make_pair(p->left(), p->right());
  return std::nullopt;
}

std::map<std::string, Scalar> module_params(const Module& m) {
  using namespace detail;
  if (auto* p = dynamic_cast<const WhittakerModule*>(&m)) return {{"eta", p->eta()}};
  if (auto* p = dynamic_cast<const XModule*>(&m)) return {{"xi", p->xi()}};
  if (auto* p = dynamic_cast<const XbarModule*>(&m)) return {{"xi", p->xi()}, {"tau", p->tau()}};
  if (auto* p = dynamic_cast<const VdenseModule*>(&m)) return {{"xi", p->xi()}, {"tau", p->tau()}};
  if (auto* p = dynamic_cast<const VermaModule*>(&m)) return {{"delta", p->delta()}};
  return {};
}

nlohmann::json modvec_to_json(const Module& m, const ModVec& v) {
  nlohmann::json module = m.to_json();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back({k, c});
  return {{"schema", "modvec/1"},
          {"family", module["family"]},
          {"params", module.contains("params") ? module["params"] : nlohmann::json::object()},
          {"module", m.name()},
          {"terms", terms}};
}

namespace detail {

nlohmann::json scalar_params(std::initializer_list<std::pair<const char*, Scalar>> params) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

}  // namespace detail

ModuleHandle make_whittaker(const Scalar& eta) { return std::make_shared<detail::WhittakerModule>(eta); }
ModuleHandle make_x(const Scalar& xi) { return std::make_shared<detail::XModule>(xi); }
ModuleHandle make_xbar(const Scalar& xi, const Scalar& tau) { return std::make_shared<detail::XbarModule>(xi, tau); }
ModuleHandle make_vdense(const Scalar& xi, const Scalar& tau) {
  return std::make_shared<detail::VdenseModule>(xi, tau);
}
ModuleHandle make_verma(const Scalar& delta) { return std::make_shared<detail::VermaModule>(delta, false); }
ModuleHandle make_low_verma(const Scalar& delta) { return std::make_shared<detail::VermaModule>(delta, true); }

ModuleHandle make_twist(ModuleHandle inner, const Automorphism& a) {
  if (!inner) throw Error(ErrorKind::InvalidParameter, "twist of a null module");
  return std::make_shared<detail::TwistModule>(std::move(inner), a);
}

ModuleHandle make_tensor(ModuleHandle left, ModuleHandle right) {
  if (!left || !right) throw Error(ErrorKind::InvalidParameter, "tensor with a null module");
  return std::make_shared<detail::TensorModule>(std::move(left), std::move(right));
}

}  // namespace sl2vir
