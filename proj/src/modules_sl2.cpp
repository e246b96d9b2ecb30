#include <algorithm>
#include <functional>

#include "modules_impl.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"

namespace sl2vir::detail {

namespace {

std::vector<BasisKey> pair_window(int d) {
  std::vector<BasisKey> out;
  for (long a = 0; a <= d; ++a)
    for (long b = 0; a + b <= d; ++b) out.push_back({a, b});
  return out;
}

std::vector<BasisKey> signed_window(int d) {
  std::vector<BasisKey> out;
  for (long s = -d; s <= d; ++s) out.push_back({s});
  return out;
}

Scalar quarter(const Scalar& s) { return s * Scalar::frac(1, 4); }

}  // namespace

// ---- W(eta) ----

nlohmann::json WhittakerModule::to_json() const {
  return {{"family", "W"}, {"params", scalar_params({{"eta", eta_}})}};
}

std::vector<BasisKey> WhittakerModule::window(int d) const { return pair_window(d); }

ModVec WhittakerModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  auto u = nf_multiply(UEnvElt::from_sl2(x), UEnvElt::monomial({static_cast<int>(k[0]), static_cast<int>(k[1]), 0}));
  ModVec out;
  for (const auto& [m, c] : u.terms()) out.add_term({m.a, m.b}, c * eta_.pow(m.c));
  return out;
}

// ---- X(xi) ----

nlohmann::json XModule::to_json() const { return {{"family", "X"}, {"params", scalar_params({{"xi", xi_}})}}; }

std::vector<BasisKey> XModule::window(int d) const { return pair_window(d); }

ModVec XModule::from_uenv(const UEnvElt& u) const {
  ModVec out;
  for (const auto& [m, c] : u.terms()) out.add_term({m.a, m.c}, c * (xi_ + Scalar(2 * m.c)).pow(m.b));
  return out;
}

ModVec XModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  return from_uenv(
      nf_multiply(UEnvElt::from_sl2(x), UEnvElt::monomial({static_cast<int>(k[0]), 0, static_cast<int>(k[1])})));
}

// ---- Xbar(xi, tau) ----

nlohmann::json XbarModule::to_json() const {
  return {{"family", "Xbar"}, {"params", scalar_params({{"xi", xi_}, {"tau", tau_}})}};
}

std::vector<BasisKey> XbarModule::window(int d) const { return signed_window(d); }

Scalar XbarModule::fe_scalar(long l) const {
  auto s = xi_ + Scalar(2 * l - 1);
  return quarter(tau_ - s * s);
}

ModVec XbarModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  const long s = k[0];
  ModVec out;
  if (!x.ch().is_zero()) out.add_term({s}, x.ch() * (xi_ + Scalar(2 * s)));
  if (!x.ce().is_zero()) {
    if (s >= 0) {
      out.add_term({s + 1}, x.ce());
    } else {
      const long j = -s;
      auto s1 = xi_ + Scalar(1);
      out.add_term({s + 1}, x.ce() * (quarter(tau_ - s1 * s1) + Scalar(j) * (xi_ - Scalar(j - 1))));
    }
  }
  if (!x.cf().is_zero()) {
    if (s <= 0)
      out.add_term({s - 1}, x.cf());
    else
      out.add_term({s - 1}, x.cf() * fe_scalar(s));
  }
  return out;
}

ModVec XbarModule::act_generic(const SL2Elt& x, const ModVec& v) const {
  // Lift to X(xi), act there, then rewrite f^k e^l -> (1/4)(tau - (xi+2l-1)^2) f^{k-1} e^{l-1}.
  XModule lift(xi_);
  ModVec out;
  for (const auto& [k, c] : v.terms()) {
    const long s = k[0];
    BasisKey xk = s >= 0 ? BasisKey{0, s} : BasisKey{-s, 0};
    ModVec image = lift.act_basis(x, xk);
    for (const auto& [key, coef] : image.terms()) {
      long a = key[0], l = key[1];
      Scalar factor = coef * c;
      while (a > 0 && l > 0) {
        factor *= fe_scalar(l);
        --a;
        --l;
      }
      out.add_term({l > 0 ? l : -a}, factor);
    }
  }
  return out;
}

// ---- dense V(xi, tau) ----

nlohmann::json VdenseModule::to_json() const {
  return {{"family", "Vdense"}, {"params", scalar_params({{"xi", xi_}, {"tau", tau_}})}};
}

std::vector<BasisKey> VdenseModule::window(int d) const { return signed_window(d); }

ModVec VdenseModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  const long s = k[0];
  const Scalar eta = xi_ + Scalar(2 * s);
  ModVec out;
  out.add_term({s}, x.ch() * eta);
  out.add_term({s - 1}, x.cf());
  if (!x.ce().is_zero()) {
    auto e1 = eta + Scalar(1);
    out.add_term({s + 1}, x.ce() * quarter(tau_ - e1 * e1));
  }
  return out;
}

ModVec VdenseModule::act_generic(const SL2Elt& x, const ModVec& v) const {
  // e v = f^{-1} (fe v) with fe = (c - (h+1)^2)/4; f^{-1} shifts the key up by one.
  ModVec out;
  for (const auto& [k, c] : v.terms()) {
    ModVec basis = ModVec::basis(k, c);
    ModVec hv = act_basis(SL2Elt::h(), k) * c;
    ModVec h1 = hv + basis;  // (h+1) v
    ModVec h11;
    for (const auto& [kk, cc] : h1.terms()) axpy(h11.mutable_terms(), cc, act_basis(SL2Elt::h(), kk).terms());
    h11 += h1;  // (h+1)^2 v
    ModVec fe = (basis * tau_ - h11) * Scalar::frac(1, 4);
    for (const auto& [kk, cc] : fe.terms()) out.add_term({kk[0] + 1}, cc * x.ce());
    out.add_term({k[0] - 1}, c * x.cf());
    out += hv * x.ch();
  }
  return out;
}

// ---- Verma and lowest weight Verma ----

nlohmann::json VermaModule::to_json() const {
  return {{"family", lowest_ ? "LowVerma" : "Verma"}, {"params", scalar_params({{"delta", delta_}})}};
}

std::vector<BasisKey> VermaModule::window(int d) const {
  std::vector<BasisKey> out;
  for (long k = 0; k <= d; ++k) out.push_back({k});
  return out;
}

ModVec VermaModule::act_basis(const SL2Elt& x, const BasisKey& key) const {
  const long k = key[0];
  ModVec out;
  if (!lowest_) {
    out.add_term({k}, x.ch() * (delta_ - Scalar(2 * k)));
    out.add_term({k + 1}, x.cf());
    if (k > 0) out.add_term({k - 1}, x.ce() * Scalar(k) * (delta_ - Scalar(k - 1)));
  } else {
    out.add_term({k}, x.ch() * (delta_ + Scalar(2 * k)));
    out.add_term({k + 1}, x.ce());
    if (k > 0) out.add_term({k - 1}, x.cf() * Scalar(-k) * (delta_ + Scalar(k - 1)));
  }
  return out;
}

ModVec VermaModule::act_generic(const SL2Elt& x, const ModVec& v) const {
  if (lowest_) throw Error(ErrorKind::InvalidParameter, "use the sigma mirror for the lowest weight Verma module");
  // U(sl2)/(U e + U (h - delta)): f^a h^b e^c m = [c == 0] delta^b f^a m.
  ModVec out;
  auto ux = UEnvElt::from_sl2(x);
  for (const auto& [k, c] : v.terms()) {
    auto u = nf_multiply(ux, UEnvElt::monomial({static_cast<int>(k[0]), 0, 0}));
    for (const auto& [m, coef] : u.terms())
      if (m.c == 0) out.add_term({m.a}, c * coef * delta_.pow(m.b));
  }
  return out;
}

// ---- twists ----

nlohmann::json TwistModule::to_json() const {
  return {{"family", "Twist"}, {"inner", inner_->to_json()}, {"automorphism", aut_}};
}

std::optional<SL2Elt> TwistModule::cartan() const {
  auto c = inner_->cartan();
  if (!c) return std::nullopt;
  return aut_.inverse().apply(*c);
}

// ---- tensor products ----

nlohmann::json TensorModule::to_json() const {
  return {{"family", "Tensor"}, {"left", left_->to_json()}, {"right", right_->to_json()}};
}

std::pair<BasisKey, BasisKey> TensorModule::split(const BasisKey& k) const {
  auto n = static_cast<std::ptrdiff_t>(left_->key_arity());
  return {BasisKey(k.begin(), k.begin() + n), BasisKey(k.begin() + n, k.end())};
}

BasisKey TensorModule::join(const BasisKey& a, const BasisKey& b) {
  BasisKey out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

BasisKey TensorModule::generator_key() const { return join(left_->generator_key(), right_->generator_key()); }

int TensorModule::depth(const BasisKey& k) const {
  auto [l, r] = split(k);
  return left_->depth(l) + right_->depth(r);
}

std::vector<BasisKey> TensorModule::window(int d) const {
  std::vector<BasisKey> out;
  for (const auto& l : left_->window(d))
    for (const auto& r : right_->window(d - left_->depth(l))) out.push_back(join(l, r));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Fn>
ModVec TensorModule::leibniz(const ModVec& v, Fn&& act_left, Fn&& act_right) const {
  ModVec out;
  for (const auto& [k, c] : v.terms()) {
    auto [l, r] = split(k);
    const ModVec xl = act_left(ModVec::basis(l));
    const ModVec xr = act_right(ModVec::basis(r));
    for (const auto& [kl, cl] : xl.terms()) out.add_term(join(kl, r), c * cl);
    for (const auto& [kr, cr] : xr.terms()) out.add_term(join(l, kr), c * cr);
  }
  return out;
}

ModVec TensorModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  std::function<ModVec(const ModVec&)> al = [&](const ModVec& w) { return left_->act(x, w); };
  std::function<ModVec(const ModVec&)> ar = [&](const ModVec& w) { return right_->act(x, w); };
  return leibniz(ModVec::basis(k), al, ar);
}

ModVec TensorModule::act_vir(const VirElt& x, const ModVec& v) const {
  if (!accepts_vir()) return Module::act_vir(x, v);
  std::function<ModVec(const ModVec&)> al = [&](const ModVec& w) { return left_->act_vir(x, w); };
  std::function<ModVec(const ModVec&)> ar = [&](const ModVec& w) { return right_->act_vir(x, w); };
  return leibniz(v, al, ar);
}

std::optional<SL2Elt> TensorModule::cartan() const {
  auto l = left_->cartan();
  auto r = right_->cartan();
  if (!l || !r || *l != *r) return std::nullopt;
  return l;
}

std::optional<Scalar> TensorModule::weight(const BasisKey& k) const {
  if (!cartan()) return std::nullopt;
  auto [l, r] = split(k);
  auto wl = left_->weight(l);
  auto wr = right_->weight(r);
  if (!wl || !wr) return std::nullopt;
  return *wl + *wr;
}

}  // namespace sl2vir::detail
