#include "sl2vir/lie.hpp"

#include "sl2vir/error.hpp"

namespace sl2vir {

SL2Elt SL2Elt::basis(int i) {
  SL2Elt x;
  x.c_.at(i) = 1;
  return x;
}

SL2Elt& SL2Elt::operator+=(const SL2Elt& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

SL2Elt& SL2Elt::operator-=(const SL2Elt& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

SL2Elt& SL2Elt::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

std::string SL2Elt::to_string() const {
  static const char* names[] = {"e", "h", "f"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")*" + names[i];
  }
  return out.empty() ? "0" : out;
}

VirElt VirElt::basis(long i, Scalar c) {
  VirElt x;
  x.add(i, c);
  return x;
}

VirElt VirElt::central(Scalar c) {
  VirElt x;
  x.z_ = std::move(c);
  return x;
}

VirElt VirElt::from_laurent(const LaurentPoly& p) {
  VirElt x;
  x.terms_ = p.terms();
  return x;
}

void VirElt::add(long i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VirElt& VirElt::operator+=(const VirElt& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  z_ += o.z_;
  return *this;
}

VirElt& VirElt::operator-=(const VirElt& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  z_ -= o.z_;
  return *this;
}

VirElt& VirElt::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    z_ = Scalar();
    return *this;
  }
  for (auto& [i, c] : terms_) c *= s;
  z_ *= s;
  return *this;
}

std::string VirElt::to_string() const {
  std::string out;
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*e_" + std::to_string(i);
  }
  if (!z_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "(" + z_.to_string() + ")*z";
  }
  return out.empty() ? "0" : out;
}

SL2Elt bracket_sl2(const SL2Elt& x, const SL2Elt& y) {
  // Structure constants in coordinates (e, h, f).
  const Scalar& xe = x.ce();
  const Scalar& xh = x.ch();
  const Scalar& xf = x.cf();
  const Scalar& ye = y.ce();
  const Scalar& yh = y.ch();
  const Scalar& yf = y.cf();
  SL2Elt out;
  out[SL2Elt::E] = Scalar(2) * (xh * ye - xe * yh);
  out[SL2Elt::H] = xe * yf - xf * ye;
  out[SL2Elt::F] = Scalar(2) * (xf * yh - xh * yf);
  return out;
}

VirElt bracket_vir(const VirElt& x, const VirElt& y) {
  VirElt out;
  for (const auto& [i, ci] : x.terms()) {
    for (const auto& [j, cj] : y.terms()) {
      Scalar c = ci * cj;
      out.add(i + j, c * Scalar(j - i));
      if (i + j == 0) out.add_central(c * Scalar::frac(i * i * i - i, 12));
    }
  }
  return out;
}

VirElt embed_sl2(const SL2Elt& x) {
  VirElt out;
  out.add(1, x.ce());
  out.add(0, Scalar(2) * x.ch());
  out.add(-1, -x.cf());
  return out;
}

std::optional<SL2Elt> pullback_sl2(const VirElt& x) {
  if (!x.z().is_zero()) return std::nullopt;
  SL2Elt out;
  for (const auto& [i, c] : x.terms()) {
    switch (i) {
      case 1: out[SL2Elt::E] = c; break;
      case 0: out[SL2Elt::H] = c / Scalar(2); break;
      case -1: out[SL2Elt::F] = -c; break;
      default: return std::nullopt;
    }
  }
  return out;
}

std::vector<VirElt> intersect_virf_sl2(const LaurentPoly& f) {
  const int k = checked_degree(f);
  std::vector<VirElt> out;
  for (long i = 1 - k; i >= -1; --i) out.push_back(VirElt::from_laurent(f.shifted(i)));
  return out;
}

}  // namespace sl2vir
