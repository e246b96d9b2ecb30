#include "sl2vir/laurent.hpp"

#include <algorithm>

#include "sl2vir/error.hpp"

namespace sl2vir {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(long exponent, Scalar coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::linear(const Scalar& root) {
  LaurentPoly p = monomial(1);
  p.add_term(0, -root);
  return p;
}

LaurentPoly LaurentPoly::from_roots(const std::vector<std::pair<Scalar, int>>& roots) {
  LaurentPoly p = constant(1);
  for (const auto& [root, mult] : roots)
    for (int j = 0; j < mult; ++j) p = p * linear(root);
  return p;
}

Scalar LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

long LaurentPoly::min_exponent() const { return terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(long exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_) out.add_term(ep + eq, cp * cq);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first != 0) out += "*t^" + std::to_string(it->first);
  }
  return out;
}

std::vector<long> default_window(int degree) {
  switch (degree) {
    case 1: return {0};
    case 2: return {0, 1};
    case 3: return {-1, 0, 1};
    default: throw Error(ErrorKind::BadPolynomial, "degree must be 1, 2 or 3");
  }
}

int checked_degree(const LaurentPoly& f) {
  if (f.is_zero() || f.min_exponent() != 0)
    throw Error(ErrorKind::BadPolynomial, "f must have a nonzero constant term: " + f.to_string());
  long k = f.max_exponent();
  if (k < 1 || k > 3) throw Error(ErrorKind::BadPolynomial, "degree of f must be 1, 2 or 3: " + f.to_string());
  return static_cast<int>(k);
}

DivMod laurent_divmod_f(long n, const LaurentPoly& f, const std::vector<long>& window) {
  const int k = checked_degree(f);
  if (window != default_window(k))
    throw Error(ErrorKind::BadPolynomial, "window does not match the degree of f");
  const long lo = window.front();
  const long hi = window.back();
  const Scalar a0 = f.coeff(0);
  const Scalar ak = f.coeff(k);

  DivMod out;
  out.remainder = LaurentPoly::monomial(n);
  // High end first, then low end; each step shrinks the out-of-window support interval.
  while (!out.remainder.is_zero() && out.remainder.max_exponent() > hi) {
    long d = out.remainder.max_exponent();
    Scalar c = out.remainder.coeff(d) / ak;
    out.quotient.add_term(d - k, c);
    out.remainder -= f.shifted(d - k) * c;
  }
  while (!out.remainder.is_zero() && out.remainder.min_exponent() < lo) {
    long d = out.remainder.min_exponent();
    Scalar c = out.remainder.coeff(d) / a0;
    out.quotient.add_term(d, c);
    out.remainder -= f.shifted(d) * c;
  }
  return out;
}

DivMod laurent_divmod_f(long n, const LaurentPoly& f) {
  return laurent_divmod_f(n, f, default_window(checked_degree(f)));
}

}  // namespace sl2vir
