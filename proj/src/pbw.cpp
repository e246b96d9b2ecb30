#include "sl2vir/pbw.hpp"

#include <vector>

#include "sl2vir/error.hpp"

namespace sl2vir {

std::string SL2Monomial::to_string() const {
  std::string out;
  auto part = [&out](const char* g, int p) {
    if (p == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (p > 1) out += "^" + std::to_string(p);
  };
  part("f", a);
  part("h", b);
  part("e", c);
  return out.empty() ? "1" : out;
}

UEnvElt::UEnvElt(Terms terms) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

UEnvElt UEnvElt::monomial(SL2Monomial m, Scalar c) {
  UEnvElt u;
  u.add_term(m, c);
  return u;
}

UEnvElt UEnvElt::from_sl2(const SL2Elt& x) {
  UEnvElt u;
  u.add_term({0, 0, 1}, x.ce());
  u.add_term({0, 1, 0}, x.ch());
  u.add_term({1, 0, 0}, x.cf());
  return u;
}

int UEnvElt::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Scalar UEnvElt::coeff(const SL2Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void UEnvElt::add_term(const SL2Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEnvElt& UEnvElt::operator+=(const UEnvElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEnvElt& UEnvElt::operator-=(const UEnvElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEnvElt& UEnvElt::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string UEnvElt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + m.to_string();
  }
  return out;
}

namespace {

// Each routine below multiplies a normal-form monomial on the left by one
// generator, moving it rightward past one letter at a time:
//   h f = f h - 2 f,   e f = f e + h,   e h = h e - 2 e.

void mul_f(const SL2Monomial& m, const Scalar& c, UEnvElt& out) { out.add_term({m.a + 1, m.b, m.c}, c); }

void mul_h(const SL2Monomial& m, const Scalar& c, UEnvElt& out);

void mul_h_into(const UEnvElt& u, const Scalar& c, UEnvElt& out) {
  for (const auto& [m, k] : u.terms()) mul_h(m, c * k, out);
}

// h * f^a h^b e^c
void mul_h(const SL2Monomial& m, const Scalar& c, UEnvElt& out) {
  if (m.a == 0) {
    out.add_term({0, m.b + 1, m.c}, c);
    return;
  }
  // h f (rest) = f (h rest) - 2 f (rest)
  SL2Monomial rest{m.a - 1, m.b, m.c};
  UEnvElt h_rest;
  mul_h(rest, Scalar(1), h_rest);
  for (const auto& [r, k] : h_rest.terms()) mul_f(r, c * k, out);
  mul_f(rest, Scalar(-2) * c, out);
}

// e * h^b e^c  (no f letters)
void mul_e_no_f(int b, int cexp, const Scalar& c, UEnvElt& out) {
  if (b == 0) {
    out.add_term({0, 0, cexp + 1}, c);
    return;
  }
  // e h (rest) = h (e rest) - 2 e (rest)
  UEnvElt e_rest;
  mul_e_no_f(b - 1, cexp, Scalar(1), e_rest);
  mul_h_into(e_rest, c, out);
  for (const auto& [r, k] : e_rest.terms()) out.add_term(r, Scalar(-2) * c * k);
}

// e * f^a h^b e^c
void mul_e(const SL2Monomial& m, const Scalar& c, UEnvElt& out) {
  if (m.a == 0) {
    mul_e_no_f(m.b, m.c, c, out);
    return;
  }
  // e f (rest) = f (e rest) + h (rest)
  SL2Monomial rest{m.a - 1, m.b, m.c};
  UEnvElt e_rest;
  mul_e(rest, Scalar(1), e_rest);
  for (const auto& [r, k] : e_rest.terms()) mul_f(r, c * k, out);
  mul_h(rest, c, out);
}

}  // namespace

UEnvElt left_mul_generator(int gen, const UEnvElt& u) {
  UEnvElt out;
  for (const auto& [m, c] : u.terms()) {
    switch (gen) {
      case SL2Elt::E: mul_e(m, c, out); break;
      case SL2Elt::H: mul_h(m, c, out); break;
      case SL2Elt::F: mul_f(m, c, out); break;
      default: throw Error(ErrorKind::InvalidParameter, "unknown generator");
    }
  }
  return out;
}

UEnvElt nf_multiply(const UEnvElt& u, const UEnvElt& v) {
  UEnvElt out;
  for (const auto& [m, c] : u.terms()) {
    // f^a h^b e^c * v = f^a (h^b (e^c v))
    UEnvElt acc = v;
    for (int i = 0; i < m.c; ++i) acc = left_mul_generator(SL2Elt::E, acc);
    for (int i = 0; i < m.b; ++i) acc = left_mul_generator(SL2Elt::H, acc);
    for (int i = 0; i < m.a; ++i) acc = left_mul_generator(SL2Elt::F, acc);
    out += acc * c;
  }
  return out;
}

UEnvElt nf_power(const UEnvElt& u, int n) {
  UEnvElt out = UEnvElt::one();
  for (int i = 0; i < n; ++i) out = nf_multiply(out, u);
  return out;
}

UEnvElt casimir_elt() {
  UEnvElt c;
  c.add_term({1, 0, 1}, 4);
  c.add_term({0, 2, 0}, 1);
  c.add_term({0, 1, 0}, 2);
  c.add_term({0, 0, 0}, 1);
  return c;
}

UEnvElt aut_extend(const Automorphism& a, const UEnvElt& u) {
  const UEnvElt images[3] = {UEnvElt::from_sl2(a.image(SL2Elt::E)), UEnvElt::from_sl2(a.image(SL2Elt::H)),
                             UEnvElt::from_sl2(a.image(SL2Elt::F))};
  UEnvElt out;
  for (const auto& [m, c] : u.terms()) {
    UEnvElt acc = UEnvElt::scalar(c);
    for (int i = 0; i < m.a; ++i) acc = nf_multiply(acc, images[SL2Elt::F]);
    for (int i = 0; i < m.b; ++i) acc = nf_multiply(acc, images[SL2Elt::H]);
    for (int i = 0; i < m.c; ++i) acc = nf_multiply(acc, images[SL2Elt::E]);
    out += acc;
  }
  return out;
}

}  // namespace sl2vir
