#include <cctype>

#include "sl2vir/error.hpp"
#include "sl2vir/modules.hpp"

namespace sl2vir {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  return s;
}

[[noreturn]] void bad(const std::string& what, std::string_view text) {
  throw Error(ErrorKind::InvalidParameter, what + ": '" + std::string(text) + "'");
}

/// Splits at separators that are not nested inside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep, size_t max_parts = 0) {
  std::vector<std::string> parts;
  int level = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++level;
    if (ch == ')') --level;
    if (level < 0) bad("unbalanced parentheses", s);
    if (ch == sep && level == 0 && (max_parts == 0 || parts.size() + 1 < max_parts)) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (level != 0) bad("unbalanced parentheses", s);
  parts.push_back(cur);
  return parts;
}

/// "Name(args)" -> (Name, args); args empty and has_args false for a bare name.
std::pair<std::string, std::string> call_parts(const std::string& s, bool& has_args) {
  auto open = s.find('(');
  if (open == std::string::npos) {
    has_args = false;
    return {s, ""};
  }
  if (s.back() != ')') bad("expected a closing parenthesis", s);
  has_args = true;
  std::string args = s.substr(open + 1, s.size() - open - 2);
  split_top(args, ',');  // balance check
  return {s.substr(0, open), args};
}

std::vector<Scalar> scalar_args(const std::string& args, size_t n, const std::string& name) {
  auto parts = split_top(args, ',');
  if (parts.size() != n) bad(name + " takes " + std::to_string(n) + " parameter(s)", args);
  std::vector<Scalar> out;
  for (const auto& p : parts) out.push_back(Scalar::parse(p));
  return out;
}

}  // namespace

Automorphism parse_automorphism(std::string_view text) {
  std::string s = strip(text);
  bool invert = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "^-1") == 0) {
    invert = true;
    s.resize(s.size() - 3);
  }
  bool has_args = false;
  auto [name, args] = call_parts(s, has_args);
  Automorphism a = Automorphism::identity();
  if ((name == "identity" || name == "id") && !has_args) {
  } else if (name == "sigma" && !has_args) {
    a = Automorphism::sigma();
  } else if (name == "gamma" && has_args) {
    a = Automorphism::gamma(scalar_args(args, 1, name)[0]);
  } else if (name == "gamma2" && has_args) {
    auto p = scalar_args(args, 2, name);
    a = Automorphism::gamma2(p[0], p[1]);
  } else {
    bad("unknown automorphism", text);
  }
  return invert ? a.inverse() : a;
}

std::vector<std::pair<Scalar, int>> parse_factored(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) bad("empty polynomial", text);
  std::vector<std::string> factors;
  std::vector<int> powers;
  if (s.front() != '(') {
    factors.push_back(s);
    powers.push_back(1);
  } else {
    size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') bad("expected '(' in factored polynomial", text);
      auto close = s.find(')', pos);
      if (close == std::string::npos) bad("unbalanced parentheses", text);
      factors.push_back(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        size_t end = pos + 1;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos + 1) bad("bad exponent", text);
        power = std::stoi(s.substr(pos + 1, end - pos - 1));
        pos = end;
      }
      powers.push_back(power);
    }
  }
  std::vector<std::pair<Scalar, int>> roots;
  for (size_t i = 0; i < factors.size(); ++i) {
    const auto& fac = factors[i];
    if (fac.empty() || fac.front() != 't') bad("factors must look like t-a", text);
    Scalar root = fac.size() == 1 ? Scalar() : -Scalar::parse(fac.substr(1));
    if (powers[i] < 1) bad("exponents must be positive", text);
    bool merged = false;
    for (auto& r : roots)
      if (r.first == root) {
        r.second += powers[i];
        merged = true;
      }
    if (!merged) roots.emplace_back(root, powers[i]);
  }
  return roots;
}

std::vector<std::vector<Scalar>> parse_polys(std::string_view text) {
  std::string s = strip(text);
  std::vector<std::vector<Scalar>> out;
  for (const auto& part : split_top(s, ';')) {
    std::vector<Scalar> coeffs;
    if (!part.empty())
      for (const auto& c : split_top(part, ',')) coeffs.push_back(Scalar::parse(c));
    out.push_back(std::move(coeffs));
  }
  return out;
}

ModuleHandle parse_module(std::string_view text, int depth) {
  std::string s = strip(text);
  bool has_args = false;
  auto [name, args] = call_parts(s, has_args);
  if (!has_args) bad("expected Family(parameters)", text);
  if (name == "Verma" || name == "M") return make_verma(scalar_args(args, 1, name)[0]);
  if (name == "LowVerma") return make_low_verma(scalar_args(args, 1, name)[0]);
  if (name == "W" || name == "Whittaker") return make_whittaker(scalar_args(args, 1, name)[0]);
  if (name == "X") return make_x(scalar_args(args, 1, name)[0]);
  if (name == "Xbar") {
    auto p = scalar_args(args, 2, name);
    return make_xbar(p[0], p[1]);
  }
  if (name == "Vdense") {
    auto p = scalar_args(args, 2, name);
    return make_vdense(p[0], p[1]);
  }
  if (name == "Twist") {
    auto parts = split_top(args, ',');
    if (parts.size() != 2) bad("Twist takes a module and an automorphism", text);
    return make_twist(parse_module(parts[0], depth), parse_automorphism(parts[1]));
  }
  if (name == "Tensor") {
    auto parts = split_top(args, ',');
    if (parts.size() != 2) bad("Tensor takes two modules", text);
    return make_tensor(parse_module(parts[0], depth), parse_module(parts[1], depth));
  }
  if (name == "VirPoly") {
    auto parts = split_top(args, ';', 2);
    if (parts.size() != 2) bad("VirPoly takes f;p_1;...;p_k", text);
    MuData mu{parse_factored(parts[0]), parse_polys(parts[1])};
    return make_virpoly(mu, depth);
  }
  bad("unknown module family", text);
}

}  // namespace sl2vir
