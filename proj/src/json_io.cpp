#include "sl2vir/json_io.hpp"

#include "sl2vir/error.hpp"

namespace sl2vir {

void to_json(json& j, const Scalar& s) {
  j = json::array({s.re().get_num().get_str(), s.re().get_den().get_str(), s.im().get_num().get_str(),
                   s.im().get_den().get_str()});
}

void from_json(const json& j, Scalar& s) {
  if (j.is_string()) {
    s = Scalar::parse(j.get<std::string>());
    return;
  }
  if (j.is_number_integer()) {
    s = Scalar(j.get<long>());
    return;
  }
  if (!j.is_array() || j.size() != 4)
    throw Error(ErrorKind::InvalidParameter, "scalar must be a string or [re_num, re_den, im_num, im_den]");
  auto part = [&](int n, int d) {
    Integer num(j.at(n).get<std::string>()), den(j.at(d).get<std::string>());
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in scalar");
    return Rational(num, den);
  };
  s = Scalar(part(0, 1), part(2, 3));
}

void to_json(json& j, const LaurentPoly& p) {
  j = json::array();
  for (const auto& [e, c] : p.terms()) j.push_back(json::array({e, c}));
}

void from_json(const json& j, LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& term : j) out.add_term(term.at(0).get<long>(), term.at(1).get<Scalar>());
  p = out;
}

void to_json(json& j, const SL2Elt& x) { j = json{{"e", x.ce()}, {"h", x.ch()}, {"f", x.cf()}}; }

void from_json(const json& j, SL2Elt& x) {
  x = SL2Elt(j.at("e").get<Scalar>(), j.at("h").get<Scalar>(), j.at("f").get<Scalar>());
}

void to_json(json& j, const VirElt& x) {
  json terms = json::array();
  for (const auto& [i, c] : x.terms()) terms.push_back(json::array({i, c}));
  j = json{{"terms", terms}, {"z", x.z()}};
}

void to_json(json& j, const Automorphism& a) {
  json rows = json::array();
  for (const auto& row : a.matrix()) rows.push_back(json::array({row[0], row[1], row[2]}));
  j = json{{"matrix", rows}, {"tag", a.tag()}};
}

void to_json(json& j, const UEnvElt& u) {
  j = json::array();
  for (const auto& [m, c] : u.terms()) j.push_back(json::array({json::array({m.a, m.b, m.c}), c}));
}

}  // namespace sl2vir
