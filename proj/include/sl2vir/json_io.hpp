#ifndef SL2VIR_JSON_IO_HPP
#define SL2VIR_JSON_IO_HPP

#include "json.hpp"
#include "sl2vir/automorphism.hpp"
#include "sl2vir/laurent.hpp"
#include "sl2vir/lie.hpp"
#include "sl2vir/pbw.hpp"
#include "sl2vir/scalar.hpp"

namespace sl2vir {

using nlohmann::json;

// Scalar: [re_num, re_den, im_num, im_den] as decimal strings.
void to_json(json& j, const Scalar& s);
void from_json(const json& j, Scalar& s);

// LaurentPoly: sorted [exponent, Scalar] pairs.
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);

// SL2Elt: {e, h, f}.
void to_json(json& j, const SL2Elt& x);
void from_json(const json& j, SL2Elt& x);

// VirElt: {terms: [[i, Scalar]], z: Scalar}.
void to_json(json& j, const VirElt& x);

// Automorphism: {matrix: row-major 3x3, tag}.
void to_json(json& j, const Automorphism& a);

// UEnvElt: sorted [[a, b, c], Scalar] pairs.
void to_json(json& j, const UEnvElt& u);

}  // namespace sl2vir

#endif
