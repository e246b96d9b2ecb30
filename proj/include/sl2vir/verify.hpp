#ifndef SL2VIR_VERIFY_HPP
#define SL2VIR_VERIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "sl2vir/modules.hpp"

namespace sl2vir {

/// Result of checking a candidate homomorphism src -> dst determined by the image of src's generator.
/// All claims hold on the depth window only.
struct MapCheckReport {
  bool relations_hold = false;
  bool injective_up_to_N = false;
  bool surjective_onto_window = false;
  /// First failure: a relation, a src basis monomial whose image is dependent, or a dst key not reached.
  std::optional<std::string> witness;
  int depth = 0;
  int image_rank = 0;
  int window_dim = 0;

  bool ok() const { return relations_hold && injective_up_to_N && surjective_onto_window; }
  nlohmann::json to_json() const;
};

struct MapCheckOptions {
  /// Work in dst modulo the span of these basis vectors.
  std::set<BasisKey> quotient_keys;
  /// When set, the target window is restricted to these keys (the map lands in a submodule).
  std::optional<std::set<BasisKey>> target_keys;
};

/// One defining relation y . gen = value . gen of a cyclic module, and its free basis.
struct Presentation {
  struct Relation {
    std::string label;
    UEnvElt y;
    Scalar value;
  };
  struct Monomial {
    BasisKey key;
    UEnvElt u;
    int depth;
  };
  std::vector<Relation> relations;
  /// Basis monomials of depth <= max_depth, in degree-lex order.
  std::vector<Monomial> monomials;
};

/// Presentation of a cyclic family (Verma, LowVerma, X, W, Xbar, Induced, VirPoly and twists of these).
/// Throws InvalidParameter for other families.
Presentation presentation(const Module& m, int max_depth);

/// Checks that gen_image satisfies the relations of src's generator and that the induced map is
/// injective on src's depth-N window and onto dst's depth-N window.
MapCheckReport check_module_map(const Module& src, const Module& dst, const ModVec& gen_image, int N,
                                const MapCheckOptions& options = {});

struct SimplicityResult {
  bool holds = false;  // irreducible / generates
  std::optional<long> witness_i;
};

/// V(xi + 2Z, tau) is irreducible iff tau != (xi + 2i + 1)^2 for all integers i.
SimplicityResult simplicity_test(const Scalar& xi, const Scalar& tau);
/// V(xi' + 2Z, tau) is generated by v_xi' iff tau != (xi' + 2i + 1)^2 for all i >= 0.
SimplicityResult generator_test(const Scalar& xi_prime, const Scalar& tau);

/// Uniform suite output: {suite, params, flags, witness?, depth, elapsed_ms} plus suite details.
struct SuiteReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, bool> flags;
  std::optional<std::string> witness;
  int depth = 0;
  double elapsed_ms = 0;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const;
  /// Records a flag; the first failing flag with a witness becomes the report witness.
  void flag(const std::string& name, bool value, const std::optional<std::string>& why = std::nullopt);
  void absorb(const std::string& prefix, const MapCheckReport& r);
  nlohmann::json to_json(bool with_timing = false) const;
};

enum class DenseBranch { IsoToVdense, CompositionSeries };

/// Filtration by (c - tau)^n on X(xi), the shift isomorphism, and the structure of Xbar(xi, tau).
/// details: branch, j0, filtration_strict_to, pieces.
SuiteReport suite_dense(const Scalar& xi, const Scalar& tau, int N);

/// Restriction of V^f_mu to sl2: Verma / Whittaker / X twists for deg f = 1, 2 and freeness for deg 3.
/// details: target, casimir (deg 1).
SuiteReport suite_restriction(const MuData& mu, int N);

/// Tensor product of twisted Verma modules against Twist(X(mu1 - mu2), gamma(l1,l2)^-1), at the sl2
/// level and through the Vir^g relations of the generator.
SuiteReport suite_tensor_vermas(const Scalar& l1, const Scalar& l2, const Scalar& mu1, const Scalar& mu2, int N);

/// Module induced from a character of a 1- or 2-dimensional subalgebra against the predicted twist of
/// W, X or a Verma module.
SuiteReport suite_twist_induction(const std::vector<SL2Elt>& basis, const std::vector<Scalar>& values, int N);

}  // namespace sl2vir

#endif
