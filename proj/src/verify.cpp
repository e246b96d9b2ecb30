#include "sl2vir/verify.hpp"

#include <algorithm>
#include <chrono>

#include "modules_impl.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"

namespace sl2vir {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Presentation::Monomial> sorted_monomials(std::vector<std::pair<SL2Monomial, BasisKey>> list, int max_depth) {
  std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Presentation::Monomial> out;
  for (const auto& [m, key] : list)
    if (m.degree() <= max_depth) out.push_back({key, UEnvElt::monomial(m), m.degree()});
  return out;
}

ModVec drop_keys(ModVec v, const std::set<BasisKey>& keys) {
  for (const auto& k : keys) v.mutable_terms().erase(k);
  return v;
}

int max_depth_of(const Module& m, const ModVec& v) {
  int d = 0;
  for (const auto& [k, c] : v.terms()) d = std::max(d, m.depth(k));
  return d;
}

}  // namespace

Presentation presentation(const Module& m, int max_depth) {
  using namespace detail;
  Presentation p;
  std::vector<std::pair<SL2Monomial, BasisKey>> monos;
  if (auto tw = as_twist(m)) {
    Presentation inner = presentation(*tw->inner, max_depth);
    Automorphism inv = tw->automorphism->inverse();
    for (auto& r : inner.relations) p.relations.push_back({"A^-1(" + r.label + ")", aut_extend(inv, r.y), r.value});
    for (auto& mo : inner.monomials) p.monomials.push_back({mo.key, aut_extend(inv, mo.u), mo.depth});
    return p;
  }
  auto params = module_params(m);
  switch (m.family()) {
    case Family::Verma:
    case Family::LowVerma: {
      bool low = m.family() == Family::LowVerma;
      p.relations.push_back({low ? "f" : "e", UEnvElt::from_sl2(low ? SL2Elt::f() : SL2Elt::e()), Scalar()});
      p.relations.push_back({"h", UEnvElt::h(), params.at("delta")});
      for (int k = 0; k <= max_depth; ++k) {
        SL2Monomial mono = low ? SL2Monomial{0, 0, k} : SL2Monomial{k, 0, 0};
        monos.push_back({mono, {k}});
      }
      break;
    }
    case Family::X:
      p.relations.push_back({"h", UEnvElt::h(), params.at("xi")});
      for (int k = 0; k <= max_depth; ++k)
        for (int l = 0; k + l <= max_depth; ++l) monos.push_back({{k, 0, l}, {k, l}});
      break;
    case Family::Whittaker:
      p.relations.push_back({"e", UEnvElt::e(), params.at("eta")});
      for (int a = 0; a <= max_depth; ++a)
        for (int b = 0; a + b <= max_depth; ++b) monos.push_back({{a, b, 0}, {a, b}});
      break;
    case Family::Xbar:
      p.relations.push_back({"h", UEnvElt::h(), params.at("xi")});
      p.relations.push_back({"c", casimir_elt(), params.at("tau")});
      monos.push_back({{0, 0, 0}, {0}});
      for (int s = 1; s <= max_depth; ++s) {
        monos.push_back({{0, 0, s}, {s}});
        monos.push_back({{s, 0, 0}, {-s}});
      }
      break;
    case Family::Induced:
    case Family::VirPoly: {
      const auto& q = dynamic_cast<const QuotientModule&>(m);
      if (max_depth > q.table_depth())
        throw Error(ErrorKind::DepthExceeded, "presentation needs normal forms to depth " + std::to_string(max_depth));
      const auto& chi = q.character();
      for (size_t i = 0; i < chi.basis.size(); ++i)
        p.relations.push_back({chi.basis[i].to_string(), UEnvElt::from_sl2(chi.basis[i]), chi.values[i]});
      for (const auto& mono : q.quotient().standard_monomials()) monos.push_back({mono, monomial_key(mono)});
      break;
    }
    default:
      throw Error(ErrorKind::InvalidParameter, m.name() + " has no cyclic presentation");
  }
  p.monomials = sorted_monomials(std::move(monos), max_depth);
  return p;
}

nlohmann::json MapCheckReport::to_json() const {
  nlohmann::json j = {{"relations_hold", relations_hold},
                      {"injective_up_to_N", injective_up_to_N},
                      {"surjective_onto_window", surjective_onto_window},
                      {"depth", depth},
                      {"image_rank", image_rank},
                      {"window_dim", window_dim}};
  if (witness) j["witness"] = *witness;
  return j;
}

MapCheckReport check_module_map(const Module& src, const Module& dst, const ModVec& gen_image, int N,
                                const MapCheckOptions& options) {
  MapCheckReport r;
  r.depth = N;
  auto project = [&](const ModVec& v) { return drop_keys(v, options.quotient_keys); };
  const ModVec g = project(gen_image);
  const int gdepth = max_depth_of(dst, g);

  const Presentation pres = presentation(src, N + gdepth);
  r.relations_hold = true;
  for (const auto& rel : pres.relations) {
    ModVec lhs = project(act_uenv(dst, rel.y, g));
    if (lhs != g * rel.value) {
      r.relations_hold = false;
      r.witness = "relation " + rel.label + " . gen = " + rel.value.to_string() + " fails";
      break;
    }
  }

  EchelonBasis<BasisKey> window_span, all_span;
  r.injective_up_to_N = true;
  for (const auto& mono : pres.monomials) {
    ModVec img = project(act_uenv(dst, mono.u, g));
    if (mono.depth <= N) {
      if (window_span.insert(img.terms())) {
        ++r.image_rank;
      } else if (r.injective_up_to_N) {
        r.injective_up_to_N = false;
        if (!r.witness) r.witness = "image of src basis " + key_to_string(mono.key) + " [" + mono.u.to_string() + "] is dependent";
      }
    }
    all_span.insert(img.terms());
  }

  r.surjective_onto_window = true;
  for (const auto& k : dst.window(N)) {
    if (options.quotient_keys.count(k)) continue;
    if (options.target_keys && !options.target_keys->count(k)) continue;
    ++r.window_dim;
    if (r.surjective_onto_window && !all_span.contains(ModVec::basis(k).terms())) {
      r.surjective_onto_window = false;
      if (!r.witness) r.witness = "dst basis " + key_to_string(k) + " is not reached";
    }
  }
  return r;
}

// ---- simplicity ----

namespace {

std::vector<long> integer_roots(const Scalar& xi, const Scalar& tau) {
  std::vector<long> out;
  Scalar s;
  try {
    s = sqrt_exact(tau);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotRepresentable) return out;
    throw;
  }
  for (const Scalar& r : {s, -s}) {
    Scalar i = (r - xi - Scalar(1)) / Scalar(2);
    if (i.is_integer()) {
      long v = i.to_long();
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicityResult simplicity_test(const Scalar& xi, const Scalar& tau) {
  auto roots = integer_roots(xi, tau);
  if (roots.empty()) return {true, std::nullopt};
  for (long i : roots)
    if (i >= 0) return {false, i};
  return {false, roots.back()};
}

SimplicityResult generator_test(const Scalar& xi_prime, const Scalar& tau) {
  for (long i : integer_roots(xi_prime, tau))
    if (i >= 0) return {false, i};
  return {true, std::nullopt};
}

// ---- reports ----

bool SuiteReport::passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const auto& kv) { return kv.second; });
}

void SuiteReport::flag(const std::string& name, bool value, const std::optional<std::string>& why) {
  flags[name] = value;
  if (!value && !witness) witness = why ? name + ": " + *why : name;
}

void SuiteReport::absorb(const std::string& prefix, const MapCheckReport& r) {
  flag(prefix + ".relations_hold", r.relations_hold, r.witness);
  flag(prefix + ".injective_up_to_N", r.injective_up_to_N, r.witness);
  flag(prefix + ".surjective_onto_window", r.surjective_onto_window, r.witness);
  details[prefix] = r.to_json();
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
  nlohmann::json j = {{"schema", "report/1"},
                      {"suite", suite},
                      {"params", params},
                      {"flags", flags},
                      {"passed", passed()},
                      {"depth", depth},
                      {"elapsed_ms", with_timing ? elapsed_ms : 0.0},
                      {"details", details}};
  if (witness) j["witness"] = *witness;
  return j;
}

// ---- suite_dense ----

SuiteReport suite_dense(const Scalar& xi, const Scalar& tau, int N) {
  auto start = Clock::now();
  SuiteReport rep;
  rep.suite = "dense";
  rep.params = {{"xi", xi.to_string()}, {"tau", tau.to_string()}};
  rep.depth = N;
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "depth must be at least 1");

  detail::XModule X(xi);
  const UEnvElt shift = casimir_elt() - UEnvElt::scalar(tau);
  auto C = [&](const ModVec& v) { return act_uenv(X, shift, v); };
  const auto window = X.window(N);

  // (c - tau)^n applied to basis vectors of depth <= N - 2n, for n = 0..4.
  std::vector<std::vector<ModVec>> powers(5);
  for (const auto& k : window) {
    ModVec v = ModVec::basis(k);
    for (int n = 0; n <= 4 && X.depth(k) <= N - 2 * n; ++n) {
      powers[n].push_back(v);
      v = C(v);
    }
  }
  bool nonzero = true;
  std::optional<std::string> nonzero_why;
  for (const auto& k : window)
    if (C(ModVec::basis(k)).is_zero()) {
      nonzero = false;
      nonzero_why = "(c-tau) kills " + key_to_string(k);
      break;
    }
  rep.flag("casimir_shift_nonzero", nonzero, nonzero_why);

  int strict_to = -1;
  for (int n = 0; n <= 3; ++n) {
    EchelonBasis<BasisKey> sn, sn1;
    for (const auto& v : powers[n]) sn.insert(v.terms());
    bool contained = true;
    for (const auto& v : powers[n + 1]) {
      sn1.insert(v.terms());
      contained = contained && sn.contains(v.terms());
    }
    ModVec top = ModVec::basis(X.generator_key());
    for (int i = 0; i < n; ++i) top = C(top);
    bool strict = contained && sn1.rank() < sn.rank() && !sn1.contains(top.terms());
    if (!strict) break;
    strict_to = n;
  }
  const int wanted = std::min(3, N / 2);
  rep.flag("filtration_strict", strict_to >= wanted,
           "strict only through n = " + std::to_string(strict_to));
  rep.details["filtration_strict_to"] = strict_to;

  {
    EchelonBasis<BasisKey> img;
    for (const auto& k : window) img.insert(C(ModVec::basis(k)).terms());
    rep.flag("shift_injective", img.rank() == static_cast<int>(window.size()),
             "rank " + std::to_string(img.rank()) + " < " + std::to_string(window.size()));
  }

  auto gen = generator_test(xi, tau);
  auto Xbar = make_xbar(xi, tau);
  if (gen.holds) {
    rep.details["branch"] = "iso_to_Vdense";
    auto V = make_vdense(xi, tau);
    // e^l xbar -> prod_{j<l} (1/4)(tau - (xi+2j+1)^2) v_{xi+2l}; f^k xbar -> v_{xi-2k}.
    auto phi = [&](const ModVec& v, bool inverse) {
      ModVec out;
      for (const auto& [k, c] : v.terms()) {
        Scalar coef(1);
        for (long j = 0; j < k[0]; ++j) {
          Scalar s = xi + Scalar(2 * j + 1);
          coef *= (tau - s * s) * Scalar::frac(1, 4);
        }
        out.add_term(k, inverse ? c / coef : c * coef);
      }
      return out;
    };
    auto intertwines_with = [&](bool inverse, std::optional<std::string>& why) {
      for (const auto& k : Xbar->window(N))
        for (int g = 0; g < 3; ++g) {
          SL2Elt x = SL2Elt::basis(g);
          ModVec b = ModVec::basis(k);
          if (phi(Xbar->act(x, b), inverse) != V->act(x, phi(b, inverse))) {
            why = "generator " + x.to_string() + " on " + key_to_string(k);
            return false;
          }
        }
      return true;
    };
    std::optional<std::string> why, unused;
    bool intertwines = intertwines_with(false, why);
    rep.details["inverse_normalisation_intertwines"] = intertwines_with(true, unused);
    rep.flag("explicit_map_intertwines", intertwines, why);
    rep.absorb("map", check_module_map(*Xbar, *V, V->generator(), N));
  } else {
    const long j0 = *gen.witness_i;
    rep.details["branch"] = "composition_series";
    rep.details["j0"] = j0;
    const Scalar d1 = xi + Scalar(2 * j0), d2 = xi + Scalar(2 * j0 + 2);
    auto quotient = make_verma(d1);
    auto sub = make_low_verma(d2);
    rep.details["pieces"] = {{"quotient", quotient->name()}, {"sub", sub->name()}};

    std::set<BasisKey> y_keys, y_window;
    for (long s = j0 + 1; s <= N + j0 + 2; ++s) y_keys.insert({s});
    for (const auto& k : Xbar->window(N))
      if (k[0] > j0) y_window.insert(k);

    bool invariant = true;
    std::optional<std::string> why;
    for (const auto& k : y_window)
      for (int g = 0; g < 3; ++g) {
        ModVec img = Xbar->act(SL2Elt::basis(g), ModVec::basis(k));
        for (const auto& [kk, c] : img.terms())
          if (kk[0] <= j0 && invariant) {
            invariant = false;
            why = SL2Elt::basis(g).to_string() + " moves " + key_to_string(k) + " out of Y";
          }
      }
    rep.flag("Y_invariant", invariant, why);
    rep.flag("f_kills_e^{j0+1}", Xbar->act(SL2Elt::f(), ModVec::basis({j0 + 1})).is_zero());

    MapCheckOptions qopt;
    qopt.quotient_keys = y_keys;
    rep.absorb("quotient", check_module_map(*quotient, *Xbar, ModVec::basis({j0}), N, qopt));
    MapCheckOptions sopt;
    sopt.target_keys = y_window;
    rep.absorb("sub", check_module_map(*sub, *Xbar, ModVec::basis({j0 + 1}), N, sopt));

    // Weight-by-weight dimensions of the two pieces on the window.
    std::map<long, int> qdim, sdim;
    for (long k = 0; k <= N + j0; ++k) {
      ModVec img = ModVec::basis({j0});
      for (long i = 0; i < k; ++i) img = Xbar->act(SL2Elt::f(), img);
      img = drop_keys(img, y_keys);
      long s = j0 - k;
      if (s >= -N && !img.is_zero()) qdim[s] += 1;
    }
    for (long k = 0; j0 + 1 + k <= N; ++k) {
      ModVec img = ModVec::basis({j0 + 1});
      for (long i = 0; i < k; ++i) img = Xbar->act(SL2Elt::e(), img);
      if (!img.is_zero()) sdim[j0 + 1 + k] += 1;
    }
    bool ranks_ok = true;
    nlohmann::json ranks = nlohmann::json::array();
    for (long s = -N; s <= N; ++s) {
      int q = qdim[s], sb = sdim[s];
      int want_q = s <= j0 ? 1 : 0;
      if (q != want_q || q + sb != 1) ranks_ok = false;
      ranks.push_back({{"s", s}, {"quotient", q}, {"sub", sb}});
    }
    rep.details["weight_ranks"] = ranks;
    rep.flag("weight_ranks", ranks_ok);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---- suite_restriction ----

SuiteReport suite_restriction(const MuData& mu, int N) {
  auto start = Clock::now();
  mu.validate();
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "depth must be at least 1");
  SuiteReport rep;
  rep.suite = "restriction";
  rep.params = {{"f", mu.f().to_string()}, {"mu", mu.to_string()}};
  rep.depth = N;
  const int deg = mu.degree();
  auto V = make_virpoly(mu, N + 2);
  const ModVec v0 = V->generator();
  bool mu_zero = true;
  for (const auto& p : mu.polys)
    for (const auto& c : p) mu_zero = mu_zero && c.is_zero();
  rep.details["mu_zero"] = mu_zero;

  if (deg == 3) {
    // u = f^a h^b e^c read in U(sl2^Vir): e -> e_1, h -> 2 e_0, f -> -e_{-1}.
    EchelonBasis<BasisKey> span;
    int count = 0;
    std::optional<std::string> why;
    for (const auto& m : monomials_up_to(N - 1)) {
      ModVec w = v0;
      for (int i = 0; i < m.c; ++i) w = V->act_vir(VirElt::basis(1), w);
      for (int i = 0; i < m.b; ++i) w = V->act_vir(VirElt::basis(0, 2), w);
      for (int i = 0; i < m.a; ++i) w = V->act_vir(VirElt::basis(-1, -1), w);
      ++count;
      if (!span.insert(w.terms()) && !why) why = "image of " + m.to_string() + " is dependent";
    }
    rep.details["target"] = "U(sl2)";
    rep.details["rank"] = span.rank();
    rep.details["monomials"] = count;
    rep.flag("free", span.rank() == count, why);
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  ModuleHandle target;
  if (deg == 1) {
    const Scalar lambda = mu.roots[0].first;
    const Scalar delta = Scalar(2) * mu.value_at(0) / lambda;
    target = make_twist(make_verma(delta), Automorphism::gamma(lambda).inverse());
    const Scalar c = (delta + Scalar(1)) * (delta + Scalar(1));
    rep.details["casimir"] = c.to_string();
    bool central = true;
    std::optional<std::string> why;
    for (const auto& k : V->window(N)) {
      ModVec b = ModVec::basis(k);
      if (casimir_action(*V, b) != b * c) {
        central = false;
        why = "Casimir is not " + c.to_string() + " on " + key_to_string(k);
        break;
      }
    }
    rep.flag("casimir_scalar", central, why);
  } else if (mu.roots.size() == 1) {
    const Scalar lambda = mu.roots[0].first;
    const Scalar eta = mu.value_at(-1);
    target = make_twist(make_whittaker(eta), Automorphism::gamma(lambda).inverse());
    if (eta.is_zero()) rep.details["note"] = "W(0) target: not a standard Whittaker module";
  } else {
    const Scalar l1 = mu.roots[0].first, l2 = mu.roots[1].first;
    const Scalar xi = Scalar(-2) * mu.value_at(-1) / (l2 - l1);
    target = make_twist(make_x(xi), Automorphism::gamma2(l1, l2).inverse());
  }
  rep.details["target"] = target->name();
  rep.absorb("map", check_module_map(*V, *target, target->generator(), N));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---- suite_tensor_vermas ----

SuiteReport suite_tensor_vermas(const Scalar& l1, const Scalar& l2, const Scalar& mu1, const Scalar& mu2, int N) {
  auto start = Clock::now();
  if (l1.is_zero() || l2.is_zero()) throw Error(ErrorKind::InvalidParameter, "roots must be nonzero");
  if (l1 == l2) throw Error(ErrorKind::InvalidParameter, "roots must be distinct");
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "depth must be at least 1");
  SuiteReport rep;
  rep.suite = "tensor_vermas";
  rep.params = {{"lambda1", l1.to_string()}, {"lambda2", l2.to_string()}, {"mu1", mu1.to_string()},
                {"mu2", mu2.to_string()}};
  rep.depth = N;

  const Automorphism g12 = Automorphism::gamma2(l1, l2);
  auto dst = make_tensor(make_twist(make_verma(mu1), Automorphism::gamma(l1).inverse()),
                         make_twist(make_verma(mu2), Automorphism::gamma(l2).inverse()));
  auto src = make_twist(make_x(mu1 - mu2), g12.inverse());
  rep.details["target"] = src->name();
  const ModVec gen = dst->generator();
  rep.flag("generator_eigenvector", dst->act(g12.apply(SL2Elt::h()), gen) == gen * (mu1 - mu2));
  rep.absorb("sl2", check_module_map(*src, *dst, gen, N));

  // Vir level: v1 (x) v2 against the character of Vir^g, g = (t - l1)(t - l2).
  const Scalar m1 = l1 * mu1 / Scalar(2), m2 = l2 * mu2 / Scalar(2);
  auto v1 = make_virpoly(MuData{{{l1, 1}}, {{m1}}}, 2);
  auto v2 = make_virpoly(MuData{{{l2, 1}}, {{m2}}}, 2);
  auto T = make_tensor(v1, v2);
  MuData sum{{{l1, 1}, {l2, 1}}, {{m1 * (l1 - l2)}, {m2 * (l2 - l1)}}};
  rep.details["vir_target"] = "VirPoly(" + sum.to_string() + ")";
  const LaurentPoly g = sum.f();
  const ModVec tv = T->generator();
  bool rel_ok = true;
  std::optional<std::string> why;
  for (long i = -N; i <= N; ++i) {
    VirElt w = VirElt::from_laurent(g.shifted(i));
    if (T->act_vir(w, tv) != tv * mu_eval(sum, w)) {
      rel_ok = false;
      why = "t^" + std::to_string(i) + " g";
      break;
    }
  }
  rep.flag("vir_relations", rel_ok, why);
  rep.flag("z_acts_trivially", T->act_vir(VirElt::central(), tv).is_zero());
  rep.flag("x_parameter_matches", Scalar(-2) * sum.value_at(-1) / (l2 - l1) == mu1 - mu2);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---- suite_twist_induction ----

SuiteReport suite_twist_induction(const std::vector<SL2Elt>& basis, const std::vector<Scalar>& values, int N) {
  auto start = Clock::now();
  if (basis.size() != values.size() || basis.empty() || basis.size() > 2)
    throw Error(ErrorKind::InvalidParameter, "expected one or two basis elements with values");
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "depth must be at least 1");
  SuiteReport rep;
  rep.suite = "twist_induction";
  nlohmann::json b = nlohmann::json::array();
  for (size_t i = 0; i < basis.size(); ++i) b.push_back({basis[i].to_string(), values[i].to_string()});
  rep.params = {{"character", b}};
  rep.depth = N;

  ModuleHandle target;
  if (basis.size() == 1) {
    auto cls = classify_subalgebra_1d(basis[0]);
    const Scalar value = cls.scale * values[0];
    bool nilpotent = cls.type == Subalgebra1D::NLambda || cls.type == Subalgebra1D::NMinus;
    rep.details["subalgebra"] = to_string(cls.type);
    target = make_twist(nilpotent ? make_whittaker(value) : make_x(value), cls.automorphism.inverse());
    if (nilpotent && value.is_zero()) rep.details["note"] = "non-Whittaker induced";
  } else {
    auto cls = classify_subalgebra_2d(basis[0], basis[1]);
    rep.details["subalgebra"] = to_string(cls.type);
    // gamma(h) = alpha x + beta y
    const SL2Elt gh = cls.automorphism.image(SL2Elt::H);
    const SL2Elt &x = basis[0], &y = basis[1];
    std::optional<Scalar> delta;
    for (int i = 0; i < 3 && !delta; ++i)
      for (int j = i + 1; j < 3 && !delta; ++j) {
        Scalar det = x[i] * y[j] - x[j] * y[i];
        if (det.is_zero()) continue;
        Scalar alpha = (gh[i] * y[j] - gh[j] * y[i]) / det;
        Scalar beta = (x[i] * gh[j] - x[j] * gh[i]) / det;
        delta = alpha * values[0] + beta * values[1];
      }
    target = make_twist(make_verma(*delta), cls.automorphism.inverse());
  }
  rep.details["target"] = target->name();
  auto src = make_induced(Character{basis, values}, N + 1);
  rep.absorb("map", check_module_map(*src, *target, target->generator(), N));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace sl2vir
