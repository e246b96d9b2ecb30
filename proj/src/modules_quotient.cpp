#include <algorithm>
#include <functional>
#include <set>

#include "modules_impl.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"

namespace sl2vir {

// ---- left ideals ----

LeftIdealQuotient::LeftIdealQuotient(std::vector<UEnvElt> generators, int depth) : depth_(depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidParameter, "negative depth");
  for (const auto& g : generators)
    if (g.degree() != 1) throw Error(ErrorKind::InvalidParameter, "ideal generators must have degree 1");
  for (const auto& m : monomials_up_to(depth - 1))
    for (const auto& g : generators) {
      auto row = nf_multiply(UEnvElt::monomial(m), g);
      ideal_.insert(SparseVec<SL2Monomial>(row.terms().begin(), row.terms().end()));
    }
  for (const auto& m : monomials_up_to(depth))
    if (!ideal_.is_pivot(m)) standard_.push_back(m);
}

bool LeftIdealQuotient::is_standard(const SL2Monomial& m) const {
  return m.degree() <= depth_ && !ideal_.is_pivot(m);
}

UEnvElt LeftIdealQuotient::reduce(const UEnvElt& u) const {
  if (u.degree() > depth_)
    throw Error(ErrorKind::DepthExceeded,
                "degree " + std::to_string(u.degree()) + " exceeds the precomputed depth " + std::to_string(depth_));
  SparseVec<SL2Monomial> v(u.terms().begin(), u.terms().end());
  ideal_.reduce(v);
  return UEnvElt(UEnvElt::Terms(v.begin(), v.end()));
}

// ---- characters of Vir^f ----

void MuData::validate() const {
  if (roots.empty()) throw Error(ErrorKind::BadPolynomial, "f needs at least one root");
  std::set<Scalar> seen;
  for (const auto& [r, n] : roots) {
    if (r.is_zero()) throw Error(ErrorKind::BadPolynomial, "root 0 makes Vir^f all of Vir");
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "root multiplicities must be positive");
    if (!seen.insert(r).second) throw Error(ErrorKind::InvalidParameter, "repeated root " + r.to_string());
  }
  if (int d = degree(); d < 1 || d > 3) throw Error(ErrorKind::BadPolynomial, "degree of f must be 1, 2 or 3");
  if (polys.size() != roots.size()) throw Error(ErrorKind::InvalidParameter, "need one polynomial per root");
  for (size_t i = 0; i < roots.size(); ++i)
    if (static_cast<int>(polys[i].size()) > roots[i].second)
      throw Error(ErrorKind::InvalidParameter, "deg p_i must be below the multiplicity of lambda_i");
}

int MuData::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.second;
  return d;
}

LaurentPoly MuData::f() const { return LaurentPoly::from_roots(roots); }

Scalar MuData::value_at(long j) const {
  Scalar out;
  for (size_t i = 0; i < roots.size(); ++i) {
    Scalar p, jp(1);
    for (const auto& c : polys[i]) {
      p += c * jp;
      jp *= Scalar(j);
    }
    if (!p.is_zero()) out += p * roots[i].first.pow(j);
  }
  return out;
}

std::string MuData::to_string() const {
  std::string out;
  for (const auto& [r, n] : roots) {
    std::string factor = "(t";
    Scalar neg = -r;
    std::string s = neg.to_string();
    factor += (s.front() == '-' ? "" : "+") + s + ")";
    if (n > 1) factor += "^" + std::to_string(n);
    out += factor;
  }
  out += ";";
  for (size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ";";
    for (size_t k = 0; k < polys[i].size(); ++k) out += (k ? "," : "") + polys[i][k].to_string();
    if (polys[i].empty()) out += "0";
  }
  return out;
}

Scalar mu_eval(const MuData& mu, const VirElt& w) {
  const LaurentPoly f = mu.f();
  const long k = f.max_exponent();
  const Scalar ak = f.coeff(k);
  LaurentPoly rem = w.laurent_part();
  Scalar out;
  while (!rem.is_zero() && rem.width() >= k) {
    long top = rem.max_exponent();
    Scalar c = rem.coeff(top) / ak;
    out += c * mu.value_at(top - k);
    rem -= f.shifted(top - k) * c;
  }
  if (!rem.is_zero()) throw Error(ErrorKind::NotInSubalgebra, w.to_string() + " is not in Vir^f");
  return out;
}

namespace detail {

// ---- quotients U(sl2) / U(sl2) ker(mu) ----

namespace {

std::vector<UEnvElt> ideal_generators(const Character& chi) {
  if (chi.basis.size() != chi.values.size())
    throw Error(ErrorKind::InvalidParameter, "character needs one value per basis element");
  if (sl2_rank(chi.basis) != static_cast<int>(chi.basis.size()))
    throw Error(ErrorKind::InvalidParameter, "character basis is linearly dependent");
  if (chi.basis.size() > 2) throw Error(ErrorKind::InvalidParameter, "character of sl2 itself is trivial");
  if (chi.basis.size() == 2) {
    const auto& x = chi.basis[0];
    const auto& y = chi.basis[1];
    auto b = bracket_sl2(x, y);
    // [x,y] = alpha x + beta y; solve on a pair of coordinates with nonzero minor.
    bool solved = false;
    for (int i = 0; i < 3 && !solved; ++i)
      for (int j = i + 1; j < 3 && !solved; ++j) {
        Scalar det = x[i] * y[j] - x[j] * y[i];
        if (det.is_zero()) continue;
        Scalar alpha = (b[i] * y[j] - b[j] * y[i]) / det;
        Scalar beta = (x[i] * b[j] - x[j] * b[i]) / det;
        if (alpha * x + beta * y != b) throw Error(ErrorKind::NotASubalgebra, "basis does not span a subalgebra");
        if (!(alpha * chi.values[0] + beta * chi.values[1]).is_zero())
          throw Error(ErrorKind::InvalidParameter, "values do not vanish on the derived subalgebra");
        solved = true;
      }
  }
  std::vector<UEnvElt> gens;
  for (size_t i = 0; i < chi.basis.size(); ++i)
    gens.push_back(UEnvElt::from_sl2(chi.basis[i]) - UEnvElt::scalar(chi.values[i]));
  return gens;
}

}  // namespace

QuotientModule::QuotientModule(Character chi, int depth)
    : chi_(std::move(chi)), quotient_(ideal_generators(chi_), depth) {}

std::vector<BasisKey> QuotientModule::window(int d) const {
  if (d > quotient_.depth())
    throw Error(ErrorKind::DepthExceeded,
                "window " + std::to_string(d) + " exceeds the precomputed depth " + std::to_string(quotient_.depth()));
  std::vector<BasisKey> out;
  for (const auto& m : quotient_.standard_monomials())
    if (m.degree() <= d) out.push_back(monomial_key(m));
  std::sort(out.begin(), out.end());
  return out;
}

ModVec QuotientModule::to_modvec(const UEnvElt& u) const {
  ModVec out;
  const UEnvElt r = quotient_.reduce(u);
  for (const auto& [m, c] : r.terms()) out.add_term(monomial_key(m), c);
  return out;
}

UEnvElt QuotientModule::to_uenv(const ModVec& v) const {
  UEnvElt out;
  for (const auto& [k, c] : v.terms()) out.add_term(key_monomial(k), c);
  return out;
}

ModVec QuotientModule::act_basis(const SL2Elt& x, const BasisKey& k) const {
  return to_modvec(nf_multiply(UEnvElt::from_sl2(x), UEnvElt::monomial(key_monomial(k))));
}

std::string InducedModule::name() const {
  std::string out = "Induced(";
  for (size_t i = 0; i < chi_.basis.size(); ++i) {
    if (i) out += ";";
    out += chi_.basis[i].to_string() + "->" + chi_.values[i].to_string();
  }
  return out + ")";
}

nlohmann::json InducedModule::to_json() const {
  nlohmann::json basis = nlohmann::json::array();
  for (size_t i = 0; i < chi_.basis.size(); ++i) basis.push_back({{"element", chi_.basis[i]}, {"value", chi_.values[i]}});
  return {{"family", "Induced"}, {"character", basis}, {"depth", table_depth()}};
}

std::string VirPolyModule::name() const { return "VirPoly(" + mu_.to_string() + ")"; }

nlohmann::json VirPolyModule::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& [r, n] : mu_.roots) roots.push_back({r, n});
  return {{"family", "VirPoly"},
          {"f", f_},
          {"roots", roots},
          {"polys", mu_.polys},
          {"depth", table_depth()}};
}

UEnvElt VirPolyModule::vir_on_monomial(long n, const SL2Monomial& m) const {
  // e_n (y w) v = y (e_n w v) + [e_n, y] w v for the leftmost PBW letter y; z acts by 0.
  auto key = std::make_pair(n, m);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  UEnvElt out;
  if (m.degree() == 0) {
    auto dm = laurent_divmod_f(n, f_);
    Scalar value;
    for (const auto& [j, c] : dm.quotient.terms()) value += c * mu_.value_at(j);
    auto r = pullback_sl2(VirElt::from_laurent(dm.remainder));
    if (!r) throw Error(ErrorKind::InvalidParameter, "remainder outside the sl2 window");
    out = quotient_.reduce(UEnvElt::from_sl2(*r) + UEnvElt::scalar(value));
  } else {
    int letter;
    SL2Monomial rest = m;
    long shift;
    Scalar coef;
    if (m.a > 0) {  // f ~ -e_{-1}: [e_n, -e_{-1}] = (n+1) e_{n-1}
      letter = SL2Elt::F;
      --rest.a;
      shift = n - 1;
      coef = Scalar(n + 1);
    } else if (m.b > 0) {  // h ~ 2 e_0: [e_n, 2 e_0] = -2n e_n
      letter = SL2Elt::H;
      --rest.b;
      shift = n;
      coef = Scalar(-2 * n);
    } else {  // e ~ e_1: [e_n, e_1] = (1-n) e_{n+1}
      letter = SL2Elt::E;
      --rest.c;
      shift = n + 1;
      coef = Scalar(1 - n);
    }
    out = left_mul_generator(letter, vir_on_monomial(n, rest));
    if (!coef.is_zero()) out += vir_on_monomial(shift, rest) * coef;
    out = quotient_.reduce(out);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(key, out);
  return out;
}

ModVec VirPolyModule::act_vir(const VirElt& x, const ModVec& v) const {
  UEnvElt total;
  for (const auto& [n, cn] : x.terms())
    for (const auto& [key, c] : v.terms()) total += vir_on_monomial(n, key_monomial(key)) * (cn * c);
  return to_modvec(total);
}

}  // namespace detail

ModuleHandle make_induced(const Character& chi, int depth) {
  return std::make_shared<detail::InducedModule>(chi, depth);
}

ModuleHandle make_virpoly(const MuData& mu, int depth) {
  mu.validate();
  const LaurentPoly f = mu.f();
  Character chi;
  for (const auto& w : intersect_virf_sl2(f)) {
    auto s = pullback_sl2(w);
    if (!s) throw Error(ErrorKind::InvalidParameter, "intersection element outside sl2");
    chi.basis.push_back(*s);
    chi.values.push_back(mu_eval(mu, w));
  }
  return std::make_shared<detail::VirPolyModule>(mu, std::move(chi), depth);
}

}  // namespace sl2vir
