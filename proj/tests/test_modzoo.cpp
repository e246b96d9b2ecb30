#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sl2vir/automorphism.hpp"
#include "sl2vir/error.hpp"
#include "sl2vir/json_io.hpp"
#include "sl2vir/modules.hpp"
#include "sl2vir/pbw.hpp"

using namespace sl2vir;

namespace {

const SL2Elt kE = SL2Elt::e(), kH = SL2Elt::h(), kF = SL2Elt::f();

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidParameter;
}

MuData deg_one(const Scalar& lambda, const Scalar& m) { return MuData{{{lambda, 1}}, {{m}}}; }

// sl2 module axiom on every basis vector of depth <= d
void check_sl2_axiom(const Module& m, int d) {
  for (const auto& k : m.window(d)) {
    ModVec v = ModVec::basis(k);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        SL2Elt x = SL2Elt::basis(i), y = SL2Elt::basis(j);
        ModVec lhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v));
        CHECK_MESSAGE(lhs == m.act(bracket_sl2(x, y), v), m.name() << " key " << key_to_string(k));
      }
  }
}

void check_vir_axiom(const Module& m, int d, long range) {
  std::vector<VirElt> gens;
  for (long n = -range; n <= range; ++n) gens.push_back(VirElt::basis(n));
  gens.push_back(VirElt::central());
  for (const auto& k : m.window(d)) {
    ModVec v = ModVec::basis(k);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const auto &x = gens[i], &y = gens[j];
        ModVec lhs = m.act_vir(x, m.act_vir(y, v)) - m.act_vir(y, m.act_vir(x, v));
        CHECK_MESSAGE(lhs == m.act_vir(bracket_vir(x, y), v),
                      m.name() << " " << x.to_string() << "," << y.to_string() << " key " << key_to_string(k));
      }
  }
}

std::vector<ModuleHandle> sl2_zoo() {
  Scalar g = Scalar::frac(1, 2) + Scalar::i();
  return {
      make_whittaker(1),
      make_whittaker(0),
      make_x(Scalar::frac(1, 3)),
      make_xbar(0, 9),
      make_xbar(g, 2),
      make_vdense(0, 9),
      make_vdense(g, 3),
      make_verma(2),
      make_verma(g),
      make_low_verma(-3),
      make_twist(make_verma(3), Automorphism::gamma(1).inverse()),
      make_twist(make_x(2), Automorphism::gamma2(1, 2).inverse()),
      make_twist(make_whittaker(2), Automorphism::sigma()),
      make_tensor(make_twist(make_verma(3), Automorphism::gamma(1).inverse()),
                  make_twist(make_verma(1), Automorphism::gamma(2).inverse())),
      make_tensor(make_verma(1), make_low_verma(2)),
  };
}

}  // namespace

TEST_SUITE("modzoo") {
  TEST_CASE("construction examples") {
    CHECK(make_whittaker(1)->family() == Family::Whittaker);
    CHECK(kind_of([] { make_virpoly(deg_one(0, 1)); }) == ErrorKind::BadPolynomial);
    auto t = make_tensor(make_twist(make_verma(3), Automorphism::gamma(1).inverse()),
                         make_twist(make_verma(1), Automorphism::gamma(2).inverse()));
    CHECK(t->family() == Family::Tensor);
    CHECK(kind_of([] { make_virpoly(MuData{{{1, 1}, {1, 1}}, {{1}, {1}}}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { make_virpoly(MuData{{{1, 2}}, {{1, 1, 1}}}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { make_virpoly(MuData{{{1, 4}}, {{1}}}); }) == ErrorKind::BadPolynomial);
  }

  TEST_CASE("action examples") {
    auto vd = make_vdense(0, 9);
    CHECK(vd->act(kE, ModVec::basis({1})).is_zero());
    CHECK(vd->act(kF, ModVec::basis({1})) == ModVec::basis({0}));
    CHECK(vd->act(kH, ModVec::basis({1})) == ModVec::basis({1}, 2));
    CHECK(vd->act(kE, ModVec::basis({0})) == ModVec::basis({1}, 2));

    auto verma = make_verma(2);
    CHECK(verma->act(kE, verma->act(kF, verma->generator())) == verma->generator() * Scalar(2));
  }

  TEST_CASE("VirPoly degree one: e_3 v = 12 m v + 8 e_0 v") {
    for (Scalar m : {Scalar(5), Scalar::frac(-1, 3), Scalar::i()}) {
      auto mod = make_virpoly(deg_one(2, m));
      ModVec v = mod->generator();
      ModVec e3 = mod->act_vir(VirElt::basis(3), v);
      ModVec e0 = mod->act_vir(VirElt::basis(0), v);
      CHECK(e3 == v * (Scalar(12) * m) + e0 * Scalar(8));
    }
    auto mod = make_virpoly(deg_one(2, 5));
    CHECK(mod->act_vir(VirElt::basis(3), mod->generator()) ==
          ModVec::basis({0, 0, 0}, 80) + ModVec::basis({1, 0, 0}, -16));
  }

  TEST_CASE("VirPoly degree one against the word oracle") {
    oracle::Sampler s(41);
    for (int trial = 0; trial < 4; ++trial) {
      Scalar lambda = s.nonzero(), m = s.gaussian();
      auto mod = make_virpoly(deg_one(lambda, m), 7);
      oracle::VirDegOne ref(lambda, m);
      for (long n = -4; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a) {
          ModVec want;
          for (const auto& [b, c] : ref.apply(n, a))
            want.add_term({b, 0, 0}, b % 2 ? -c : c);
          // basis vector e_{-1}^a v = (-1)^a f^a v
          ModVec src = ModVec::basis({a, 0, 0}, a % 2 ? Scalar(-1) : Scalar(1));
          CHECK_MESSAGE(mod->act_vir(VirElt::basis(n), src) == want, "n=" << n << " a=" << a);
        }
    }
  }

  TEST_CASE("mu_eval examples") {
    MuData sq{{{1, 2}}, {{0, 1}}};  // p(j) = j
    LaurentPoly f = sq.f();
    CHECK(mu_eval(sq, VirElt::from_laurent(f)) == Scalar(0));
    CHECK(mu_eval(sq, VirElt::from_laurent(f.shifted(-1))) == Scalar(-1));
    MuData lin = deg_one(2, 7);
    CHECK(mu_eval(lin, VirElt::from_laurent(lin.f().shifted(2))) == Scalar(28));
    CHECK(mu_eval(lin, VirElt::from_laurent(lin.f()) + VirElt::central(5)) == Scalar(7));
    CHECK(kind_of([&] { mu_eval(lin, VirElt::basis(0)); }) == ErrorKind::NotInSubalgebra);
  }

  TEST_CASE("mu_eval is a character on Vir^f") {
    // mu([a, b]) = 0 for a, b in Vir^f
    oracle::Sampler s(42);
    std::vector<MuData> mus = {MuData{{{2, 1}}, {{3}}}, MuData{{{1, 2}}, {{1, 2}}},
                               MuData{{{1, 1}, {-2, 1}}, {{1}, {Scalar::frac(1, 2)}}},
                               MuData{{{1, 1}, {2, 2}}, {{1}, {1, -1}}}};
    for (const auto& mu : mus)
      for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j) {
          VirElt a = VirElt::from_laurent(mu.f().shifted(i)), b = VirElt::from_laurent(mu.f().shifted(j));
          CHECK(mu_eval(mu, bracket_vir(a, b)).is_zero());
        }
  }

  TEST_CASE("casimir examples") {
    for (Scalar d : {Scalar(2), Scalar::frac(1, 2), Scalar::i()}) {
      auto verma = make_verma(d);
      CHECK(casimir_action(*verma, verma->generator()) == verma->generator() * ((d + 1) * (d + 1)));
    }
    auto vp = make_virpoly(deg_one(1, 1));
    CHECK(casimir_action(*vp, vp->generator()) == vp->generator() * Scalar(9));
    auto x = make_x(3);
    CHECK(casimir_action(*x, x->generator()) == ModVec::basis({1, 1}, 4) + ModVec::basis({0, 0}, 16));
  }

  TEST_CASE("casimir is central") {
    for (const auto& m : sl2_zoo())
      for (const auto& k : m->window(3))
        for (int g = 0; g < 3; ++g) {
          ModVec v = ModVec::basis(k);
          SL2Elt x = SL2Elt::basis(g);
          CHECK(casimir_action(*m, m->act(x, v)) == m->act(x, casimir_action(*m, v)));
        }
  }

  TEST_CASE("weight decomposition") {
    auto xb = make_xbar(0, 9);
    auto w = weight_decompose(*xb, ModVec::basis({2}) + ModVec::basis({-1}, 3));
    REQUIRE(w.size() == 2);
    CHECK(w[0].first == Scalar(-2));
    CHECK(w[0].second == ModVec::basis({-1}, 3));
    CHECK(w[1].first == Scalar(4));
    CHECK(kind_of([] {
            auto wm = make_whittaker(1);
            weight_decompose(*wm, wm->generator());
          }) == ErrorKind::NotWeightModule);
    auto tw = make_twist(make_verma(3), Automorphism::gamma(1).inverse());
    auto tw_w = weight_decompose(*tw, ModVec::basis({1}));
    REQUIRE(tw_w.size() == 1);
    CHECK(tw_w[0].first == Scalar(1));
    // the twisted Cartan acts diagonally with the reported weight
    SL2Elt cart = *tw->cartan();
    CHECK(tw->act(cart, ModVec::basis({1})) == ModVec::basis({1}, 1));
  }

  TEST_CASE("module axiom for sl2 families") {
    for (const auto& m : sl2_zoo()) check_sl2_axiom(*m, 4);
  }

  TEST_CASE("module axiom for induced and VirPoly restrictions") {
    check_sl2_axiom(*make_virpoly(deg_one(3, 2)), 4);
    check_sl2_axiom(*make_virpoly(MuData{{{1, 2}}, {{0, 1}}}), 4);
    check_sl2_axiom(*make_virpoly(MuData{{{1, 1}, {2, 1}, {-1, 1}}, {{1}, {2}, {3}}}), 3);
    check_sl2_axiom(*make_induced(Character{{kE - kF}, {Scalar(2)}}), 4);
    check_sl2_axiom(*make_induced(Character{{kH + kF * Scalar(2), kE + kF}, {Scalar(3), Scalar(3)}}), 4);
  }

  TEST_CASE("Vir module axiom on VirPoly") {
    check_vir_axiom(*make_virpoly(deg_one(2, 5), 6), 2, 3);
    check_vir_axiom(*make_virpoly(MuData{{{1, 1}, {-1, 1}}, {{1}, {2}}}, 6), 2, 3);
    check_vir_axiom(*make_virpoly(MuData{{{1, 1}, {2, 2}}, {{1}, {1, -1}}}, 6), 1, 3);
  }

  TEST_CASE("z acts as zero on VirPoly") {
    auto vp = make_virpoly(MuData{{{1, 2}}, {{0, 1}}});
    for (const auto& k : vp->window(3)) CHECK(vp->act_vir(VirElt::central(), ModVec::basis(k)).is_zero());
  }

  TEST_CASE("closed forms agree with the generic rewriting route") {
    std::vector<ModuleHandle> ms = {make_verma(Scalar::frac(3, 2)), make_low_verma(2), make_xbar(1, 4),
                                    make_xbar(Scalar::i(), Scalar::frac(1, 3)), make_vdense(0, 9),
                                    make_vdense(Scalar::frac(1, 2), 2),
                                    make_twist(make_xbar(0, 9), Automorphism::gamma(2))};
    for (const auto& m : ms)
      for (const auto& k : m->window(4))
        for (int g = 0; g < 3; ++g) {
          SL2Elt x = SL2Elt::basis(g) + kH * Scalar(g);
          CHECK_MESSAGE(m->act(x, ModVec::basis(k)) == act_generic(*m, x, ModVec::basis(k)),
                        m->name() << " key " << key_to_string(k));
        }
    CHECK(kind_of([] { act_generic(*make_whittaker(1), SL2Elt::e(), ModVec::basis({0, 0})); }) ==
          ErrorKind::InvalidParameter);
  }

  TEST_CASE("twist acts through the automorphism") {
    oracle::Sampler s(43);
    auto inner = make_x(Scalar::frac(2, 3));
    for (int n = 0; n < 6; ++n) {
      Scalar l1 = s.gaussian(), l2 = l1 + s.nonzero();
      Automorphism a = n % 2 ? Automorphism::gamma(l1) : Automorphism::gamma2(l1, l2);
      auto tw = make_twist(inner, a);
      for (const auto& k : inner->window(2))
        for (int g = 0; g < 3; ++g) {
          SL2Elt x = SL2Elt::basis(g);
          SL2Elt ax = a.matrix()[0][g] * kE + a.matrix()[1][g] * kH + a.matrix()[2][g] * kF;
          CHECK(tw->act(x, ModVec::basis(k)) == inner->act(ax, ModVec::basis(k)));
        }
    }
  }

  TEST_CASE("tensor uses the Leibniz rule") {
    auto l = make_verma(1), r = make_low_verma(2);
    auto t = make_tensor(l, r);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int g = 0; g < 3; ++g) {
          SL2Elt x = SL2Elt::basis(g);
          ModVec want;
          ModVec xl = l->act(x, ModVec::basis({a})), xr = r->act(x, ModVec::basis({b}));
          for (const auto& [k, c] : xl.terms()) want.add_term({k[0], b}, c);
          for (const auto& [k, c] : xr.terms()) want.add_term({a, k[0]}, c);
          CHECK(t->act(x, ModVec::basis({a, b})) == want);
        }
  }

  TEST_CASE("non-Vir families reject Vir elements outside sl2") {
    auto v = make_verma(1);
    CHECK(v->act_vir(VirElt::basis(0, 2), v->generator()) == v->act(kH, v->generator()));
    CHECK(kind_of([&] { v->act_vir(VirElt::basis(2), v->generator()); }) == ErrorKind::WrongAlgebra);
  }

  TEST_CASE("depth window is enforced") {
    auto vp = make_virpoly(deg_one(1, 1), 3);
    ModVec top = ModVec::basis({3, 0, 0});
    CHECK(kind_of([&] { vp->act(kF, top); }) == ErrorKind::DepthExceeded);
    auto ind = make_induced(Character{{kE}, {Scalar(1)}}, 2);
    CHECK(kind_of([&] { ind->act(kF, ModVec::basis({2, 0, 0})); }) == ErrorKind::DepthExceeded);
  }

  TEST_CASE("parsing module descriptions") {
    CHECK(parse_module("Verma(2)")->name() == make_verma(2)->name());
    CHECK(parse_module("Xbar(0,9)")->name() == "Xbar(0,9)");
    CHECK(parse_module("Twist(Verma(3),gamma(1)^-1)")->name() == "Twist(Verma(3),gamma(-1))");
    CHECK(parse_module("Tensor(Verma(1),LowVerma(2))")->family() == Family::Tensor);
    CHECK(parse_module("VirPoly((t-1)^2;0,1)")->name() == "VirPoly((t-1)^2;0,1)");
    CHECK(parse_module("W(1/2+i)")->family() == Family::Whittaker);
    CHECK(parse_automorphism("gamma2(1,2)^-1") == Automorphism::gamma2(1, 2).inverse());
    CHECK(parse_factored("(t-1)^2(t+3)") == std::vector<std::pair<Scalar, int>>{{1, 2}, {-3, 1}});
    CHECK(kind_of([] { parse_module("Nope(1)"); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { parse_module("Verma(1"); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { parse_module("VirPoly(t;1)"); }) == ErrorKind::BadPolynomial);
  }

  TEST_CASE("modvec json shape") {
    auto m = make_xbar(0, 9);
    json j = modvec_to_json(*m, ModVec::basis({2}, Scalar::frac(1, 2)));
    CHECK(j["schema"] == "modvec/1");
    CHECK(j["family"] == "Xbar");
    CHECK(j["module"] == "Xbar(0,9)");
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0][0] == json::array({2}));
    CHECK(j["terms"][0][1] == json::array({"1", "2", "0", "1"}));
  }
}
