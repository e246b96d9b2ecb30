#include "doctest.h"
#include "oracles.hpp"
#include "sl2vir/automorphism.hpp"
#include "sl2vir/json_io.hpp"
#include "sl2vir/pbw.hpp"

using namespace sl2vir;

namespace {

UEnvElt mono(int a, int b, int c, Scalar s = Scalar(1)) { return UEnvElt::monomial({a, b, c}, std::move(s)); }

std::vector<SL2Monomial> all_monomials(int d) {
  std::vector<SL2Monomial> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) out.push_back({a, b, c});
  return out;
}

oracle::Words word(const SL2Monomial& m) {
  return {{std::string(m.a, 'f') + std::string(m.b, 'h') + std::string(m.c, 'e'), Scalar(1)}};
}

}  // namespace

TEST_SUITE("pbw") {
  TEST_CASE("multiplication examples") {
    CHECK(nf_multiply(UEnvElt::e(), UEnvElt::f()) == mono(1, 0, 1) + mono(0, 1, 0));
    CHECK(nf_multiply(UEnvElt::h(), UEnvElt::f()) == mono(1, 1, 0) - mono(1, 0, 0, 2));
    UEnvElt one = UEnvElt::one();
    UEnvElt hm1 = UEnvElt::h() - one, hp1 = UEnvElt::h() + one;
    UEnvElt lhs = nf_multiply(UEnvElt::e(), UEnvElt::f()) * Scalar(4) + nf_multiply(hm1, hm1);
    UEnvElt rhs = nf_multiply(UEnvElt::f(), UEnvElt::e()) * Scalar(4) + nf_multiply(hp1, hp1);
    CHECK(lhs == rhs);
    CHECK(casimir_elt() == rhs);
  }

  TEST_CASE("casimir normal form") {
    UEnvElt c = casimir_elt();
    CHECK(c.terms().size() == 4);
    CHECK(c.coeff({1, 0, 1}) == Scalar(4));
    CHECK(c.coeff({0, 2, 0}) == Scalar(1));
    CHECK(c.coeff({0, 1, 0}) == Scalar(2));
    CHECK(c.coeff({0, 0, 0}) == Scalar(1));
    for (int g = 0; g < 3; ++g) {
      UEnvElt x = UEnvElt::from_sl2(SL2Elt::basis(g));
      CHECK(nf_multiply(c, x) == nf_multiply(x, c));
    }
  }

  TEST_CASE("agrees with the word-rewriting oracle up to degree 4") {
    auto ms = all_monomials(4);
    for (const auto& x : ms)
      for (const auto& y : ms) {
        if (x.degree() + y.degree() > 4) continue;
        UEnvElt got = nf_multiply(UEnvElt::monomial(x), UEnvElt::monomial(y));
        UEnvElt want = oracle::to_uenv(oracle::normal_form(oracle::concat(word(x), word(y))));
        CHECK_MESSAGE(got == want, x.to_string() << " * " << y.to_string());
      }
  }

  TEST_CASE("associativity on degree <= 3 triples") {
    auto ms = all_monomials(3);
    for (const auto& x : ms)
      for (const auto& y : ms)
        for (const auto& z : ms) {
          if (x.degree() + y.degree() + z.degree() > 3) continue;
          UEnvElt X = UEnvElt::monomial(x), Y = UEnvElt::monomial(y), Z = UEnvElt::monomial(z);
          CHECK(nf_multiply(nf_multiply(X, Y), Z) == nf_multiply(X, nf_multiply(Y, Z)));
        }
  }

  TEST_CASE("commutators match brackets") {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        UEnvElt x = UEnvElt::from_sl2(SL2Elt::basis(i)), y = UEnvElt::from_sl2(SL2Elt::basis(j));
        CHECK(nf_multiply(x, y) - nf_multiply(y, x) ==
              UEnvElt::from_sl2(bracket_sl2(SL2Elt::basis(i), SL2Elt::basis(j))));
      }
  }

  TEST_CASE("left_mul_generator and powers") {
    for (const auto& m : all_monomials(3))
      for (int g = 0; g < 3; ++g)
        CHECK(left_mul_generator(g, UEnvElt::monomial(m)) ==
              nf_multiply(UEnvElt::from_sl2(SL2Elt::basis(g)), UEnvElt::monomial(m)));
    UEnvElt ef = UEnvElt::e() + UEnvElt::f();
    CHECK(nf_power(ef, 3) == nf_multiply(ef, nf_multiply(ef, ef)));
    CHECK(nf_power(ef, 0) == UEnvElt::one());
  }

  TEST_CASE("automorphisms fix the casimir") {
    oracle::Sampler s(31);
    CHECK(aut_extend(Automorphism::sigma(), casimir_elt()) == casimir_elt());
    CHECK(aut_extend(Automorphism::identity(), mono(2, 1, 3, 7)) == mono(2, 1, 3, 7));
    for (int n = 0; n < 12; ++n) {
      Scalar l = s.gaussian();
      CHECK(aut_extend(Automorphism::gamma(l), casimir_elt()) == casimir_elt());
    }
  }

  TEST_CASE("aut_extend is multiplicative") {
    oracle::Sampler s(32);
    auto ms = all_monomials(3);
    for (int n = 0; n < 40; ++n) {
      Scalar l1 = s.gaussian(), l2 = s.gaussian();
      if (l1 == l2) l2 += 1;
      Automorphism a = n % 2 ? Automorphism::gamma(l1) : Automorphism::gamma2(l1, l2);
      UEnvElt u = UEnvElt::monomial(ms[s.integer(0, ms.size() - 1)], s.nonzero());
      UEnvElt v = UEnvElt::monomial(ms[s.integer(0, ms.size() - 1)], s.nonzero()) + UEnvElt::h();
      CHECK(aut_extend(a, nf_multiply(u, v)) == nf_multiply(aut_extend(a, u), aut_extend(a, v)));
    }
  }

  TEST_CASE("serialization") {
    json j = casimir_elt();
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);
    CHECK(j[0][0] == json::array({0, 0, 0}));
  }
}
