#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "braidzeta/io.hpp"
#include "braidzeta/zeta.hpp"

using namespace braidzeta;

namespace {

const LaurentPoly q = LaurentPoly::q();

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<std::int64_t> exp(-6, 6);
  std::uniform_int_distribution<long> coef(-99, 99);
  LaurentPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exp(rng), Int(coef(rng)));
  return p;
}

} // namespace

TEST_CASE("Laurent rendering") {
  CHECK(to_string(LaurentPoly(0)) == "0");
  CHECK(to_string(LaurentPoly(1)) == "1");
  CHECK(to_string(LaurentPoly(-3)) == "-3");
  CHECK(to_string(q) == "q");
  CHECK(to_string(LaurentPoly::q(-1)) == "q^-1");
  CHECK(to_string(LaurentPoly(1) - q + LaurentPoly::q(2)) == "1-q+q^2");
  CHECK(to_string(LaurentPoly(-1) + LaurentPoly(3) * q - LaurentPoly::q(2)) ==
        "-1+3*q-q^2");
  CHECK(to_string(LaurentPoly(2) * LaurentPoly::q(-2)) == "2*q^-2");
}

TEST_CASE("PolyS rendering") {
  CHECK(to_string(PolyS()) == "0");
  CHECK(to_string(PolyS(1) + PolyS::s()) == "1+s");
  CHECK(to_string(PolyS(1) - PolyS(LaurentPoly::q(3)).times_s_power(1)) ==
        "1-q^3*s");
  CHECK(to_string(PolyS(1) + PolyS(q + LaurentPoly(1)).times_s_power(2)) ==
        "1+(1+q)*s^2");
  CHECK(to_string(PolyS::s(3)) == "s^3");
}

TEST_CASE("rational rendering factors (1-s)") {
  CHECK(to_string(zeta_braid(BraidWord(2, {1, 1, 1})).value) ==
        "1 / ((1-s)*(1+q^3*s))");
  CHECK(to_string(zeta_braid(BraidWord(3, {})).value) == "1 / (1-s)^3");
  CHECK(to_string(RationalFn(PolyS(1), PolyS(1) + PolyS::s())) == "1 / (1+s)");
  CHECK(to_string(residue_at_one(zeta_braid(BraidWord(2, {1, 1, 1})))) ==
        "-1 / (1+q^3)");
}

TEST_CASE("latex rendering") {
  CHECK(to_string(zeta_braid(BraidWord(2, {1, 1, 1})).value, true) ==
        "\\frac{1}{(1-s) (1+q^{3} s)}");
  CHECK(to_string(LaurentPoly::q(-2), true) == "q^{-2}");
  CHECK(to_string(RationalQ(LaurentPoly(-1), LaurentPoly(2)), true) ==
        "\\frac{-1}{2}");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(401);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly p = random_laurent(rng);
    CHECK(laurent_from_json(to_json(p)) == p);
  }
  PolyS den = zeta_braid(BraidWord(3, {1, -2, 1, -2})).value.den;
  CHECK(polys_from_json(to_json(den)) == den);
  CHECK(polys_from_json(to_json(PolyS())) == PolyS());

  nlohmann::json j = to_json(zeta_braid(BraidWord(2, {1, 1, 1})).value);
  CHECK(polys_from_json(j.at("num")) == PolyS(1));
  CHECK(polys_from_json(j.at("den")) ==
        PolyS::one_minus(LaurentPoly(1)) *
            (PolyS(1) + PolyS(LaurentPoly::q(3)).times_s_power(1)));
}

TEST_CASE("json uses decimal strings for coefficients") {
  LaurentPoly big = LaurentPoly(Int("123456789012345678901234567890"));
  nlohmann::json j = to_json(big);
  CHECK(j[0][1] == "123456789012345678901234567890");
  CHECK(laurent_from_json(j) == big);
}
