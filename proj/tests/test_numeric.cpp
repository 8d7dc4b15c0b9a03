#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "braidzeta/numeric.hpp"

using namespace braidzeta;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return {n, std::move(letters)};
}

} // namespace

TEST_CASE("unit circle points") {
  UnitCirclePoint p{1.3};
  CHECK(std::abs(std::abs(p.q()) - 1.0) < 1e-12);
  CHECK(std::abs(p.t() * p.t() - p.q()) < 1e-12);
  CHECK(std::abs(UnitCirclePoint{0.0}.q() - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("matrix evaluation") {
  // beta_{2,q}(sigma_1) at theta = 0 is the permutation matrix
  ComplexMatrix m =
      eval_matrix(burau_matrix(BraidWord(2, {1})).matrix, UnitCirclePoint{0.0});
  CHECK(std::abs(m(0, 0)) < 1e-12);
  CHECK(std::abs(m(0, 1) - 1.0) < 1e-12);
  CHECK(std::abs(m(1, 0) - 1.0) < 1e-12);
  CHECK(std::abs(m(1, 1)) < 1e-12);

  // [-q] at theta = pi/3
  ComplexMatrix r = eval_matrix(reduced_burau_matrix(BraidWord(2, {1})).matrix,
                                UnitCirclePoint{M_PI / 3});
  CHECK(std::abs(r(0, 0) + std::polar(1.0, M_PI / 3)) < 1e-12);
  CHECK(std::abs(std::abs(r(0, 0)) - 1.0) < 1e-12);

  // Omega_2^r at theta = 0: single entry t + t^{-1} = 2
  ComplexMatrix omega = eval_matrix(squier_omega(2), UnitCirclePoint{0.0}.t());
  CHECK(std::abs(omega(0, 0) - 2.0) < 1e-12);

  // evaluation commutes with the matrix product
  std::mt19937 rng(307);
  for (int t = 0; t < 30; ++t) {
    BraidWord u = random_word(rng, 4, 6), v = random_word(rng, 4, 6);
    const UnitCirclePoint p{0.7 + 0.01 * t};
    ComplexMatrix lhs = eval_matrix(burau_matrix(u * v).matrix, p);
    ComplexMatrix rhs =
        eval_matrix(burau_matrix(u).matrix, p) * eval_matrix(burau_matrix(v).matrix, p);
    CHECK((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
  }
}

TEST_CASE("rh_check examples") {
  SpectrumReport r1 = rh_check(BraidWord(2, {1, 1, 1}), UnitCirclePoint{M_PI / 3});
  REQUIRE(r1.eigenvalues.size() == 1);
  CHECK(std::abs(r1.eigenvalues[0] + std::polar(1.0, M_PI)) < 1e-9);
  CHECK(r1.rh_satisfied);
  CHECK(r1.in_window);

  SpectrumReport r0 = rh_check(BraidWord(2, {1, 1, 1}), UnitCirclePoint{0.0});
  CHECK(std::abs(r0.eigenvalues[0] + 1.0) < 1e-12);
  CHECK(r0.near_root_of_unity);

  SpectrumReport r2 = rh_check(BraidWord(3, {1, -2, 1, 1}), UnitCirclePoint{M_PI / 2});
  CHECK(r2.in_window);
  CHECK(r2.rh_satisfied);
  CHECK(r2.max_modulus_deviation < 1e-9);
  CHECK(r2.eigenvalues.size() == 2);
}

TEST_CASE("rh property inside the window") {
  std::mt19937 rng(311);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 4;
    BraidWord w = random_word(rng, n, 3 + t % 13);
    const double theta = unit(rng) * (2.0 * M_PI / n) * 0.999;
    SpectrumReport rep = rh_check(w, UnitCirclePoint{theta});
    CHECK(rep.in_window);
    CHECK(rep.max_modulus_deviation <= 1e-8);
    CHECK(rep.eigenvalues.size() == static_cast<size_t>(n - 1));
  }
}

TEST_CASE("omega spectrum") {
  auto s2 = omega_spectrum(2, 0.0);
  REQUIRE(s2.size() == 1);
  CHECK(std::abs(s2[0] - 2.0) < 1e-12);

  auto s3 = omega_spectrum(3, 0.0);
  REQUIRE(s3.size() == 2);
  CHECK(std::abs(s3[0] - 1.0) < 1e-12);
  CHECK(std::abs(s3[1] - 3.0) < 1e-12);

  auto boundary = omega_spectrum(3, 2.0 * M_PI / 3);
  CHECK(std::abs(boundary[0]) < 1e-12);

  // the closed formula is cross-checked against the diagonalized form inside
  for (int n = 2; n <= 6; ++n)
    for (double theta : {0.1, 0.9, 2.1, -1.3}) CHECK_NOTHROW(omega_spectrum(n, theta));
}

TEST_CASE("definiteness window") {
  CHECK(definiteness_window(4, 0.1));
  CHECK_FALSE(definiteness_window(4, 2.0));
  CHECK(definiteness_window(2, M_PI - 1e-3));
  for (int n = 2; n <= 6; ++n)
    for (int k = -20; k <= 20; ++k) {
      const double theta = k * 0.157;
      if (std::abs(std::abs(theta) - 2.0 * M_PI / n) < 1e-6) continue;
      CHECK(definiteness_window(n, theta) == (std::abs(theta) < 2.0 * M_PI / n));
    }
}

TEST_CASE("numeric Squier identity") {
  std::mt19937 rng(313);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    BraidWord w = random_word(rng, 2 + t % 4, 8);
    CHECK(squier_numeric_deviation(w, UnitCirclePoint{angle(rng)}) < 1e-9);
  }
}
