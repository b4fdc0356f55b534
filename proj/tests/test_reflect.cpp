#include "oracles.hpp"

#include "rigidroots/reflect.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace rigid;

namespace {

IntPolynomial poly(std::vector<long long> c) {
  std::vector<Integer> out(c.begin(), c.end());
  return IntPolynomial(out);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial x = IntPolynomial::x();
  CHECK((x * x - 1) == poly({-1, 0, 1}));
  CHECK((x - x).is_zero());
  CHECK((x - x).degree() == -1);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK((x + 1) * (x - 1) == x * x - 1);
  CHECK((-(x + 2)).coeff(0) == -2);
  CHECK(poly({-1, 0, 1}).eval(3.0) == doctest::Approx(8.0));
  CHECK((x * x * x - 3 * x).str() == "x^3 - 3x");
}

TEST_CASE("Chebyshev-type polynomials") {
  const IntPolynomial x = IntPolynomial::x();
  CHECK(cheb_f(0) == IntPolynomial(1));
  CHECK(cheb_g(0).is_zero());
  CHECK(cheb_g(1) == x);
  CHECK(cheb_f(1) == x * x - 1);
  CHECK(cheb_f(2) == poly({1, 0, -3, 0, 1}));
  for (int n = 0; n <= 20; ++n) {
    CHECK(cheb_f_recurrence(n) == cheb_f_closed(n));
    CHECK(cheb_g_recurrence(n) == cheb_g_closed(n));
  }
  for (int n = 1; n <= 20; ++n)
    for (const auto& id : chebyshev_identities(n)) {
      INFO(id.name << " n=" << n);
      CHECK(id.holds());
    }
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k < 8; ++k) {
      const double t = k * 0.37;
      const double x0 = 2 * std::cos(t);
      CHECK(cheb_f(n).eval(Real(x0)).convert_to<double>() == doctest::Approx(oracle::f_at(n, t)).epsilon(1e-9));
      CHECK(cheb_g(n).eval(Real(x0)).convert_to<double>() == doctest::Approx(oracle::g_at(n, t)).epsilon(1e-9));
    }
}

TEST_CASE("zeros and positivity") {
  for (int n = 1; n <= 20; ++n) {
    const ZeroResiduals z = zero_residuals(n);
    CHECK(z.f < 1e-9);
    CHECK(z.g < 1e-9);
    // Largest zeros, double precision input.
    CHECK(abs(cheb_g(n).eval(Real(2 * std::cos(std::numbers::pi / (2 * n))))) < 1e-9);
    CHECK(abs(cheb_f(n).eval(Real(2 * std::cos(std::numbers::pi / (2 * n + 1))))) < 1e-9);
  }
  for (long long m = 3; m <= 40; ++m) CHECK(min_f_below_half(m) >= -1e-9);
  CHECK(std::abs(min_f_below_half(5)) < 1e-12);
  CHECK(min_f_below_half(6) > 0.5);
}

TEST_CASE("reflection matrices") {
  for (int i = 1; i <= 3; ++i) CHECK(reflection_matrix(i) * reflection_matrix(i) == poly_identity());
  CHECK(word_matrix("") == poly_identity());
  CHECK(word_matrix("12") == reflection_matrix(1) * reflection_matrix(2));
  CHECK_THROWS(reflection_matrix(4));
  for (long long m = 3; m <= 12; ++m) CHECK(braid_residual(m) < 1e-9);
  const double x = 2 * std::cos(std::numbers::pi / 5);
  const PolyMatrix w = word_matrix("2321");
  const oracle::Mat o = oracle::matrix(5, "2321");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(w[i][j].eval(x) == doctest::Approx(o[i][j]));
}

TEST_CASE("tau entries") {
  const IntPolynomial x = IntPolynomial::x();
  for (int n = 0; n <= 12; ++n) {
    CHECK(tau_matrix(n) == word_matrix(power("23", n) + "21"));
    for (const auto& id : tau_identities(n)) {
      INFO(id.name << " n=" << n);
      CHECK(id.holds());
    }
  }
  CHECK(a_power(0)[0][0] == IntPolynomial(1));
  CHECK(a_power(1)[0][0] == x * x - 1);
  CHECK(a_power(1)[0][1] == -x);
}

TEST_CASE("root vectors") {
  const RootVector s2 = root_vector(3, "2");
  CHECK(s2.p == 0);
  CHECK(s2.q == 1);
  CHECK(s2.r == 0);
  const RootVector s11 = root_vector(4, s_of_root({1, 1}));
  CHECK(s11.q == 1);
  for (long long m = 3; m <= 6; ++m) {
    const RootVector v = root_vector(m, "121");
    const double x = 2 * std::cos(std::numbers::pi / static_cast<double>(m));
    CHECK(v.p.convert_to<double>() == doctest::Approx(x));
    CHECK(v.q.convert_to<double>() == doctest::Approx(1.0));
    CHECK(v.r == 0);
  }
  const RootVector v53 = root_vector(3, s_of_root({5, 3}));
  CHECK(v53.p >= 0);
  CHECK(v53.p < v53.r);
  const RootVector v35 = root_vector(3, s_of_root({3, 5}));
  CHECK(v35.p > v35.r);
  CHECK_THROWS_AS(root_vector(3, "12"), std::domain_error);
  CHECK_THROWS_AS(root_vector(3, "1213"), std::domain_error);
}

TEST_CASE("dichotomy") {
  const DichotomyReport r3 = check_dichotomy(3, 50);
  CHECK(r3.violations.empty());
  CHECK(r3.checked > 0);
  CHECK(r3.min_relative_gap > 0);
  CHECK(check_dichotomy(7, 30).violations.empty());
  for (long long m = 3; m <= 8; ++m) CHECK(check_dichotomy(m, 100).violations.empty());
}
