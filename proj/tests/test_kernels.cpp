#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "meanbounds/bounds.hpp"
#include "meanbounds/hyperbolic.hpp"
#include "meanbounds/kernels.hpp"
#include "oracle.hpp"

using namespace meanbounds;
using oracle::Real;

namespace {

const std::vector<double> kParams = {-2.0, -0.5, 0.5, 1.0, 1.1, 1.2, 1.2351702290504,
                                     1.3, 4.0 / 3.0, 1.5, 2.0, 3.0};

std::vector<double> t_values(double lo, double hi, int n) {
  return log_grid(lo, hi, static_cast<std::size_t>(n));
}

// Sum of the absolute values of the terms of f1, the scale against which
// its rounding error is judged near a root.
double f1_scale(double t, double p) {
  const double x = std::tanh(t);
  return std::fabs(x - std::atan(x)) +
         std::fabs(x * std::sinh(t) * std::sinh((p - 1.0) * t) / std::cosh(p * t));
}

double f2_scale(double t, double p) {
  return hyp::cosh_m1((p - 2.0) * t) + hyp::cosh_m1(p * t) +
         std::fabs(1.0 - p) * hyp::cosh_m1(2.0 * t) + std::fabs(2.0 * p) * hyp::cosh_m1(t);
}

// Size of the three terms of the product form, which cancel for large t.
double f2_product_scale(double t, double p) {
  const double sh = std::sinh(t);
  const double ch = std::cosh(0.5 * p * t);
  const double sh_half = std::sinh(0.5 * t);
  return 4.0 * sh * sh * ch * ch + std::fabs(4.0 * p * std::cosh(t)) * sh_half * sh_half +
         std::fabs(std::sinh(2.0 * t) * std::sinh(p * t));
}

}  // namespace

TEST_CASE("f1 against the oracle") {
  for (double p : kParams) {
    for (double t : t_values(1e-6, 30.0, 60)) {
      CAPTURE(p);
      CAPTURE(t);
      const double reference = static_cast<double>(oracle::f1(Real(t), Real(p)));
      const double scale = std::max(std::fabs(reference), f1_scale(t, p));
      CHECK(std::fabs(f1({t, p}) - reference) <= 1e-13 * scale);
    }
  }
  CHECK(f1({0.0, 1.5}) == 0.0);
  CHECK_THROWS_AS(f1({-1.0, 1.5}), std::invalid_argument);
  CHECK(std::isfinite(f1({400.0, 3.0})));
}

TEST_CASE("f2 closed form, product form and oracle agree") {
  for (double p : kParams) {
    for (double t : t_values(1e-6, 8.0, 60)) {
      CAPTURE(p);
      CAPTURE(t);
      const double reference = static_cast<double>(oracle::f2(Real(t), Real(p)));
      const double scale = std::max(std::fabs(reference), f2_scale(t, p));
      CHECK(std::fabs(f2({t, p}) - reference) <= 1e-14 * scale);
      if (t > 1e-2)
        CHECK(std::fabs(f2_product({t, p}) - reference) <=
              1e-14 * std::max(scale, f2_product_scale(t, p)));
    }
  }
}

TEST_CASE("f2 power series matches the closed form up to t = 5") {
  for (double p : kParams) {
    for (double t : t_values(1e-4, 5.0, 80)) {
      CAPTURE(p);
      CAPTURE(t);
      const double closed = f2({t, p});
      const double scale = std::max(std::fabs(closed), f2_scale(t, p));
      CHECK(std::fabs(f2_series(t, p) - closed) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("f2 series coefficients and tail bound") {
  const auto coeffs = f2_series_coefficients(1.2, 10);
  REQUIRE(coeffs.size() == 11);
  CHECK(coeffs[0] == 0.0);
  CHECK(coeffs[1] == doctest::Approx((8.0 - 6.0 * 1.2) / 2.0));
  // the bound dominates the actual remainder
  for (double t : {0.1, 1.0, 3.0}) {
    const double s = t * t;
    double partial = 0.0;
    for (std::size_t n = 1; n < coeffs.size(); ++n) partial += coeffs[n] * std::pow(s, n);
    const double remainder = std::fabs(f2({t, 1.2}) - partial);
    CHECK(remainder <= f2_series_tail_bound(1.2, s, 10) * (1.0 + 1e-6) + 1e-15);
  }
}

TEST_CASE("u_n in exact rational arithmetic") {
  using oracle::Rational;
  const Rational four_thirds(4, 3);
  CHECK(u_n(1, four_thirds) == 0);
  CHECK(u_n(2, four_thirds) < 0);
  // u_1(p) = 8 - 6p
  CHECK(u_n(1, Rational(1, 2)) == Rational(5));
  for (int n = 1; n <= 30; ++n) CHECK(u_n(n, Rational(6, 5)) > u_n(n + 1, Rational(6, 5)));
}

TEST_CASE("F against the oracle and its limits") {
  for (double p : kParams) {
    for (double t : t_values(1e-6, 30.0, 60)) {
      CAPTURE(p);
      CAPTURE(t);
      const Real reference = oracle::F(Real(t), Real(p));
      const double err = static_cast<double>(abs(Real(F({t, p})) - reference));
      CHECK(err <= 1e-12 * std::max(static_cast<double>(abs(reference)), 1e-300) + 1e-15 * t * t);
    }
  }
  CHECK_THROWS_AS(F({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(F({-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(F_limit_infinity(-1.0), std::invalid_argument);
  for (double p : {0.5, 1.0, 1.2351702290504, 4.0 / 3.0, 2.0, 3.0})
    CHECK(F({40.0, p}) == doctest::Approx(F_limit_infinity(p)).epsilon(1e-12));
  for (double p : {0.5, 1.0, 1.3, 2.0})
    CHECK(F({1e-5, p}) / 1e-10 == doctest::Approx(F_quadratic_coefficient(p)).epsilon(1e-6));
  // exactly zero t^2 term at the rounded 4/3: the t^4 term decides the sign
  CHECK(F({1e-9, 4.0 / 3.0}) < 0.0);
}

TEST_CASE("dF/dt is f1 / sinh^2 t") {
  for (double p : kParams) {
    for (double t : t_values(1e-3, 5.0, 40)) {
      CAPTURE(p);
      CAPTURE(t);
      const double h = 1e-4 * t;
      const double fd = (F({t + h, p}) - F({t - h, p})) / (2.0 * h);
      const double s = std::sinh(t);
      const double scale = std::max(std::fabs(dF_dt({t, p})), f1_scale(t, p) / (s * s));
      CHECK(std::fabs(fd - dF_dt({t, p})) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("identity log B - log M_p = F on sampled pairs") {
  for (double p : {-2.0, 0.5, 1.2351702290504, 4.0 / 3.0, 3.0})
    for (double b : {1.0 + 1e-9, 1.5, 10.0, 1e6, 1e12}) CHECK(log_identity_check(PositivePair(1.0, b), p) <= 1e-11);
  CHECK_THROWS_AS(log_identity_check(PositivePair(2.0, 2.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(log_identity_check(PositivePair(1.0, 2.0), 0.0), std::invalid_argument);
}

TEST_CASE("sign of f1: positive for p <= 1, negative for p >= 4/3") {
  const auto grid = t_values(1e-6, 50.0, 2000);
  int wrong = 0;
  for (double p : {-1.0, 0.0, 0.5, 1.0})
    for (double t : grid) wrong += f1({t, p}) <= 0.0;
  for (double p : {4.0 / 3.0, 1.5, 2.0, 5.0})
    for (double t : grid) wrong += f1({t, p}) >= 0.0;
  CHECK(wrong == 0);
}

TEST_CASE("f1 in Lehmer form: same value, sign of T - L_{p-1}") {
  for (double p : {0.5, 1.0, 1.2, 4.0 / 3.0, 2.0})
    for (double t : {0.1, 0.7, 2.0, 6.0}) {
      CAPTURE(p);
      CAPTURE(t);
      CHECK(f1_lehmer_form({t, p}) == doctest::Approx(f1({t, p})).epsilon(1e-9));
      const double gap = log_normalized_mean(MeanKind::of(MeanTag::SecondSeiffert), t) -
                         log_normalized_mean(MeanKind::lehmer(p - 1.0), t);
      CHECK((gap > 0.0) == (f1({t, p}) > 0.0));
    }
}
