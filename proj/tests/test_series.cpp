#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "meanbounds/kernels.hpp"
#include "meanbounds/series.hpp"

using namespace meanbounds;

TEST_CASE("sign-change detection") {
  using V = std::vector<double>;
  CHECK(detect_sign_change(V{1.0, 2.0, -1.0}) == 1u);
  CHECK(detect_sign_change(V{0.0, 0.0, 3.0, 0.0, -1.0, -2.0}) == 2u);
  CHECK(detect_sign_change(V{1.0, 0.0, -1.0, 0.0}) == 0u);
  // no negative tail
  CHECK_FALSE(detect_sign_change(V{1.0, 2.0, 0.0}));
  // nothing positive
  CHECK_FALSE(detect_sign_change(V{0.0, -1.0, -2.0}));
  CHECK_FALSE(detect_sign_change(V{}));
  // two sign changes
  CHECK_FALSE(detect_sign_change(V{1.0, -1.0, 1.0, -1.0}));
  CHECK_FALSE(detect_sign_change(V{-1.0, 1.0, -1.0}));
  CHECK_FALSE(detect_sign_change(V{1.0, std::nan(""), -1.0}));
}

TEST_CASE("positive root of a single-sign-change polynomial") {
  // 2 + t - t^2 = (2 - t)(1 + t)
  const auto seq = CoefficientSeq::from({2.0, 1.0, -1.0});
  REQUIRE(seq);
  CHECK(seq->sign_change_index() == 1u);
  CHECK(seq->evaluate(2.0) == 0.0);
  CHECK(seq->magnitude(2.0) == 8.0);
  CHECK(series_positive_root(*seq, 10.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(series_positive_root(*seq, 1.5), std::domain_error);
  CHECK_THROWS_AS(series_positive_root(*seq, 0.0), std::invalid_argument);
  CHECK_FALSE(CoefficientSeq::from({1.0, 1.0}));
}

TEST_CASE("root with a zero leading block: t^3 - t^5") {
  const auto seq = CoefficientSeq::from({0.0, 0.0, 0.0, 1.0, 0.0, -1.0});
  REQUIRE(seq);
  CHECK(series_positive_root(*seq, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("f2 coefficients for 1 < p < 4/3 change sign once, and the series root is the f2 root") {
  for (double p : {1.05, 1.2, 1.3}) {
    CAPTURE(p);
    // in s = t^2: u_1 > 0, and the u_n turn negative for good after a few terms
    auto coeffs = f2_series_coefficients(p, 40);
    const auto seq = CoefficientSeq::from(coeffs);
    REQUIRE(seq);
    CHECK(seq->sign_change_index() >= 1u);
    const double s_root = series_positive_root(*seq, 25.0);
    const double t_root = std::sqrt(s_root);
    // independent root of the closed form by bisection
    double lo = 1e-3, hi = 5.0;
    REQUIRE(f2({lo, p}) > 0.0);
    REQUIRE(f2({hi, p}) < 0.0);
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (f2({mid, p}) > 0.0 ? lo : hi) = mid;
    }
    CHECK(t_root == doctest::Approx(lo).epsilon(1e-10));
  }
  // at p = 4/3 the leading coefficient vanishes (up to the rounding of 4/3)
  const auto at_four_thirds = f2_series_coefficients(4.0 / 3.0, 20);
  CHECK(std::fabs(at_four_thirds[1]) < 1e-14);
  for (std::size_t n = 2; n < at_four_thirds.size(); ++n) CHECK(at_four_thirds[n] < 0.0);
}
