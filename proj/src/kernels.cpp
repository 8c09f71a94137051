#include "meanbounds/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "meanbounds/hyperbolic.hpp"

namespace meanbounds {

namespace {

using hyp::kLn2;
using hyp::kPi;

// F(t,p) = sum_k a_k(p) t^{2k} near t = 0. The t^2 coefficient is written as
// -(p - 4/3)/2 so that it vanishes exactly at the rounded 4/3.
constexpr double kSeriesMaxT = 1e-3;
constexpr double kSeriesMaxPT = 1e-2;

bool use_small_t_series(double t, double p) {
  return t < kSeriesMaxT && std::fabs(p) * t < kSeriesMaxPT;
}

std::array<double, 6> F_series_coefficients(double p) {
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double p5 = p3 * p2;
  const double p7 = p5 * p2;
  const double p9 = p7 * p2;
  const double p11 = p9 * p2;
  return {
      -0.5 * (p - 4.0 / 3.0),
      (15.0 * p3 - 44.0) / 180.0,
      -(21.0 * p5 - 166.0) / 945.0,
      (255.0 * p7 - 6088.0) / 37800.0,
      -(1023.0 * p9 - 78662.0) / 467775.0,
      (943215.0 * p11 - 243093404.0) / 1277025750.0,
  };
}

double F_series(double t, double p) {
  const auto a = F_series_coefficients(p);
  const double s = t * t;
  double sum = 0.0;
  for (int k = 5; k >= 0; --k) sum = sum * s + a[k];
  return sum * s;
}

double dF_dt_series(double t, double p) {
  const auto a = F_series_coefficients(p);
  const double s = t * t;
  double sum = 0.0;
  for (int k = 5; k >= 0; --k) sum = sum * s + 2.0 * (k + 1) * a[k];
  return sum * t;
}

void check_t(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("kernel argument t must be >= 0");
}

}  // namespace

double f1(KernelPoint point) {
  const auto [t, p] = point;
  check_t(t);
  if (t == 0.0) return 0.0;
  if (use_small_t_series(t, p)) {
    const double s = std::sinh(t);
    return s * s * dF_dt_series(t, p);
  }
  // f1 = (x - atan x) - tanh t sinh t sinh((p-1)t) / cosh(pt),  x = tanh t
  const double x = std::tanh(t);
  const double head = -x * hyp::atanc_m1(x);
  const double q = p - 1.0;
  double tail = 0.0;
  if (q != 0.0) {
    const double largest = std::max({t, std::fabs(p) * t, std::fabs(q) * t});
    if (largest <= hyp::kLargeArgument) {
      tail = x * std::sinh(t) * std::sinh(q * t) / std::cosh(p * t);
    } else {
      const double log_tail = std::log(x) + hyp::log_sinh(t) +
                              hyp::log_sinh(std::fabs(q) * t) - hyp::log_cosh(p * t);
      tail = std::copysign(std::exp(log_tail), q);
    }
  }
  return head - tail;
}

double f2(KernelPoint point) {
  const auto [t, p] = point;
  if (std::fabs(t) < 1e-3) return f2_series(std::fabs(t), p);
  // The constant terms cancel exactly once every cosh is written as 1 + (cosh - 1).
  return hyp::cosh_m1((p - 2.0) * t) - hyp::cosh_m1(p * t) +
         (1.0 - p) * hyp::cosh_m1(2.0 * t) + 2.0 * p * hyp::cosh_m1(t);
}

double f2_product(KernelPoint point) {
  const auto [t, p] = point;
  const double sh = std::sinh(t);
  const double ch_half_p = std::cosh(0.5 * p * t);
  const double sh_half = std::sinh(0.5 * t);
  return 4.0 * sh * sh * ch_half_p * ch_half_p -
         4.0 * p * std::cosh(t) * sh_half * sh_half -
         std::sinh(2.0 * t) * std::sinh(p * t);
}

std::vector<double> f2_series_coefficients(double p, std::size_t terms) {
  std::vector<double> coeffs(terms + 1, 0.0);
  double inverse_factorial = 1.0;
  for (std::size_t n = 1; n <= terms; ++n) {
    inverse_factorial /= (2.0 * n - 1.0) * (2.0 * n);
    coeffs[n] = u_n(static_cast<int>(n), p) * inverse_factorial;
  }
  return coeffs;
}

double f2_series_tail_bound(double p, double s, std::size_t terms) {
  const double beta = std::max({std::fabs(2.0 - p), std::fabs(p), 2.0});
  const double scale = 2.0 + std::fabs(1.0 - p) + 2.0 * std::fabs(p);
  const double x = beta * beta * s;
  // first omitted term K x^{N+1} / (2N+2)!, built up in log space
  const double n1 = static_cast<double>(terms) + 1.0;
  const double log_first = std::log(scale) + n1 * std::log(x) - std::lgamma(2.0 * n1 + 1.0);
  const double ratio = x / ((2.0 * n1 + 1.0) * (2.0 * n1 + 2.0));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_first) / (1.0 - ratio);
}

double f2_series(double t, double p) {
  const double s = t * t;
  if (s == 0.0) return 0.0;
  // term_n = A_n - B_n + (1-p) C_n + 2p D_n with X_n = (x s)^n / (2n)!
  double a = 1.0, b = 1.0, c = 1.0, d = 1.0;
  const double xa = (2.0 - p) * (2.0 - p) * s;
  const double xb = p * p * s;
  const double xc = 4.0 * s;
  double sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t n = 1; n <= 400; ++n) {
    const double denom = (2.0 * n - 1.0) * (2.0 * n);
    a *= xa / denom;
    b *= xb / denom;
    c *= xc / denom;
    d *= s / denom;
    const double term = (a - b) + (1.0 - p) * c + 2.0 * p * d;
    sum += term;
    magnitude += std::fabs(a) + std::fabs(b) + std::fabs((1.0 - p) * c) + std::fabs(2.0 * p * d);
    if (n >= 2 && f2_series_tail_bound(p, s, n) <= 1e-17 * magnitude) break;
  }
  return sum;
}

double F(KernelPoint point) {
  const auto [t, p] = point;
  check_t(t);
  if (p == 0.0) throw std::invalid_argument("F(t,p) needs p != 0");
  if (t == 0.0) return 0.0;
  if (use_small_t_series(t, p)) return F_series(t, p);
  return 0.5 * hyp::log_cosh(2.0 * t) + hyp::atanc_m1(std::tanh(t)) -
         hyp::log_cosh(p * t) / p;
}

double dF_dt(KernelPoint point) {
  const auto [t, p] = point;
  check_t(t);
  if (t == 0.0) return 0.0;
  if (use_small_t_series(t, p)) return dF_dt_series(t, p);
  const double numerator = f1(point);
  if (t > hyp::kLargeArgument) return numerator * std::exp(-2.0 * hyp::log_sinh(t));
  const double s = std::sinh(t);
  return numerator / (s * s);
}

double F_quadratic_coefficient(double p) { return -0.5 * (p - 4.0 / 3.0); }

double F_limit_infinity(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("the t -> inf limit of F is finite only for p > 0");
  return kPi / 4.0 - 0.5 * kLn2 + kLn2 / p - 1.0;
}

double log_identity_check(const PositivePair& pair, double p) {
  if (pair.equal()) throw std::invalid_argument("identity check needs a != b");
  if (p == 0.0) throw std::invalid_argument("identity check needs p != 0");
  const double t = half_log_ratio(pair);
  const double log_b = std::log(eval_mean(MeanKind::of(MeanTag::SandorYang), pair));
  const double log_m = std::log(eval_mean(MeanKind::power(p), pair));
  return std::fabs(log_b - log_m - F({t, p}));
}

double f1_lehmer_form(KernelPoint point) {
  const auto [t, p] = point;
  const double arc = std::atan(std::tanh(t));
  // cosh((p-1)t) / cosh(pt), kept finite for large arguments
  const double ratio = std::exp(hyp::log_cosh((p - 1.0) * t) - hyp::log_cosh(p * t));
  return arc * ratio * (std::sinh(t) / arc - 1.0 / ratio);
}

}  // namespace meanbounds
