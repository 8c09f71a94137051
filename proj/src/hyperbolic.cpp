#include "meanbounds/hyperbolic.hpp"

#include <cmath>

namespace meanbounds::hyp {

double log_cosh(double x) {
  x = std::fabs(x);
  if (x > kLargeArgument) return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
  return std::log1p(cosh_m1(x));
}

double log_sinh(double x) {
  if (x > kLargeArgument) return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
  return std::log(std::sinh(x));
}

double cosh_m1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

double sinhc_m1(double x) {
  const double x2 = x * x;
  if (std::fabs(x) < 0.5) {
    // sum_{k>=1} x^{2k} / (2k+1)!
    double term = x2 / 6.0;
    double sum = term;
    for (int k = 2; k < 12; ++k) {
      term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  return std::sinh(x) / x - 1.0;
}

double log_sinhc(double x) {
  x = std::fabs(x);
  if (x < 0.5) return std::log1p(sinhc_m1(x));
  return log_sinh(x) - std::log(x);
}

double atanc_m1(double x) {
  const double x2 = x * x;
  if (std::fabs(x) < 0.25) {
    // sum_{k>=1} (-1)^k x^{2k} / (2k+1); summed from the small end.
    double powers[30];
    powers[0] = x2;
    for (int k = 1; k < 30; ++k) powers[k] = powers[k - 1] * x2;
    double sum = 0.0;
    for (int k = 29; k >= 0; --k) {
      const double term = powers[k] / (2.0 * (k + 1) + 1.0);
      sum += (k % 2 == 0) ? -term : term;
    }
    return sum;
  }
  return std::atan(x) / x - 1.0;
}

double asinhc_m1(double x) {
  const double x2 = x * x;
  if (std::fabs(x) < 0.25) {
    // asinh(x)/x = sum_k c_k x^{2k}, c_k / c_{k-1} = -(2k-1)^2 / (2k(2k+1))
    double coeffs[30];
    double c = 1.0;
    for (int k = 1; k <= 30; ++k) {
      c *= -((2.0 * k - 1.0) * (2.0 * k - 1.0)) / ((2.0 * k) * (2.0 * k + 1.0));
      coeffs[k - 1] = c;
    }
    double sum = 0.0;
    for (int k = 29; k >= 0; --k) sum = sum * x2 + coeffs[k];
    return sum * x2;
  }
  return std::asinh(x) / x - 1.0;
}

double xcoth_m1(double x) {
  x = std::fabs(x);
  if (x == 0.0) return 0.0;
  if (x < 1.0) {
    // (x cosh x - sinh x) = sum_{k>=1} 2k x^{2k+1} / (2k+1)!, all terms positive
    const double x2 = x * x;
    double factorial_term = x;  // x^{2k+1}/(2k+1)!
    double sum = 0.0;
    for (int k = 1; k < 16; ++k) {
      factorial_term *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += 2.0 * k * factorial_term;
    }
    return sum / std::sinh(x);
  }
  if (x > kLargeArgument) return x * (1.0 + 2.0 / std::expm1(2.0 * x)) - 1.0;
  return x / std::tanh(x) - 1.0;
}

}  // namespace meanbounds::hyp
