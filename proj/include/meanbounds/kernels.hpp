#pragma once

// Auxiliary functions behind the Sandor-Yang / power mean comparison, all in
// the half-log-ratio coordinate t:
//
//   f1(t,p) = -atan(tanh t) + sinh t cosh t - tanh(pt) sinh^2 t
//   f2(t,p) = cosh((p-2)t) - cosh(pt) + (1-p) cosh 2t + 2p cosh t - p - 1
//           = sum_{n>=1} u_n(p) t^{2n} / (2n)!
//   u_n(p)  = (2-p)^{2n} - p^{2n} + (1-p) 2^{2n} + 2p
//   F(t,p)  = log cosh(2t)/2 + atan(tanh t)/tanh t - log cosh(pt)/p - 1
//           = log B(a,b) - log M_p(a,b)
//
// with dF/dt = f1 / sinh^2 t.

#include <cstddef>
#include <vector>

#include "meanbounds/means.hpp"

namespace meanbounds {

struct KernelPoint {
  double t = 0.0;
  double p = 0.0;
};

double f1(KernelPoint point);

double f2(KernelPoint point);

/// The product form 4 sinh^2 t cosh^2(pt/2) - 4p cosh t sinh^2(t/2)
/// - sinh 2t sinh pt, an independent algebraic route to f2.
double f2_product(KernelPoint point);

/// u_n(p) in any field (double, exact rationals, multiprecision floats).
template <class Real>
Real u_n(int n, const Real& p) {
  Real two_minus = Real(2) - p;
  Real a = 1, b = 1, c = 1;
  const Real s_two_minus = two_minus * two_minus;
  const Real s_p = p * p;
  for (int k = 0; k < n; ++k) {
    a *= s_two_minus;
    b *= s_p;
    c *= Real(4);
  }
  return a - b + (Real(1) - p) * c + Real(2) * p;
}

/// Coefficients of f2(t,p) as a power series in s = t^2:
/// result[0] = 0, result[n] = u_n(p) / (2n)! for n = 1..terms.
std::vector<double> f2_series_coefficients(double p, std::size_t terms);

/// Upper bound on sum_{n>terms} |u_n(p)| s^n / (2n)!, or +inf when the
/// geometric majorant does not converge yet.
double f2_series_tail_bound(double p, double s, std::size_t terms);

/// Truncated series for f2 with the number of terms chosen adaptively so
/// that the tail bound falls below 1e-17 of the absolute term sum.
double f2_series(double t, double p);

/// Throws std::invalid_argument for p == 0.
double F(KernelPoint point);

/// dF/dt = f1 / sinh^2 t.
double dF_dt(KernelPoint point);

/// lim_{t->0+} F(t,p) / t^2 = -(p - 4/3)/2.
double F_quadratic_coefficient(double p);

/// lim_{t->inf} F(t,p) for p > 0: pi/4 - log2/2 + log2/p - 1 = log(lambda_p).
double F_limit_infinity(double p);

/// |log B(a,b) - log M_p(a,b) - F(t,p)|; requires a != b and p != 0.
double log_identity_check(const PositivePair& pair, double p);

/// f1 through the second Seiffert and Lehmer means:
/// [atan(tanh t) cosh((p-1)t)/cosh(pt)] * [sinh t/atan(tanh t) - cosh(pt)/cosh((p-1)t)],
/// where the second bracket is (T - L_{p-1}) / sqrt(ab). So f1 and T - L_{p-1}
/// share their sign.
double f1_lehmer_form(KernelPoint point);

}  // namespace meanbounds
