#pragma once

// Cancellation- and overflow-free building blocks shared by the means and
// the kernel functions. Every "_m1" helper returns f(x) - 1 for a function
// with f(0) = 1, accurate relative to the (small) result.

#include <numbers>

namespace meanbounds::hyp {

inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kPi = std::numbers::pi;

/// Beyond this argument cosh/sinh are evaluated through their exponential
/// asymptotics in log space.
inline constexpr double kLargeArgument = 20.0;

/// log cosh x for any real x.
double log_cosh(double x);

/// log sinh x for x > 0.
double log_sinh(double x);

/// cosh x - 1 = 2 sinh^2(x/2).
double cosh_m1(double x);

/// sinh(x)/x - 1.
double sinhc_m1(double x);

/// log(sinh(x)/x), x >= 0.
double log_sinhc(double x);

/// atan(x)/x - 1.
double atanc_m1(double x);

/// asinh(x)/x - 1.
double asinhc_m1(double x);

/// x coth x - 1.
double xcoth_m1(double x);

}  // namespace meanbounds::hyp
