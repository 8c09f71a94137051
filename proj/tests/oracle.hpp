#pragma once

// 50-digit reference values computed straight from the textbook definitions
// in (a, b). Nothing here shares code with the library under test.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

#include "meanbounds/means.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;
using meanbounds::MeanKind;
using meanbounds::MeanTag;

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real power_mean(Real p, const Real& a, const Real& b) {
  if (p == 0) return sqrt(a * b);
  if (boost::multiprecision::isinf(p)) return p > 0 ? (a > b ? a : b) : (a < b ? a : b);
  return pow((pow(a, p) + pow(b, p)) / 2, 1 / p);
}

inline Real lehmer_mean(const Real& p, const Real& a, const Real& b) {
  return (pow(a, p + 1) + pow(b, p + 1)) / (pow(a, p) + pow(b, p));
}

inline Real toader(const Real& a, const Real& b) {
  const Real hi = a > b ? a : b;
  const Real lo = a > b ? b : a;
  const Real k = sqrt(1 - (lo / hi) * (lo / hi));
  return 2 / pi() * hi * boost::math::ellint_2(k);
}

inline Real mean(const MeanKind& kind, const Real& a, const Real& b) {
  if (a == b) return a;
  const Real two = 2;
  const Real arithmetic = (a + b) / 2;
  const Real geometric = sqrt(a * b);
  const Real quadratic = sqrt((a * a + b * b) / 2);
  const Real diff = a - b;
  const Real d = diff / (a + b);
  switch (kind.tag) {
    case MeanTag::Power: return power_mean(Real(kind.param), a, b);
    case MeanTag::Lehmer: return lehmer_mean(Real(kind.param), a, b);
    case MeanTag::Harmonic: return 2 * a * b / (a + b);
    case MeanTag::Geometric: return geometric;
    case MeanTag::Arithmetic: return arithmetic;
    case MeanTag::Quadratic: return quadratic;
    case MeanTag::Logarithmic: return diff / (log(a) - log(b));
    case MeanTag::Identric: return exp((a * log(a) - b * log(b)) / diff - 1);
    case MeanTag::FirstSeiffert: return diff / (2 * asin(d));
    case MeanTag::Yang: return diff / (sqrt(two) * atan(diff / sqrt(2 * a * b)));
    case MeanTag::Toader: return toader(a, b);
    case MeanTag::NeumanSandor: return diff / (2 * asinh(d));
    case MeanTag::Sandor: {
      const Real p = diff / (2 * asin(d));
      return arithmetic * exp(geometric / p - 1);
    }
    case MeanTag::SecondSeiffert: return diff / (2 * atan(d));
    case MeanTag::SandorYang: {
      const Real t = diff / (2 * atan(d));
      return quadratic * exp(arithmetic / t - 1);
    }
  }
  throw std::logic_error("unhandled mean");
}

/// log K(e^-t, e^t).
inline Real log_normalized(const MeanKind& kind, const Real& t) {
  return log(mean(kind, exp(-t), exp(t)));
}

inline Real f1(const Real& t, const Real& p) {
  const Real s = sinh(t);
  return -atan(tanh(t)) + s * cosh(t) - tanh(p * t) * s * s;
}

inline Real f2(const Real& t, const Real& p) {
  return cosh((p - 2) * t) - cosh(p * t) + (1 - p) * cosh(2 * t) + 2 * p * cosh(t) - p - 1;
}

/// log B - log M_p on (e^-t, e^t).
inline Real F(const Real& t, const Real& p) {
  const Real a = exp(-t);
  const Real b = exp(t);
  return log(mean(MeanKind::of(MeanTag::SandorYang), a, b)) - log(power_mean(p, a, b));
}

}  // namespace oracle
