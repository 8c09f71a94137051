#include "meanbounds/means.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "meanbounds/hyperbolic.hpp"
#include "meanbounds/quadrature.hpp"

namespace meanbounds {

namespace {

using hyp::kLn2;
using hyp::kPi;

constexpr double kSmallPowerParameter = 1e-8;
// Below this min/max ratio eval_mean switches to the half-log-ratio route.
constexpr double kTinyRatio = std::numeric_limits<double>::min();
// Below this t the Toader mean uses its Gauss-Kummer series (tanh^2 t < 0.22).
constexpr double kToaderSeriesMaxT = 0.5;

struct NamedMean {
  std::string_view name;
  MeanTag tag;
};

constexpr std::array<NamedMean, 13> kNamedMeans{{
    {"harmonic", MeanTag::Harmonic},
    {"geometric", MeanTag::Geometric},
    {"arithmetic", MeanTag::Arithmetic},
    {"quadratic", MeanTag::Quadratic},
    {"log", MeanTag::Logarithmic},
    {"identric", MeanTag::Identric},
    {"first-seiffert", MeanTag::FirstSeiffert},
    {"yang", MeanTag::Yang},
    {"toader", MeanTag::Toader},
    {"neuman-sandor", MeanTag::NeumanSandor},
    {"sandor", MeanTag::Sandor},
    {"second-seiffert", MeanTag::SecondSeiffert},
    {"sandor-yang", MeanTag::SandorYang},
}};

std::string shortest(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

void check_parameter(const MeanKind& kind) {
  if (!kind.parametric()) return;
  if (std::isnan(kind.param)) throw std::invalid_argument("mean parameter is NaN");
  if (kind.tag == MeanTag::Lehmer && std::isinf(kind.param))
    throw std::invalid_argument("Lehmer mean parameter must be finite");
}

// T*(r, 1) for 0 <= r <= 1, via
//   (2/pi) int sqrt(cos^2 + r^2 sin^2) = [(1 + r^2)/2 - sum_{n>=1} 2^{n-1} c_n^2] / AGM(1, r)
// with c_n = (a_{n-1} - b_{n-1}) / 2 along the AGM sequence.
double toader_unit(double r) {
  if (r == 0.0) return 2.0 / kPi;
  double a = 1.0;
  double b = r;
  double weight = 1.0;
  double sum = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double c = 0.5 * (a - b);
    sum += weight * c * c;
    weight *= 2.0;
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
    // Quadratic convergence: the next c is ~c^2, far below rounding. Waiting
    // for c == 0 instead can stall with a and b one ulp apart.
    if (c <= 1e-15 * a) break;
  }
  return (0.5 * (1.0 + r * r) - sum) / a;
}

// log(T*/A) near t = 0 from the Gauss-Kummer series
//   T*/A = sum_n binom(1/2, n)^2 h^n,  h = tanh^2 t,
// which keeps the O(t^2) result accurate relative to its size.
double log_toader_over_arithmetic(double h) {
  double term = 1.0;
  double sum = 0.0;
  for (int n = 0; n < 200; ++n) {
    const double ratio = (n - 0.5) / (n + 1.0);
    term *= ratio * ratio * h;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return std::log1p(sum);
}

double log_power_normalized(double p, double t) {
  if (std::isinf(p)) return p > 0 ? t : -t;
  if (p == 0.0) return 0.0;
  if (std::fabs(p) < kSmallPowerParameter) return 0.5 * p * t * t;
  return hyp::log_cosh(p * t) / p;
}

// log(sinh t / atan(sinh t)) and its sqrt(2) variant; both O(t^2) near 0.
double log_sinh_over_atan_sinh(double t, double scale) {
  if (t < 1.0) return -std::log1p(hyp::atanc_m1(scale * std::sinh(t)));
  return std::log(scale) + hyp::log_sinh(t) - std::log(std::atan(scale * std::sinh(t)));
}

}  // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("mean arguments must be positive and finite");
}

std::string to_string(const MeanKind& kind) {
  switch (kind.tag) {
    case MeanTag::Power:
      return "power:" + shortest(kind.param);
    case MeanTag::Lehmer:
      return "lehmer:" + shortest(kind.param);
    default:
      break;
  }
  for (const auto& named : kNamedMeans)
    if (named.tag == kind.tag) return std::string(named.name);
  return "unknown";
}

double parse_real(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "p0") return 4.0 * kLn2 / (4.0 + 2.0 * kLn2 - kPi);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_real(text.substr(0, slash));
    const double den = parse_real(text.substr(slash + 1));
    if (den == 0.0 || !std::isfinite(num) || !std::isfinite(den))
      throw std::invalid_argument("bad fraction: " + std::string(text));
    return num / den;
  }
  const char* first = text.data();
  if (*first == '+') ++first;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || std::isnan(value))
    throw std::invalid_argument("not a number: " + std::string(text));
  return value;
}

MeanKind parse_mean(std::string_view text) {
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    const auto head = text.substr(0, colon);
    const double param = parse_real(text.substr(colon + 1));
    MeanKind kind;
    if (head == "power") {
      kind = MeanKind::power(param);
    } else if (head == "lehmer") {
      kind = MeanKind::lehmer(param);
    } else {
      throw std::invalid_argument("unknown parametric mean: " + std::string(head));
    }
    check_parameter(kind);
    return kind;
  }
  if (text == "logarithmic") return MeanKind::of(MeanTag::Logarithmic);
  for (const auto& named : kNamedMeans)
    if (named.name == text) return MeanKind::of(named.tag);
  throw std::invalid_argument("unknown mean: " + std::string(text));
}

double half_log_ratio(const PositivePair& pair) {
  if (pair.equal()) return 0.0;
  const double lo = pair.min();
  const double hi = pair.max();
  const double excess = (hi - lo) / lo;
  if (std::isfinite(excess)) return 0.5 * std::log1p(excess);
  return 0.5 * (std::log(hi) - std::log(lo));
}

double log_normalized_mean(const MeanKind& kind, double t) {
  check_parameter(kind);
  if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("t must be nonnegative");
  if (t == 0.0) return 0.0;
  switch (kind.tag) {
    case MeanTag::Power:
      return log_power_normalized(kind.param, t);
    case MeanTag::Lehmer:
      return hyp::log_cosh((kind.param + 1.0) * t) - hyp::log_cosh(kind.param * t);
    case MeanTag::Harmonic:
      return -hyp::log_cosh(t);
    case MeanTag::Geometric:
      return 0.0;
    case MeanTag::Arithmetic:
      return hyp::log_cosh(t);
    case MeanTag::Quadratic:
      return 0.5 * hyp::log_cosh(2.0 * t);
    case MeanTag::Logarithmic:
      return hyp::log_sinhc(t);
    case MeanTag::Identric:
      return hyp::xcoth_m1(t);
    case MeanTag::FirstSeiffert:
      return log_sinh_over_atan_sinh(t, 1.0);
    case MeanTag::Yang:
      return log_sinh_over_atan_sinh(t, std::numbers::sqrt2);
    case MeanTag::Toader:
      if (t < kToaderSeriesMaxT) {
        const double x = std::tanh(t);
        return hyp::log_cosh(t) + log_toader_over_arithmetic(x * x);
      }
      return t + std::log(toader_unit(std::exp(-2.0 * t)));
    case MeanTag::NeumanSandor:
      return hyp::log_cosh(t) - std::log1p(hyp::asinhc_m1(std::tanh(t)));
    case MeanTag::Sandor:
      // A e^{G/P - 1}
      return hyp::log_cosh(t) + std::expm1(-log_sinh_over_atan_sinh(t, 1.0));
    case MeanTag::SecondSeiffert:
      return hyp::log_cosh(t) - std::log1p(hyp::atanc_m1(std::tanh(t)));
    case MeanTag::SandorYang:
      // Q e^{A/T - 1}, with A/T = atan(tanh t) / tanh t
      return 0.5 * hyp::log_cosh(2.0 * t) + hyp::atanc_m1(std::tanh(t));
  }
  throw std::logic_error("unhandled mean tag");
}

double eval_mean_normalized(const MeanKind& kind, double t) {
  return std::exp(log_normalized_mean(kind, t));
}

namespace {

// (x / atan x) for x >= 0, without the cancellation of 1 + atanc_m1(x) at
// large x.
double x_over_atan(double x) {
  if (x < 0.5) return 1.0 / (1.0 + hyp::atanc_m1(x));
  return x / std::atan(x);
}

}  // namespace

double eval_mean(const MeanKind& kind, const PositivePair& pair) {
  check_parameter(kind);
  if (pair.equal()) return pair.a();
  const double lo = pair.min();
  const double hi = pair.max();
  // Work on (1, r) = (max, min) / max: every formula below is homogeneous of
  // degree one, nothing overflows, and the result is symmetric by
  // construction.
  const double r = lo / hi;
  if (r < kTinyRatio) {
    // r is subnormal or zero; the t-route is overflow-free.
    const double t = half_log_ratio(pair);
    return std::clamp(hi * std::exp(log_normalized_mean(kind, t) - t), lo, hi);
  }
  const double diff = 1.0 - r;
  const double d = diff / (1.0 + r);
  const double arithmetic = 0.5 * (1.0 + r);
  const double geometric = std::sqrt(r);

  double value = 0.0;
  switch (kind.tag) {
    case MeanTag::Power: {
      const double p = kind.param;
      if (p == std::numeric_limits<double>::infinity()) return hi;
      if (p == -std::numeric_limits<double>::infinity()) return lo;
      if (p == 0.0) {
        value = geometric;
      } else if (std::fabs(p) < kSmallPowerParameter) {
        const double t = half_log_ratio(pair);
        value = geometric * std::exp(0.5 * p * t * t);
      } else if (p > 0.0) {
        // ((1 + r^p)/2)^{1/p}
        value = std::exp(std::log1p(0.5 * std::expm1(p * std::log(r))) / p);
      } else {
        // r ((1 + r^{-p})/2)^{1/p}
        value = r * std::exp(std::log1p(0.5 * std::expm1(-p * std::log(r))) / p);
      }
      break;
    }
    case MeanTag::Harmonic:
      value = 2.0 * r / (1.0 + r);
      break;
    case MeanTag::Geometric:
      value = geometric;
      break;
    case MeanTag::Arithmetic:
      value = arithmetic;
      break;
    case MeanTag::Quadratic:
      value = std::hypot(1.0, r) / std::numbers::sqrt2;
      break;
    case MeanTag::Logarithmic:
      // log1p keeps near-equal pairs accurate; far apart, log r itself is.
      value = r > 0.5 ? diff / -std::log1p(-diff) : diff / -std::log(r);
      break;
    case MeanTag::FirstSeiffert:
      // asin d = atan((1 - r) / (2 sqrt r)), well conditioned up to d = 1
      value = geometric * x_over_atan(diff / (2.0 * geometric));
      break;
    case MeanTag::Yang:
      value = geometric * x_over_atan(diff / (std::numbers::sqrt2 * geometric));
      break;
    case MeanTag::Toader:
      value = toader_unit(r);
      break;
    case MeanTag::NeumanSandor:
      value = arithmetic / (1.0 + hyp::asinhc_m1(d));
      break;
    case MeanTag::Sandor: {
      const double seiffert = geometric * x_over_atan(diff / (2.0 * geometric));
      value = arithmetic * std::exp(geometric / seiffert - 1.0);
      break;
    }
    case MeanTag::SecondSeiffert:
      value = arithmetic / (1.0 + hyp::atanc_m1(d));
      break;
    case MeanTag::SandorYang:
      // Q e^{A/T - 1} with A/T = atan(d)/d
      value = std::hypot(1.0, r) / std::numbers::sqrt2 * std::exp(hyp::atanc_m1(d));
      break;
    case MeanTag::Lehmer: {
      // (1 + r^{p+1}) / (1 + r^p), scaled by r^{-p} when p < 0 so that no
      // power exceeds one
      const double p = kind.param;
      if (p >= 0.0) {
        value = (1.0 + std::pow(r, p + 1.0)) / (1.0 + std::pow(r, p));
      } else {
        const double s = std::pow(r, -p);
        value = (s + r) / (s + 1.0);
      }
      break;
    }
    case MeanTag::Identric:
      // log I = -1 - r log r / (1 - r); near r = 1 that cancels, so go through t
      value = r > 0.5 ? geometric * std::exp(log_normalized_mean(kind, half_log_ratio(pair)))
                      : std::exp(-1.0 - r * std::log(r) / diff);
      break;
  }
  return std::clamp(value * hi, lo, hi);
}

double log_mean_gap(const MeanKind& first, const MeanKind& second,
                    const PositivePair& pair) {
  const double t = half_log_ratio(pair);
  return log_normalized_mean(first, t) - log_normalized_mean(second, t);
}

double toader_mean(const PositivePair& pair) {
  if (pair.equal()) return pair.a();
  const double hi = pair.max();
  return std::clamp(hi * toader_unit(pair.min() / hi), pair.min(), hi);
}

double toader_mean_quadrature(const PositivePair& pair, int nodes) {
  const auto rule = gauss_legendre(nodes, 0.0, 0.5 * kPi);
  const double hi = pair.max();
  const double ra = pair.a() / hi;
  const double rb = pair.b() / hi;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double c = std::cos(rule.nodes[i]);
    const double s = std::sin(rule.nodes[i]);
    sum += rule.weights[i] * std::sqrt(ra * ra * c * c + rb * rb * s * s);
  }
  return hi * (2.0 / kPi) * sum;
}

}  // namespace meanbounds
