#include "meanbounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "meanbounds/hyperbolic.hpp"
#include "meanbounds/kernels.hpp"

namespace meanbounds {

namespace {

using hyp::kLn2;
using hyp::kPi;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Far enough out that F(t, p) sits on its limit to full double precision for
// the parameters of interest (the remainder decays like e^{-2 min(1,p) t}).
constexpr double kFarT = 40.0;

// log(B / max) tends to this constant.
const double kSandorYangLimit = kPi / 4.0 - 1.0 - 0.5 * kLn2;

int sign_with_tie(double value, double tie) {
  if (value > tie) return 1;
  if (value < -tie) return -1;
  return 0;
}

double check_param(double param) {
  if (std::isnan(param)) throw std::invalid_argument("family parameter is NaN");
  return param;
}

// log(log1p(y) / y) with y = e^{-x}, x >= 0; 0 in the limit y -> 0.
double log_log1p_ratio(double x) {
  const double y = std::exp(-x);
  if (y == 0.0) return 0.0;
  return std::log(std::log1p(y) / y);
}

// log x_p where x_p = log(2^{1/p} M_p / max) = log1p(e^{-2pt}) / p, p > 0.
double log_power_excess(double p, double t) {
  if (std::isinf(p)) return -kInf;
  const double x = 2.0 * p * t;
  if (x < kLn2) return std::log(std::log1p(std::exp(-x))) - std::log(p);
  return -x + log_log1p_ratio(x) - std::log(p);
}

// log x_B where x_B = log(B / max) - (pi/4 - 1 - log2/2) > 0.
double log_sandor_yang_excess(double t) {
  if (t < 1.0) {
    const double direct =
        log_normalized_mean(MeanKind::of(MeanTag::SandorYang), t) - t - kSandorYangLimit;
    return std::log(direct);
  }
  // With u = e^{-2t}: x_B = log1p(u^2)/2 + [(pi/2)u - (1+u) atan u] / (1-u).
  const double u = std::exp(-2.0 * t);
  const double v = u * u;
  const double log1p_ratio = v == 0.0 ? 1.0 : std::log1p(v) / v;
  const double bracket = (kPi / 2.0 - (1.0 + u) * (1.0 + hyp::atanc_m1(u))) / (1.0 - u);
  return -2.0 * t + std::log(0.5 * u * log1p_ratio + bracket);
}

// log(T / max) - log(2/pi).
double second_seiffert_excess(double t) {
  if (t < 1.0)
    return log_normalized_mean(MeanKind::of(MeanTag::SecondSeiffert), t) - t -
           std::log(2.0 / kPi);
  const double u = std::exp(-2.0 * t);
  return std::log1p(-u) - std::log1p(-(4.0 / kPi) * std::atan(u));
}

// log(L_{1/3} / max) = log1p(u^{4/3}) - log1p(u^{1/3}).
double lehmer_third_excess(double t) {
  return std::log1p(std::exp(-8.0 * t / 3.0)) - std::log1p(std::exp(-2.0 * t / 3.0));
}

// The mean under test on a fixed grid, with its limit behaviour.
struct Target {
  MeanKind mean;
  std::vector<double> grid;
  std::vector<double> log_values;
  SmallTLeading small;
  LargeTAsymptote large;
};

Target make_target(const MeanKind& mean, const SearchOptions& options) {
  Target target;
  target.mean = mean;
  target.grid = log_grid(options.grid_min, options.grid_max, options.grid_points);
  target.log_values.reserve(target.grid.size());
  for (double t : target.grid) target.log_values.push_back(log_normalized_mean(mean, t));
  target.small = small_t_leading(mean);
  target.large = large_t_asymptote(mean);
  return target;
}

// Sign of log K - log M near t = 0+.
int small_t_sign(const SmallTLeading& k, const SmallTLeading& m, double tie) {
  if (k.order == m.order) return sign_with_tie(k.coefficient - m.coefficient, tie);
  if (k.order < m.order) return sign_with_tie(k.coefficient, 0.0);
  return -sign_with_tie(m.coefficient, 0.0);
}

// Sign of log K - log M as t -> inf.
int large_t_sign(const LargeTAsymptote& k, const LargeTAsymptote& m, double tie) {
  if (const int s = sign_with_tie(m.rate - k.rate, tie); s != 0) return s;
  if (const int s = sign_with_tie(k.log_coefficient - m.log_coefficient, tie); s != 0) return s;
  return sign_with_tie(k.constant - m.constant, tie);
}

// Amount by which the claimed inequality fails at each grid point (<= 0 where
// it holds).
std::vector<double> violations(const Target& target, Family family, double param, Side side) {
  const MeanKind member = family_member(family, param);
  std::vector<double> out(target.grid.size());
  for (std::size_t i = 0; i < target.grid.size(); ++i) {
    const double gap = target.log_values[i] - log_normalized_mean(member, target.grid[i]);
    out[i] = side == Side::Lower ? -gap : gap;
  }
  return out;
}

bool holds_on_target(const Target& target, Family family, double param, Side side,
                     const SearchOptions& options) {
  if (options.analytic_limits) {
    const MeanKind member = family_member(family, param);
    const int want = side == Side::Lower ? 1 : -1;
    if (small_t_sign(target.small, small_t_leading(member), options.tie_tolerance) == -want)
      return false;
    if (large_t_sign(target.large, large_t_asymptote(member), options.tie_tolerance) == -want)
      return false;
  }
  const auto v = violations(target, family, param, side);
  return std::all_of(v.begin(), v.end(),
                     [&](double x) { return x <= options.tie_tolerance; });
}

// Failures driven by the t -> inf asymptote can set in far beyond the grid
// when the parameter is close to its endpoint, so the scan continues
// geometrically past grid_max.
constexpr int kExtensionDoublings = 60;

std::optional<double> witness_on_target(const Target& target, Family family, double param,
                                        Side side, const SearchOptions& options) {
  const auto v = violations(target, family, param, side);
  const auto worst = std::max_element(v.begin(), v.end());
  if (worst != v.end() && *worst > options.tie_tolerance)
    return target.grid[static_cast<std::size_t>(worst - v.begin())];

  // Both logs are about t in size there, so their difference carries an
  // absolute rounding error of a few ulps of t; only violations well above
  // that count.
  const MeanKind member = family_member(family, param);
  double t = target.grid.back();
  for (int k = 0; k < kExtensionDoublings; ++k) {
    t *= 2.0;
    const double gap = log_normalized_mean(target.mean, t) - log_normalized_mean(member, t);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * t;
    if ((side == Side::Lower ? -gap : gap) > options.tie_tolerance + noise) return t;
  }
  return std::nullopt;
}

std::string window_text(const SearchOptions& options) {
  return "[" + std::to_string(static_cast<int>(options.window_min)) + ", " +
         std::to_string(static_cast<int>(options.window_max)) + "]";
}

}  // namespace

std::string to_string(Family family) {
  return family == Family::Power ? "power" : "lehmer";
}

std::string to_string(Side side) { return side == Side::Lower ? "lower" : "upper"; }

Family parse_family(std::string_view text) {
  if (text == "power") return Family::Power;
  if (text == "lehmer") return Family::Lehmer;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

Side parse_side(std::string_view text) {
  if (text == "lower") return Side::Lower;
  if (text == "upper") return Side::Upper;
  throw std::invalid_argument("unknown side '" + std::string(text) + "'");
}

MeanKind family_member(Family family, double param) {
  return family == Family::Power ? MeanKind::power(param) : MeanKind::lehmer(param);
}

bool EndpointReport::within_tolerance() const {
  return !closed_form || std::fabs(*closed_form - numeric) <= tolerance_used;
}

SmallTLeading small_t_leading(const MeanKind& kind) {
  const double p = kind.param;
  switch (kind.tag) {
    case MeanTag::Power:
      check_param(p);
      if (std::isinf(p)) return {1, p > 0 ? 1.0 : -1.0};
      return {2, p / 2.0};
    case MeanTag::Lehmer:
      check_param(p);
      if (std::isinf(p)) throw std::invalid_argument("Lehmer mean needs a finite parameter");
      return {2, (2.0 * p + 1.0) / 2.0};
    case MeanTag::Harmonic: return {2, -0.5};
    case MeanTag::Geometric: return {2, 0.0};
    case MeanTag::Arithmetic: return {2, 0.5};
    case MeanTag::Quadratic: return {2, 1.0};
    case MeanTag::Logarithmic: return {2, 1.0 / 6.0};
    case MeanTag::Identric: return {2, 1.0 / 3.0};
    case MeanTag::FirstSeiffert: return {2, 1.0 / 3.0};
    case MeanTag::Yang: return {2, 2.0 / 3.0};
    case MeanTag::Toader: return {2, 3.0 / 4.0};
    case MeanTag::NeumanSandor: return {2, 2.0 / 3.0};
    case MeanTag::Sandor: return {2, 1.0 / 6.0};
    case MeanTag::SecondSeiffert: return {2, 5.0 / 6.0};
    case MeanTag::SandorYang: return {2, 2.0 / 3.0};
  }
  throw std::invalid_argument("unknown mean");
}

LargeTAsymptote large_t_asymptote(const MeanKind& kind) {
  const double p = kind.param;
  switch (kind.tag) {
    case MeanTag::Power:
      check_param(p);
      if (p == kInf) return {0.0, 0.0, 0.0};
      if (p == -kInf) return {2.0, 0.0, 0.0};
      if (p > 0.0) return {0.0, 0.0, -kLn2 / p};
      if (p == 0.0) return {1.0, 0.0, 0.0};
      return {2.0, 0.0, kLn2 / -p};
    case MeanTag::Lehmer: {
      check_param(p);
      if (std::isinf(p)) throw std::invalid_argument("Lehmer mean needs a finite parameter");
      const double numerator = p + 1.0 != 0.0 ? -kLn2 : 0.0;
      const double denominator = p != 0.0 ? -kLn2 : 0.0;
      return {1.0 + std::fabs(p) - std::fabs(p + 1.0), 0.0, numerator - denominator};
    }
    case MeanTag::Harmonic: return {2.0, 0.0, kLn2};
    case MeanTag::Geometric: return {1.0, 0.0, 0.0};
    case MeanTag::Arithmetic: return {0.0, 0.0, -kLn2};
    case MeanTag::Quadratic: return {0.0, 0.0, -kLn2 / 2.0};
    case MeanTag::Logarithmic: return {0.0, -1.0, -kLn2};
    case MeanTag::Identric: return {0.0, 0.0, -1.0};
    case MeanTag::FirstSeiffert: return {0.0, 0.0, -std::log(kPi)};
    case MeanTag::Yang: return {0.0, 0.0, std::log(std::sqrt(2.0) / kPi)};
    case MeanTag::Toader: return {0.0, 0.0, std::log(2.0 / kPi)};
    case MeanTag::NeumanSandor:
      return {0.0, 0.0, -std::log(2.0 * std::log(1.0 + std::sqrt(2.0)))};
    case MeanTag::Sandor: return {0.0, 0.0, -1.0 - kLn2};
    case MeanTag::SecondSeiffert: return {0.0, 0.0, std::log(2.0 / kPi)};
    case MeanTag::SandorYang: return {0.0, 0.0, kSandorYangLimit};
  }
  throw std::invalid_argument("unknown mean");
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("log_grid needs 0 < lo < hi and at least 2 points");
  std::vector<double> grid(points);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = std::exp(log_lo + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// ---- constants -------------------------------------------------------------

double closed_form_p0() { return 4.0 * kLn2 / (4.0 + 2.0 * kLn2 - kPi); }

double recover_p0_numeric() {
  // F(inf, 1) = log lambda_1 > 0 and F(inf, 4/3) < 0.
  double lo = 1.0;
  double hi = 4.0 / 3.0;
  for (int iter = 0; iter < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon(); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (F({kFarT, mid}) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sharp_lambda(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("sharp_lambda needs p > 0");
  return std::exp(kPi / 4.0 - 1.0) * std::exp2(1.0 / p - 0.5);
}

double find_t0(double p) {
  if (!(p > 1.0 && p < 4.0 / 3.0)) throw std::domain_error("parameter outside (1, 4/3)");
  // f1 ~ (4/3 - p) t^3 > 0 near 0 and tends to 1/2 - pi/4 < 0.
  double lo = 1e-3;
  while (f1({lo, p}) <= 0.0 && lo > 1e-150) lo *= 0.5;
  double hi = 1.0;
  while (f1({hi, p}) >= 0.0) {
    lo = std::max(lo, hi);
    hi *= 2.0;
    if (hi > 1e3) throw std::domain_error("f1 keeps its sign; no root bracketed");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f1({mid, p}) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::fabs(f1({lo, p})) < std::fabs(f1({hi, p})) ? lo : hi;
}

double sandor_yang_power_ratio_sup(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("B/M_p is unbounded unless p > 0");
  if (p <= 1.0) return sharp_lambda(p);
  if (p < 4.0 / 3.0) return std::exp(F({find_t0(p), p}));
  return 1.0;
}

std::vector<ConstantEntry> sharp_constant_table() {
  const double p0 = closed_form_p0();
  return {
      {"p0", "4*log(2)/(4+2*log(2)-pi)", p0},
      {"lambda_inf", "sqrt(2)/2*exp(pi/4-1)", sharp_lambda(kInf)},
      {"lambda_2", "exp(pi/4-1)", sharp_lambda(2.0)},
      {"lambda_3/2", "2^(1/6)*exp(pi/4-1)", sharp_lambda(1.5)},
      {"lambda_4/3", "2^(1/4)*exp(pi/4-1)", sharp_lambda(4.0 / 3.0)},
      {"exp_F_t0_p0", "exp(F(t0;p0)) with t0 the root of f1(.;p0)", std::exp(F({find_t0(p0), p0}))},
      {"2/pi", "2/pi", 2.0 / kPi},
      {"4/pi", "4/pi", 4.0 / kPi},
      {"2^(8/5)/pi", "2^(8/5)/pi", std::exp2(1.6) / kPi},
  };
}

std::vector<ConstantEntry> corollary31_table() {
  return {
      {"lambda_inf", "sqrt(2)/2*exp(pi/4-1)", sharp_lambda(kInf)},
      {"lambda_3", "2^(-1/6)*exp(pi/4-1)", sharp_lambda(3.0)},
      {"lambda_2", "exp(pi/4-1)", sharp_lambda(2.0)},
      {"lambda_3/2", "2^(1/6)*exp(pi/4-1)", sharp_lambda(1.5)},
      {"lambda_4/3", "2^(1/4)*exp(pi/4-1)", sharp_lambda(4.0 / 3.0)},
  };
}

// ---- endpoint search -------------------------------------------------------

bool inequality_holds(const MeanKind& mean, Family family, double param, Side side,
                      const SearchOptions& options) {
  return holds_on_target(make_target(mean, options), family, check_param(param), side, options);
}

std::optional<double> find_witness(const MeanKind& mean, Family family, double param,
                                   Side side, const SearchOptions& options) {
  return witness_on_target(make_target(mean, options), family, check_param(param), side,
                           options);
}

EndpointReport best_exponent(const MeanKind& mean, Family family, Side side,
                             const SearchOptions& options) {
  const Target target = make_target(mean, options);
  auto holds = [&](double x) { return holds_on_target(target, family, x, side, options); };

  // Lower bounds hold for small parameters, upper bounds for large ones.
  double admissible = side == Side::Lower ? options.window_min : options.window_max;
  double rejected = side == Side::Lower ? options.window_max : options.window_min;
  if (!holds(admissible))
    throw std::runtime_error("predicate never holds within search window " +
                             window_text(options));
  if (holds(rejected))
    throw std::runtime_error("predicate always holds within search window " +
                             window_text(options));
  for (int iter = 0; iter < options.iterations; ++iter) {
    const double mid = 0.5 * (admissible + rejected);
    (holds(mid) ? admissible : rejected) = mid;
  }

  EndpointReport report;
  report.mean = mean;
  report.family = family;
  report.side = side;
  report.numeric = admissible;
  if (const auto known = catalog_endpoint(mean, family, side)) {
    report.closed_form = known->value;
    report.closed_form_expression = known->expression;
  }
  const double step = side == Side::Lower ? report.tolerance_used : -report.tolerance_used;
  report.witness_t = witness_on_target(target, family, report.numeric + step, side, options);
  return report;
}

std::optional<ClosedForm> catalog_endpoint(const MeanKind& mean, Family family, Side side) {
  const bool lower = side == Side::Lower;
  const double log_pi = std::log(kPi);
  if (family == Family::Lehmer) {
    if (mean.tag == MeanTag::SecondSeiffert)
      return lower ? ClosedForm{"0", 0.0} : ClosedForm{"1/3", 1.0 / 3.0};
    return std::nullopt;
  }
  switch (mean.tag) {
    case MeanTag::SandorYang:
      return lower ? ClosedForm{"4*log(2)/(4+2*log(2)-pi)", closed_form_p0()}
                   : ClosedForm{"4/3", 4.0 / 3.0};
    case MeanTag::SecondSeiffert:
      return lower ? ClosedForm{"log(2)/(log(pi)-log(2))", kLn2 / (log_pi - kLn2)}
                   : ClosedForm{"5/3", 5.0 / 3.0};
    case MeanTag::Logarithmic:
      return lower ? ClosedForm{"0", 0.0} : ClosedForm{"1/3", 1.0 / 3.0};
    case MeanTag::Identric:
      return lower ? ClosedForm{"2/3", 2.0 / 3.0} : ClosedForm{"log(2)", kLn2};
    case MeanTag::FirstSeiffert:
      return lower ? ClosedForm{"log(2)/log(pi)", kLn2 / log_pi}
                   : ClosedForm{"2/3", 2.0 / 3.0};
    case MeanTag::Toader:
      return lower ? ClosedForm{"3/2", 1.5}
                   : ClosedForm{"log(2)/(log(pi)-log(2))", kLn2 / (log_pi - kLn2)};
    case MeanTag::NeumanSandor:
      return lower ? ClosedForm{"log(2)/log(2*log(1+sqrt(2)))",
                                kLn2 / std::log(2.0 * std::log(1.0 + std::sqrt(2.0)))}
                   : ClosedForm{"4/3", 4.0 / 3.0};
    case MeanTag::Yang:
      return lower ? ClosedForm{"2*log(2)/(2*log(pi)-log(2))", 2.0 * kLn2 / (2.0 * log_pi - kLn2)}
                   : ClosedForm{"4/3", 4.0 / 3.0};
    case MeanTag::Sandor:
      return lower ? ClosedForm{"1/3", 1.0 / 3.0}
                   : ClosedForm{"log(2)/(1+log(2))", kLn2 / (1.0 + kLn2)};
    default:
      return std::nullopt;
  }
}

std::vector<EndpointReport> literature_endpoints(const SearchOptions& options) {
  constexpr std::array tags = {
      MeanTag::Logarithmic, MeanTag::Identric, MeanTag::FirstSeiffert,
      MeanTag::SecondSeiffert, MeanTag::Toader, MeanTag::NeumanSandor,
      MeanTag::Yang, MeanTag::Sandor,
  };
  std::vector<EndpointReport> reports;
  for (MeanTag tag : tags)
    for (Side side : {Side::Lower, Side::Upper})
      reports.push_back(best_exponent(MeanKind::of(tag), Family::Power, side, options));
  return reports;
}

// ---- chain and corollary checks ---------------------------------------------

bool verify_sandor_yang_between_a_q(const PositivePair& pair) {
  const double t = half_log_ratio(pair);
  if (t == 0.0) return false;
  const double b = log_normalized_mean(MeanKind::of(MeanTag::SandorYang), t);
  return b > log_normalized_mean(MeanKind::of(MeanTag::Arithmetic), t) &&
         b < log_normalized_mean(MeanKind::of(MeanTag::Quadratic), t);
}

std::vector<double> chain_corollary31_margins(const PositivePair& pair) {
  if (pair.equal()) throw std::invalid_argument("the chain is strict only for a != b");
  const double t = half_log_ratio(pair);

  std::vector<double> margins;
  // lower half: l_p M_p / (l_inf max) = e^{x_p} with x_p decreasing in p
  const std::array<double, 4> lower_ps = {3.0, 2.0, 1.5, 4.0 / 3.0};
  double previous = log_power_excess(kInf, t);
  for (double p : lower_ps) {
    const double current = log_power_excess(p, t);
    margins.push_back(current - previous);
    previous = current;
  }
  margins.push_back(log_sandor_yang_excess(t) - previous);

  // B < M_{4/3}
  margins.push_back(-F({t, 4.0 / 3.0}));

  // upper half of power means, then max
  const std::array<double, 4> upper_ps = {4.0 / 3.0, 1.5, 2.0, 3.0};
  for (std::size_t i = 0; i + 1 < upper_ps.size(); ++i)
    margins.push_back(log_normalized_mean(MeanKind::power(upper_ps[i + 1]), t) -
                      log_normalized_mean(MeanKind::power(upper_ps[i]), t));
  margins.push_back(t - log_normalized_mean(MeanKind::power(3.0), t));
  return margins;
}

bool verify_chain_corollary31(const PositivePair& pair) {
  const auto margins = chain_corollary31_margins(pair);
  return std::all_of(margins.begin(), margins.end(), [](double m) { return m > 0.0; });
}

bool Corollary34Check::all() const {
  return std::fabs(t_over_lehmer_third_at_40 - 2.0 / kPi) <= 1e-6 &&
         std::fabs(t_over_lehmer_zero_at_40 - 4.0 / kPi) <= 1e-6 && lower_holds &&
         upper_holds && power_lower_holds && power_above_lehmer_holds;
}

Corollary34Check verify_corollary34(const SearchOptions& options) {
  Corollary34Check check;
  const MeanKind t_mean = MeanKind::of(MeanTag::SecondSeiffert);
  const double log_t40 = log_normalized_mean(t_mean, 40.0);
  check.t_over_lehmer_third_at_40 =
      std::exp(log_t40 - log_normalized_mean(MeanKind::lehmer(1.0 / 3.0), 40.0));
  check.t_over_lehmer_zero_at_40 =
      std::exp(log_t40 - log_normalized_mean(MeanKind::lehmer(0.0), 40.0));

  check.lower_holds = check.upper_holds = true;
  check.power_lower_holds = check.power_above_lehmer_holds = true;
  for (double t : log_grid(options.grid_min, options.grid_max, options.grid_points)) {
    const double ex_t = second_seiffert_excess(t);
    const double ex_l13 = lehmer_third_excess(t);
    // x_{5/3} = log((2^{8/5}/pi) M_{5/3} / max) - log(2/pi)
    const double x53 = 0.6 * std::log1p(std::exp(-10.0 * t / 3.0));
    const double u = std::exp(-2.0 * t);
    check.lower_holds = check.lower_holds && ex_t - ex_l13 > 0.0;
    check.upper_holds = check.upper_holds && std::log1p(u) - ex_t > 0.0;
    check.power_lower_holds = check.power_lower_holds && ex_t - x53 > 0.0;
    check.power_above_lehmer_holds = check.power_above_lehmer_holds && x53 - ex_l13 > 0.0;
  }
  return check;
}

}  // namespace meanbounds
