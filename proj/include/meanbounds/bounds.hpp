#pragma once

// Sharp power-mean and Lehmer-mean bounds for the bivariate means, together
// with the constants that make them sharp.
//
// A comparison "M_p <= K" (lower side) or "K <= M_p" (upper side) is decided
// by three pieces of evidence: the sign of log K - log M_p on a log-spaced t
// grid, the leading t -> 0+ behaviour of both sides, and their t -> inf
// asymptotes. Best exponents come from bisecting the parameter against that
// predicate, which is monotone because M_p and L_p increase with p.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "meanbounds/means.hpp"

namespace meanbounds {

enum class Family { Power, Lehmer };
enum class Side { Lower, Upper };

std::string to_string(Family family);
std::string to_string(Side side);
Family parse_family(std::string_view text);
Side parse_side(std::string_view text);

/// M_p or L_p.
MeanKind family_member(Family family, double param);

struct EndpointReport {
  MeanKind mean;
  Family family = Family::Power;
  Side side = Side::Lower;
  std::optional<double> closed_form;
  std::string closed_form_expression;
  double numeric = 0.0;
  /// Grid point where the parameter moved tolerance_used past `numeric`
  /// (into the inadmissible range) breaks the inequality.
  std::optional<double> witness_t;
  double tolerance_used = 1e-3;

  bool within_tolerance() const;
};

struct SearchOptions {
  double grid_min = 1e-6;
  double grid_max = 50.0;
  std::size_t grid_points = 10000;
  double window_min = -10.0;
  double window_max = 10.0;
  int iterations = 60;
  /// Log-gaps within this distance of zero count as holding.
  double tie_tolerance = 1e-13;
  bool analytic_limits = true;
};

/// Leading term of log(K/G) as t -> 0+: coefficient * t^order.
struct SmallTLeading {
  int order = 2;
  double coefficient = 0.0;
};

/// log(K/max) ~ -rate * t + log_coefficient * log t + constant as t -> inf.
struct LargeTAsymptote {
  double rate = 0.0;
  double log_coefficient = 0.0;
  double constant = 0.0;
};

SmallTLeading small_t_leading(const MeanKind& kind);
LargeTAsymptote large_t_asymptote(const MeanKind& kind);

std::vector<double> log_grid(double lo, double hi, std::size_t points);

// ---- constants -------------------------------------------------------------

/// 4 log 2 / (4 + 2 log 2 - pi).
double closed_form_p0();

/// Root in p of the t -> inf value of F(t, p), found by bisection on F
/// evaluated far out in t (independent of closed_form_p0).
double recover_p0_numeric();

/// e^{pi/4 - 1} 2^{1/p - 1/2}; throws std::invalid_argument for p <= 0.
double sharp_lambda(double p);

/// Unique positive root of f1(., p) for 1 < p < 4/3; throws
/// std::domain_error outside that interval, where f1 keeps one sign.
double find_t0(double p);

/// sup over a != b of B(a,b) / M_p(a,b) for p > 0: lambda_p on (0, 1],
/// e^{F(t0, p)} on (1, 4/3), and 1 from 4/3 on.
double sandor_yang_power_ratio_sup(double p);

struct ConstantEntry {
  std::string label;
  std::string expression;
  double value = 0.0;
};

/// p0, lambda_inf, lambda_2, lambda_3/2, lambda_4/3, e^{F(t0,p0)}, 2/pi,
/// 4/pi and 2^{8/5}/pi, each evaluated from its expression at run time.
std::vector<ConstantEntry> sharp_constant_table();

/// The multipliers of the lower half of the Sandor-Yang chain.
std::vector<ConstantEntry> corollary31_table();

// ---- endpoint search -------------------------------------------------------

/// Whether the one-sided comparison between `mean` and the family member
/// with parameter `param` holds for every t.
bool inequality_holds(const MeanKind& mean, Family family, double param, Side side,
                      const SearchOptions& options = {});

/// Grid point of largest violation of the claimed inequality. When the grid
/// shows none, t keeps doubling past the grid end (60 times) and the first
/// failing point is returned; nullopt if that finds nothing either.
std::optional<double> find_witness(const MeanKind& mean, Family family, double param,
                                   Side side, const SearchOptions& options = {});

/// Bisection for the sharp parameter. Throws std::runtime_error when the
/// predicate never holds or always holds on the search window.
EndpointReport best_exponent(const MeanKind& mean, Family family, Side side,
                             const SearchOptions& options = {});

struct ClosedForm {
  std::string expression;
  double value = 0.0;
};

/// Known sharp parameters for the means treated here.
std::optional<ClosedForm> catalog_endpoint(const MeanKind& mean, Family family, Side side);

/// Both power-mean endpoints of L, I, P, T, T*, NS, U and X.
std::vector<EndpointReport> literature_endpoints(const SearchOptions& options = {});

// ---- chain and corollary checks ---------------------------------------------

/// A(a,b) < B(a,b) < Q(a,b).
bool verify_sandor_yang_between_a_q(const PositivePair& pair);

/// Positive margins (log-scale) of the ten adjacent comparisons in
///   l_inf max < l_3 M_3 < l_2 M_2 < l_{3/2} M_{3/2} < l_{4/3} M_{4/3} < B
///   < M_{4/3} < M_{3/2} < M_2 < M_3 < max.
/// The margins of the lower half are differences of log(log(l_p M_p / (l_inf max)))
/// so that they stay resolvable when the chain members agree to far more
/// digits than a double carries. Requires a != b.
std::vector<double> chain_corollary31_margins(const PositivePair& pair);

bool verify_chain_corollary31(const PositivePair& pair);

struct Corollary34Check {
  double t_over_lehmer_third_at_40 = 0.0;  // -> 2/pi
  double t_over_lehmer_zero_at_40 = 0.0;   // -> 4/pi
  bool lower_holds = false;                // (2/pi) L_{1/3} < T
  bool upper_holds = false;                // T < (4/pi) L_0
  bool power_lower_holds = false;          // (2^{8/5}/pi) M_{5/3} < T
  bool power_above_lehmer_holds = false;   // (2^{8/5}/pi) M_{5/3} > (2/pi) L_{1/3}

  bool all() const;
};

Corollary34Check verify_corollary34(const SearchOptions& options = {});

}  // namespace meanbounds
