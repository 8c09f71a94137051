#pragma once

// Bivariate means of two positive reals, evaluated directly and in the
// half-log-ratio coordinate t = log sqrt(max/min), where every mean becomes
// sqrt(ab) times a function of t alone.

#include <string>
#include <string_view>

namespace meanbounds {

/// Unordered pair of positive finite reals.
class PositivePair {
 public:
  /// Throws std::invalid_argument unless both values are positive and finite.
  PositivePair(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double min() const noexcept { return a_ < b_ ? a_ : b_; }
  double max() const noexcept { return a_ < b_ ? b_ : a_; }
  bool equal() const noexcept { return a_ == b_; }

 private:
  double a_;
  double b_;
};

enum class MeanTag {
  Power,
  Lehmer,
  Harmonic,
  Geometric,
  Arithmetic,
  Quadratic,
  Logarithmic,
  Identric,
  FirstSeiffert,
  Yang,
  Toader,
  NeumanSandor,
  Sandor,
  SecondSeiffert,
  SandorYang,
};

/// A mean together with its parameter (only meaningful for Power and Lehmer).
struct MeanKind {
  MeanTag tag = MeanTag::Arithmetic;
  double param = 0.0;

  static MeanKind power(double p) { return {MeanTag::Power, p}; }
  static MeanKind lehmer(double p) { return {MeanTag::Lehmer, p}; }
  static MeanKind of(MeanTag tag) { return {tag, 0.0}; }

  bool parametric() const noexcept {
    return tag == MeanTag::Power || tag == MeanTag::Lehmer;
  }

  friend bool operator==(const MeanKind&, const MeanKind&) = default;
};

/// CLI-style name: "power:2", "lehmer:0.333333333333333", "sandor-yang", ...
std::string to_string(const MeanKind& kind);

/// Parses the kebab-case names used on the command line. Parameters accept
/// decimals, "a/b" fractions, "inf" and "-inf". Throws std::invalid_argument.
MeanKind parse_mean(std::string_view text);

/// Parses a real number, a fraction "a/b", "inf", "-inf" or the keyword
/// "p0". Throws std::invalid_argument.
double parse_real(std::string_view text);

/// t = log sqrt(max/min); exactly 0 when a == b.
double half_log_ratio(const PositivePair& pair);

/// Evaluates the mean. Throws std::invalid_argument for Lehmer(+-inf) or a
/// NaN parameter. Result lies in [min, max] and equals a when a == b.
double eval_mean(const MeanKind& kind, const PositivePair& pair);

/// The mean of (e^-t, e^t), i.e. normalized so that sqrt(ab) = 1.
double eval_mean_normalized(const MeanKind& kind, double t);

/// log of eval_mean_normalized, accurate relative to its own size for small
/// t (values are O(t^2)) and free of overflow for large t.
double log_normalized_mean(const MeanKind& kind, double t);

/// log M1(a,b) - log M2(a,b), computed in the normalized coordinate so that
/// gaps far below the rounding level of the means themselves keep their sign.
double log_mean_gap(const MeanKind& first, const MeanKind& second,
                    const PositivePair& pair);

/// Toader mean (2/pi) * int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2) via the
/// arithmetic-geometric mean form of the complete elliptic integral E.
double toader_mean(const PositivePair& pair);

/// Same integral by fixed-order Gauss-Legendre quadrature on [0, pi/2].
/// Near full precision while max/min stays below about 20; the integrand's
/// narrow feature near theta = 0 costs digits at intermediate ratios (about
/// 1e-9 relative error with 64 nodes at max/min = 1e3).
double toader_mean_quadrature(const PositivePair& pair, int nodes = 64);

}  // namespace meanbounds
