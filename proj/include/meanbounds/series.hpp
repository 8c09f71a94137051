#pragma once

// Power series whose coefficients are nonnegative up to some index m and
// nonpositive afterwards, with a strictly positive a_m and at least one
// strictly negative tail coefficient. Such a series is positive near 0,
// eventually negative, and crosses zero exactly once on (0, inf).

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace meanbounds {

/// Index m of the single sign change, or nullopt when the pattern
/// "prefix >= 0 ending in a positive a_m, tail <= 0 with a negative entry"
/// does not hold (including the case where no coefficient is positive).
std::optional<std::size_t> detect_sign_change(std::span<const double> coeffs);

/// Stored prefix a_0..a_N of a single-sign-change series.
class CoefficientSeq {
 public:
  /// nullopt when detect_sign_change rejects the coefficients.
  static std::optional<CoefficientSeq> from(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  std::size_t sign_change_index() const noexcept { return sign_change_index_; }

  /// Truncated sum P(t) = sum_k a_k t^k (Horner).
  double evaluate(double t) const;

  /// sum_k |a_k| t^k, the scale against which |P(t)| is judged.
  double magnitude(double t) const;

 private:
  CoefficientSeq(std::vector<double> coeffs, std::size_t m)
      : coeffs_(std::move(coeffs)), sign_change_index_(m) {}

  std::vector<double> coeffs_;
  std::size_t sign_change_index_;
};

/// The unique positive root of the truncated series inside (0, radius].
/// Brackets by doubling from radius * 1e-6, then bisects to relative width
/// 1e-14 (at most 200 steps). Throws std::domain_error when P stays
/// positive on the whole interval.
double series_positive_root(const CoefficientSeq& seq, double radius);

}  // namespace meanbounds
