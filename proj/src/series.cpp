#include "meanbounds/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meanbounds {

std::optional<std::size_t> detect_sign_change(std::span<const double> coeffs) {
  std::optional<std::size_t> last_positive;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (std::isnan(coeffs[k])) return std::nullopt;
    if (coeffs[k] > 0.0) last_positive = k;
  }
  if (!last_positive) return std::nullopt;
  const std::size_t m = *last_positive;
  for (std::size_t k = 0; k < m; ++k)
    if (coeffs[k] < 0.0) return std::nullopt;
  bool negative_tail = false;
  for (std::size_t k = m + 1; k < coeffs.size(); ++k)
    if (coeffs[k] < 0.0) negative_tail = true;
  if (!negative_tail) return std::nullopt;
  return m;
}

std::optional<CoefficientSeq> CoefficientSeq::from(std::vector<double> coeffs) {
  const auto m = detect_sign_change(coeffs);
  if (!m) return std::nullopt;
  return CoefficientSeq(std::move(coeffs), *m);
}

double CoefficientSeq::evaluate(double t) const {
  double sum = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * t + *it;
  return sum;
}

double CoefficientSeq::magnitude(double t) const {
  double sum = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * t + std::fabs(*it);
  return sum;
}

double series_positive_root(const CoefficientSeq& seq, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("series_positive_root: radius must be positive");

  double lo = radius * 1e-6;
  // The lowest nonzero coefficient is positive, so P > 0 close enough to 0.
  while (seq.evaluate(lo) <= 0.0 && lo > radius * 1e-300) lo *= 0.5;
  if (seq.evaluate(lo) <= 0.0)
    throw std::domain_error("series_positive_root: P is not positive near 0");

  double hi = lo;
  while (seq.evaluate(hi) > 0.0) {
    if (hi >= radius)
      throw std::domain_error("no sign change of P within radius");
    lo = hi;
    hi = std::min(2.0 * hi, radius);
  }

  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (seq.evaluate(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // whichever endpoint sits closer to the zero
  return std::fabs(seq.evaluate(lo)) < std::fabs(seq.evaluate(hi)) ? lo : hi;
}

}  // namespace meanbounds
