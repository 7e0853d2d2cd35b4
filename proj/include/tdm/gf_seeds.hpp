#pragma once

#include "tdm/algebraic_series.hpp"

namespace tdm::seeds {

/// F_0 = f_0 = (3 - z - sqrt(y))/2, shared by both symmetry classes.
inline AlgebraicSeries planar(int order) {
  TruncSeries a = TruncSeries::from_poly(Poly(std::vector<Rational>{ratio(3, 2), ratio(-1, 2)}, Var::z), order);
  return {a, TruncSeries::constant(ratio(-1, 2), order)};
}

/// F_1^(1) = (1 - 3z - sqrt(y)) / (2y).
inline AlgebraicSeries beta1_first_correction(int order) {
  TruncSeries inv_y = series_inverse(SpectralCurve::y_series(order));
  TruncSeries a = TruncSeries::from_poly(Poly({1, -3}, Var::z), order) * inv_y * ratio(1, 2);
  return {a, inv_y * ratio(-1, 2)};
}

/// f_1 = -(z + 1 + sqrt(y)) / (2 sqrt(y)) = -1/2 - (z + 1) sqrt(y) / (2y).
inline AlgebraicSeries beta1_auxiliary_first(int order) {
  TruncSeries inv_y = series_inverse(SpectralCurve::y_series(order));
  TruncSeries b = TruncSeries::from_poly(Poly({1, 1}, Var::z), order) * inv_y * ratio(-1, 2);
  return {TruncSeries::constant(ratio(-1, 2), order), b};
}

}  // namespace tdm::seeds
