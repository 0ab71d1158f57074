#pragma once

#include <utility>
#include <vector>

#include "vertexion/scalar.hpp"

namespace vertexion {

/// Sample points of a univariate function with pairwise-distinct abscissae.
class UnivariateSample {
 public:
  using Point = std::pair<Scalar, Scalar>;

  UnivariateSample() = default;
  /// Throws std::invalid_argument on a repeated x.
  explicit UnivariateSample(std::vector<Point> points);

  /// Throws std::invalid_argument on a repeated x.
  void add(Scalar x, Scalar y);

  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point> points_;
};

/// Monomial coefficients (lowest degree first) of the polynomial through `points`.
std::vector<Scalar> interpolate(const std::vector<UnivariateSample::Point>& points);

Scalar evaluate_polynomial(const std::vector<Scalar>& coefficients, const Scalar& x);

/*
 * Exact degree of the polynomial through the first max_degree + 1 points.
 *
 * Every remaining point must lie on that polynomial, otherwise
 * InconsistentSample is thrown: the sampled function is not a polynomial of
 * degree <= max_degree (on this sample). The zero polynomial has degree -1.
 * Requires at least max_degree + 2 points.
 */
int interpolate_degree(const UnivariateSample& sample, int max_degree);

}  // namespace vertexion
