#include "vertexion/interpolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vertexion/errors.hpp"

namespace vertexion {

UnivariateSample::UnivariateSample(std::vector<Point> points) {
  points_.reserve(points.size());
  for (auto& [x, y] : points) add(std::move(x), std::move(y));
}

void UnivariateSample::add(Scalar x, Scalar y) {
  const bool repeated = std::any_of(points_.begin(), points_.end(), [&](const Point& p) { return p.first == x; });
  if (repeated) throw std::invalid_argument("repeated abscissa " + x.str());
  points_.emplace_back(std::move(x), std::move(y));
}

std::vector<Scalar> interpolate(const std::vector<UnivariateSample::Point>& points) {
  const std::size_t count = points.size();
  // Newton divided differences, in place.
  std::vector<Scalar> dd(count);
  for (std::size_t i = 0; i < count; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Horner-style expansion of the Newton form into monomials.
  std::vector<Scalar> coeffs(count);
  for (std::size_t k = count; k-- > 0;) {
    // coeffs <- coeffs * (X - x_k) + dd[k]
    for (std::size_t i = count - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] - points[k].first * coeffs[i];
    coeffs[0] = dd[k] - points[k].first * coeffs[0];
  }
  return coeffs;
}

Scalar evaluate_polynomial(const std::vector<Scalar>& coefficients, const Scalar& x) {
  Scalar acc;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int interpolate_degree(const UnivariateSample& sample, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  const auto needed = static_cast<std::size_t>(max_degree) + 2;
  if (sample.size() < needed) {
    throw std::invalid_argument("need at least " + std::to_string(needed) + " points, got " +
                                std::to_string(sample.size()));
  }
  const auto& pts = sample.points();
  const std::vector<UnivariateSample::Point> head(pts.begin(), pts.begin() + max_degree + 1);
  const auto coeffs = interpolate(head);
  for (std::size_t i = head.size(); i < pts.size(); ++i) {
    const Scalar fitted = evaluate_polynomial(coeffs, pts[i].first);
    if (fitted != pts[i].second) {
      throw InconsistentSample("point x=" + pts[i].first.str() + " has y=" + pts[i].second.str() +
                               " but the degree-" + std::to_string(max_degree) + " fit gives " + fitted.str());
    }
  }
  for (int d = max_degree; d >= 0; --d) {
    if (!coeffs[static_cast<std::size_t>(d)].is_zero()) return d;
  }
  return -1;
}

}  // namespace vertexion
