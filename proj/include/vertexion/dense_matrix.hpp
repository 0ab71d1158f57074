#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vertexion/scalar.hpp"
#include "vertexion/weights.hpp"

namespace vertexion {

/*
 * Dense square matrix on a k-fold tensor product of spin spaces.
 *
 * Basis index is the bit string of spins with tensor factor 0 as the most
 * significant bit, so a matrix on W_a (x) W_b (x) W_c has index
 * 4 * s_a + 2 * s_b + s_c.
 */
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> data_;
};

/// Two-site operator acting on factors (first, second) of a `factors`-fold product; identity elsewhere.
/// `first` is the operator's first tensor slot regardless of its position in the product.
DenseMatrix embed(const Op4& op, int first, int second, int factors);

/// One-site operator acting on factor `site`.
DenseMatrix embed(const Op2& op, int site, int factors);

/// Both sides of an operator identity, for exact comparison.
struct OperatorIdentity {
  DenseMatrix lhs;
  DenseMatrix rhs;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
  /// First differing entry in row-major order, as (lhs, rhs).
  [[nodiscard]] std::optional<std::pair<Scalar, Scalar>> first_mismatch() const;
};

}  // namespace vertexion
