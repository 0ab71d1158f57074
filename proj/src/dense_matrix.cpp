#include "vertexion/dense_matrix.hpp"

#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

int bit_at(std::size_t index, int factor, int factors) {
  return static_cast<int>((index >> (factors - 1 - factor)) & 1U);
}

void check_factor(int factor, int factors) {
  if (factor < 0 || factor >= factors) throw IndexOutOfRange("tensor factor " + std::to_string(factor) + " out of range");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  const std::size_t n = lhs.dim_;
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

DenseMatrix embed(const Op4& op, int first, int second, int factors) {
  check_factor(first, factors);
  check_factor(second, factors);
  if (first == second) throw IndexOutOfRange("two-site operator needs distinct factors");
  const std::size_t dim = std::size_t{1} << factors;
  const std::size_t mask = (std::size_t{1} << (factors - 1 - first)) | (std::size_t{1} << (factors - 1 - second));
  DenseMatrix m(dim);
  for (std::size_t out = 0; out < dim; ++out) {
    for (std::size_t in = 0; in < dim; ++in) {
      if ((out & ~mask) != (in & ~mask)) continue;
      const auto row = static_cast<std::size_t>(bit_at(out, first, factors) * 2 + bit_at(out, second, factors));
      const auto col = static_cast<std::size_t>(bit_at(in, first, factors) * 2 + bit_at(in, second, factors));
      m(out, in) = op[row * 4 + col];
    }
  }
  return m;
}

DenseMatrix embed(const Op2& op, int site, int factors) {
  check_factor(site, factors);
  const std::size_t dim = std::size_t{1} << factors;
  const std::size_t mask = std::size_t{1} << (factors - 1 - site);
  DenseMatrix m(dim);
  for (std::size_t out = 0; out < dim; ++out) {
    for (std::size_t in = 0; in < dim; ++in) {
      if ((out & ~mask) != (in & ~mask)) continue;
      m(out, in) = op[static_cast<std::size_t>(bit_at(out, site, factors) * 2 + bit_at(in, site, factors))];
    }
  }
  return m;
}

std::optional<std::pair<Scalar, Scalar>> OperatorIdentity::first_mismatch() const {
  for (std::size_t i = 0; i < lhs.dim(); ++i) {
    for (std::size_t j = 0; j < lhs.dim(); ++j) {
      if (lhs(i, j) != rhs(i, j)) return std::pair{lhs(i, j), rhs(i, j)};
    }
  }
  return std::nullopt;
}

}  // namespace vertexion
