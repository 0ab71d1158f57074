#pragma once

#include <span>
#include <vector>

#include "vertexion/lattice.hpp"
#include "vertexion/scalar.hpp"
#include "vertexion/weights.hpp"

namespace vertexion {

struct SymfunOptions {
  /// Largest n for which a sum over S_n is attempted (9! = 362880 summands).
  int max_n = 9;
  /// Omit the 1/(n - m)! normalization (fault injection only).
  bool drop_factorial = false;
};

/*
 * Closed form of the triangular-boundary wavefunction:
 *
 *   1/(n-m)! sum_{sigma in S_n}
 *     prod_{j<=m} prod_{k>x_j} (u_sj - t w_k)
 *     prod_{j<k<=m} (t u_sj - u_sk)/(u_sj - u_sk) (u_sj u_sk - 1)
 *     prod_{j>m, all k} (u_sj - t w_k)
 *     prod_{j>m, k<=m} (t u_sj - u_sk)/(u_sj - u_sk) (u_sj u_sk - 1)
 *     prod_{j<=m} prod_{k<x_j} (u_sj - w_k)
 *     prod_{m<j<k} (u_sj u_sk - t)
 *     prod_{j<=m} (1-t)(u_sj^2 - 1)  prod_{j>m} (B u_sj - A)
 *
 * where u_sj = u_{sigma(j)}. Summation is literal over all n! permutations.
 * Requires m <= n and u pairwise distinct (CoincidentVariables otherwise).
 */
Scalar f_triangular(const Scalar& t, const Scalar& A, const Scalar& B, std::span<const Scalar> u,
                    std::span<const Scalar> w, const SpinConfig& x, const SymfunOptions& options = {});

Scalar f_triangular(const TriangularModel& model, const SpinConfig& x, const SymfunOptions& options = {});

/*
 * Closed form of the ordinary wavefunction (m = n):
 *
 *   sum_{sigma in S_n} prod_j prod_{k>x_j} (a_k u_sj + b_k w_k)
 *     prod_{j<k} (t u_sj - u_sk)/(u_sj - u_sk)
 *     prod_j prod_{k<x_j} (e_k u_sj + f_k w_k)  prod_j (1-t) c_{x_j} u_sj
 */
Scalar of_ordinary(const Scalar& t, std::span<const LSiteParams> sites, std::span<const Scalar> u,
                   std::span<const Scalar> w, const SpinConfig& x, const SymfunOptions& options = {});

Scalar of_ordinary(const OrdinaryModel& model, const SpinConfig& x, const SymfunOptions& options = {});

/// Weakly decreasing parts fitting the (N - n) x n frame.
class Partition {
 public:
  /// Throws FrameViolation unless N - n >= parts[0] >= ... >= parts[n-1] >= 0 (n = parts.size()).
  static Partition make(std::vector<int> parts, int N);

  /// Every partition in the frame, ordered by the matching down-spin configurations.
  static std::vector<Partition> all_in_frame(int n, int N);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int n() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int N() const { return N_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::vector<int> parts, int N) : parts_(std::move(parts)), N_(N) {}

  std::vector<int> parts_;
  int N_;
};

/// lambda_j = x_{n-j+1} - n + j - 1. Requires x.m() == n.
Partition x_to_lambda(const SpinConfig& x, int n);

/// Inverse of x_to_lambda.
SpinConfig lambda_to_x(const Partition& lambda);

struct GrothendieckPoint {
  std::vector<Scalar> z;
  Scalar beta;
};

/// det(z_j^{lambda_k + n - k} (1 + beta z_j)^{k-1}) / prod_{j<k} (z_j - z_k).
/// Throws CoincidentVariables if two z coincide.
Scalar grothendieck(const Partition& lambda, const GrothendieckPoint& point);

/// Homogeneous specialization that turns the ordinary symmetric function into a Grothendieck polynomial at t = 0.
struct GrothendieckSpecialization {
  std::vector<LSiteParams> sites;  ///< a = 1, b = t beta, c = d = 1, e = -1/beta, f = -1
  std::vector<Scalar> w;           ///< all 1
  std::vector<Scalar> z;           ///< z_j = -1/beta - 1/u_j
  Scalar prefactor;                ///< (-beta)^{-n(n-1)/2} prod_j u_j^N
};

/// Throws DivisionByZero when beta = 0 or some u_j = 0.
GrothendieckSpecialization grothendieck_specialization(int n, int N, const Scalar& beta, std::span<const Scalar> u,
                                                       const Scalar& t);

/*
 * The ordinary symmetric function at w = 1 under the Grothendieck
 * specialization, rewritten with the u-only prefactor pulled out:
 *
 *   prod_j (1-t) u_j (u_j + t beta)^N / (-u_j/beta - 1)  prod_{j<k} (t u_j - u_k)/(u_j - u_k)
 *   * sum_sigma prod_{j<k, sigma(j) > sigma(k)} (u_sk - t u_sj)/(t u_sk - u_sj)
 *               prod_j ((-u_sj/beta - 1)/(u_sj + t beta))^{x_j}
 */
Scalar of_homogeneous(const Scalar& t, const Scalar& beta, std::span<const Scalar> u, int N, const SpinConfig& x,
                      const SymfunOptions& options = {});

}  // namespace vertexion
