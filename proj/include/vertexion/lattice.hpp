#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vertexion/relations.hpp"
#include "vertexion/scalar.hpp"
#include "vertexion/weights.hpp"

namespace vertexion {

/// Dense amplitudes over 2^L spin configurations; tensor factor 0 is the most significant bit.
class FockVector {
 public:
  explicit FockVector(int sites);

  /// All spins up, amplitude 1.
  static FockVector vacuum(int sites);

  [[nodiscard]] int sites() const { return sites_; }
  [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }
  [[nodiscard]] std::span<const Scalar> amplitudes() const { return amplitudes_; }
  Scalar& operator[](std::size_t index) { return amplitudes_[index]; }
  const Scalar& operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Spin at tensor factor `site` in basis state `index`.
  [[nodiscard]] Spin spin_at(std::size_t index, int site) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  int sites_;
  std::vector<Scalar> amplitudes_;
};

/// Applies `op` with `site_a` in its first slot and `site_b` in its second; identity elsewhere.
/// Throws IndexOutOfRange for bad or equal sites.
FockVector apply_two_site(const Op4& op, int site_a, int site_b, const FockVector& v);

FockVector apply_one_site(const Op2& op, int site, const FockVector& v);

/// Down-spin positions 1 <= x_1 < ... < x_m <= N.
class SpinConfig {
 public:
  /// Throws std::invalid_argument unless positions are strictly increasing within 1..N.
  static SpinConfig make(int N, std::vector<int> positions);

  /// Every configuration with m down spins among N sites, in lexicographic order.
  static std::vector<SpinConfig> all(int N, int m);

  [[nodiscard]] int N() const { return N_; }
  [[nodiscard]] int m() const { return static_cast<int>(positions_.size()); }
  [[nodiscard]] const std::vector<int>& positions() const { return positions_; }

  /// x_m = N (a down spin on the last site).
  [[nodiscard]] bool occupies_last_site() const { return !positions_.empty() && positions_.back() == N_; }

  /// Basis index inside a 2^N vector over sites 1..N.
  [[nodiscard]] std::size_t basis_index() const;

  /// Same positions viewed on N - 1 sites; requires !occupies_last_site().
  [[nodiscard]] SpinConfig without_last_site() const;
  /// Drops x_m and the last site; requires occupies_last_site().
  [[nodiscard]] SpinConfig without_last_spin() const;

  /// Positions joined with '-', empty for m = 0.
  [[nodiscard]] std::string dashed() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  SpinConfig(int N, std::vector<int> positions) : N_(N), positions_(std::move(positions)) {}

  int N_ = 0;
  std::vector<int> positions_;
};

/*
 * Six-vertex lattice with triangular boundary: n rows with spectral
 * parameters u, N columns with parameters w.
 *
 * Sizes may be zero; an empty lattice has amplitude 1 on the vacuum.
 */
struct TriangularModel {
  RParams r;
  KParams k;
  std::vector<Scalar> u;
  std::vector<Scalar> w;

  [[nodiscard]] int n() const { return static_cast<int>(u.size()); }
  [[nodiscard]] int N() const { return static_cast<int>(w.size()); }
};

/// Ordinary lattice built from per-column L-operators.
struct OrdinaryModel {
  RParams r;
  std::vector<LSiteParams> sites;
  std::vector<Scalar> u;
  std::vector<Scalar> w;

  [[nodiscard]] int n() const { return static_cast<int>(u.size()); }
  [[nodiscard]] int N() const { return static_cast<int>(w.size()); }

  /// Throws ConstraintViolation on a bad site, std::invalid_argument on size mismatch.
  void validate() const;
};

/*
 * Full 2^(n+N) state T_1 ... T_n |Omega> before projecting the auxiliary rows.
 *
 * Factor order is W_{-n}, ..., W_{-1}, W_1, ..., W_N. T_n acts first. Inside
 * T_j the order of application is K_{-j}(u_j), then R_{-j,-k}(u_j u_k, 1) for
 * k = j-1 down to 1, then R_{-j,k}(u_j, w_k) for k = 1..N.
 *
 * `boundary` replaces the K-matrix when set (fault injection).
 */
FockVector triangular_full_state(const TriangularModel& model, const BoundaryMatrixFn& boundary = {});

/// <0^n| projection of the full state onto W_1 (x) ... (x) W_N.
FockVector triangular_state_vector(const TriangularModel& model, const BoundaryMatrixFn& boundary = {});

/// <x_1 ... x_m | Psi>. Any m is accepted, including m > n.
Scalar wavefunction_triangular(const TriangularModel& model, const SpinConfig& x,
                               const BoundaryMatrixFn& boundary = {});

/// <0^n 1^N| T_1 ... T_n |Omega>, read straight off the unprojected state.
Scalar domain_wall_Z(const TriangularModel& model, const BoundaryMatrixFn& boundary = {});

/// B(u) = <0|_a L_aN(u, w_N) ... L_a1(u, w_1) |1>_a applied to a state on V_1 ... V_N.
FockVector apply_b_operator(const OrdinaryModel& model, const Scalar& u, const FockVector& state);

/// B(u_1) ... B(u_n) |Omega>_N.
FockVector ordinary_state_vector(const OrdinaryModel& model);

/// <x_1 ... x_m | Phi>; zero whenever m != n.
Scalar ordinary_wavefunction(const OrdinaryModel& model, const SpinConfig& x);

}  // namespace vertexion
