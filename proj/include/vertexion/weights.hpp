#pragma once

#include <array>
#include <cstdint>

#include "vertexion/scalar.hpp"

namespace vertexion {

/// Local spin state: up is |0>, down is |1>.
enum class Spin : std::uint8_t { up = 0, down = 1 };

constexpr int bit(Spin s) { return static_cast<int>(s); }
constexpr Spin spin_of(int b) { return b == 0 ? Spin::up : Spin::down; }
inline constexpr std::array<Spin, 2> kSpins{Spin::up, Spin::down};

/// Quantum-group parameter of the bulk R-matrix.
struct RParams {
  Scalar t;
};

/// Boundary parameters of the triangular K-matrix.
struct KParams {
  Scalar A;
  Scalar B;
};

/*
 * One site's six-tuple (a, b, c, d, e, f) of the generalized L-operator.
 *
 * make() enforces cd + af = 0 and tcd + be = 0 at the given t, so code
 * downstream of it never sees an invalid tuple. unchecked() skips the check
 * and exists for fault injection.
 */
class LSiteParams {
 public:
  static LSiteParams make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f, const Scalar& t);
  static LSiteParams unchecked(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f);

  /// a = 1, b = -t, c = d = e = 1, f = -1: the L-operator reduces to R.
  static LSiteParams six_vertex(const Scalar& t);

  [[nodiscard]] bool satisfies_constraints(const Scalar& t) const;

  [[nodiscard]] const Scalar& a() const { return a_; }
  [[nodiscard]] const Scalar& b() const { return b_; }
  [[nodiscard]] const Scalar& c() const { return c_; }
  [[nodiscard]] const Scalar& d() const { return d_; }
  [[nodiscard]] const Scalar& e() const { return e_; }
  [[nodiscard]] const Scalar& f() const { return f_; }

 private:
  LSiteParams(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f);

  Scalar a_, b_, c_, d_, e_, f_;
};

/// 2x2 operator, row-major: entry [out * 2 + in].
using Op2 = std::array<Scalar, 4>;
/// Operator on W_first (x) W_second, row-major; the first factor is the high bit:
/// entry [(out_first * 2 + out_second) * 4 + in_first * 2 + in_second].
using Op4 = std::array<Scalar, 16>;

constexpr std::size_t op4_index(Spin gamma, Spin delta, Spin alpha, Spin beta) {
  return static_cast<std::size_t>((bit(gamma) * 2 + bit(delta)) * 4 + bit(alpha) * 2 + bit(beta));
}

/// <gamma|<delta| R(u, w) |alpha>|beta>; zero unless alpha + beta = gamma + delta.
Scalar r_element(Spin gamma, Spin delta, Spin alpha, Spin beta, const Scalar& u, const Scalar& w, const RParams& p);

/// <gamma| K(u) |alpha>. Throws DivisionByZero when u = 0.
Scalar k_element(Spin gamma, Spin alpha, const Scalar& u, const KParams& k);

/// <gamma|<delta| L(u, w) |alpha>|beta> for one site's parameters.
Scalar l_element(Spin gamma, Spin delta, Spin alpha, Spin beta, const Scalar& u, const Scalar& w,
                 const LSiteParams& s, const RParams& p);

Op4 r_matrix(const Scalar& u, const Scalar& w, const RParams& p);
Op2 k_matrix(const Scalar& u, const KParams& k);
Op4 l_matrix(const Scalar& u, const Scalar& w, const LSiteParams& s, const RParams& p);

}  // namespace vertexion
