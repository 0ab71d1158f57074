#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vertexion/report.hpp"
#include "vertexion/scalar.hpp"

namespace vertexion {

struct IntRange {
  int lo;
  int hi;
};

/// Which configurations a suite visits and how many random points each gets.
struct SweepSpec {
  IntRange N_range{1, 4};
  IntRange n_range{1, 4};
  std::optional<int> fixed_m;  ///< nullopt: every m in 0..min(n, N)
  int trials_per_point = 5;
  std::uint64_t seed = 7;

  /// Throws std::invalid_argument on an empty range or trials < 1.
  void validate() const;
};

/// Deliberate corruptions used as negative controls.
enum class Fault {
  none,
  non_triangular_boundary,  ///< K-matrix gets <0|K|1> = 1
  dropped_factorial,        ///< closed form loses its 1/(n-m)! factor
  unconstrained_sites,      ///< L-operator sites skip the f solve
};

struct VerifyOptions {
  Fault fault = Fault::none;
  /// Worker count; 0 means VERTEXION_THREADS, else the hardware concurrency.
  unsigned threads = 0;
};

unsigned resolve_thread_count(unsigned requested);

/*
 * Every suite below returns one report per (check, configuration), sorted
 * by report_order, and is a pure function of its arguments: equal inputs
 * give byte-identical serialized reports regardless of thread count.
 */

/// Yang-Baxter, reflection and RLL relations at `points` random parameter points each.
std::vector<CheckReport> verify_algebraic_relations(int points, std::uint64_t seed, const VerifyOptions& options = {});

/// Degree in w_N, u-symmetry, recursion at w_N = u_n/t, factorization, and the two N = 1 evaluations,
/// all on the lattice wavefunction with triangular boundary.
std::vector<CheckReport> verify_triangular_properties(const SweepSpec& spec, const VerifyOptions& options = {});

/// Lattice wavefunction against the permutation-sum closed form for every configuration with m <= n,
/// the domain-wall special case, and the same properties checked on the closed form itself.
std::vector<CheckReport> verify_triangular_closed_form(const SweepSpec& spec, const VerifyOptions& options = {});

/// Properties of the ordinary (B-operator) wavefunction, behind an RLL gate on the sampled sites.
std::vector<CheckReport> verify_ordinary_properties(const SweepSpec& spec, const VerifyOptions& options = {});

/// Ordinary wavefunction against its closed form, B-operator commutativity, and the six-vertex special case.
std::vector<CheckReport> verify_ordinary_closed_form(const SweepSpec& spec, const VerifyOptions& options = {});

/// Ordinary closed form at t = 0 under the homogeneous specialization against the Grothendieck determinant,
/// plus the homogeneous rewriting at generic t. A nullopt beta is redrawn every trial.
std::vector<CheckReport> verify_grothendieck_correspondence(const SweepSpec& spec, std::optional<Scalar> beta,
                                                            const VerifyOptions& options = {});

/// Product rearrangements the closed-form proofs rely on, as standalone identities.
std::vector<CheckReport> verify_proof_identities(const SweepSpec& spec, const VerifyOptions& options = {});

}  // namespace vertexion
