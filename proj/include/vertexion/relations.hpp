#pragma once

#include <functional>

#include "vertexion/dense_matrix.hpp"
#include "vertexion/weights.hpp"

namespace vertexion {

/// Boundary matrix as a function of the spectral parameter.
using BoundaryMatrixFn = std::function<Op2(const Scalar& u)>;

/*
 * Yang-Baxter relation on W_a (x) W_b (x) W_c:
 *   R_ab(u, v) R_ac(u, w) R_bc(v, w) = R_bc(v, w) R_ac(u, w) R_ab(u, v).
 * The R_ac factor on both sides uses `middle`, every other factor `outer`;
 * with middle == outer this is the genuine relation.
 */
OperatorIdentity yang_baxter_sides(const Scalar& u, const Scalar& v, const Scalar& w, const RParams& outer,
                                   const RParams& middle);

bool check_yang_baxter(const Scalar& u, const Scalar& v, const Scalar& w, const RParams& p);

/*
 * Reflection equation on W_a (x) W_b with R(x) meaning R(x, 1):
 *   R_ba(u/w) K_b(u) R_ab(uw) K_a(w) = K_a(w) R_ba(uw) K_b(u) R_ab(u/w).
 * R_ba takes b as its first slot. Throws DivisionByZero if u or w is 0.
 */
OperatorIdentity reflection_sides(const Scalar& u, const Scalar& w, const RParams& p, const BoundaryMatrixFn& boundary);

bool check_reflection(const Scalar& u, const Scalar& w, const RParams& p, const KParams& k);

/// RLL relation on W_a (x) W_b (x) V_j:
///   R_ab(u1, u2) L_aj(u1, w) L_bj(u2, w) = L_bj(u2, w) L_aj(u1, w) R_ab(u1, u2).
OperatorIdentity rll_sides(const Scalar& u1, const Scalar& u2, const Scalar& w, const LSiteParams& s,
                           const RParams& p);

bool check_rll(const Scalar& u1, const Scalar& u2, const Scalar& w, const LSiteParams& s, const RParams& p);

}  // namespace vertexion
