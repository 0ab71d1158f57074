#include "vertexion/relations.hpp"

namespace vertexion {

OperatorIdentity yang_baxter_sides(const Scalar& u, const Scalar& v, const Scalar& w, const RParams& outer,
                                   const RParams& middle) {
  constexpr int a = 0, b = 1, c = 2, factors = 3;
  const DenseMatrix r_ab = embed(r_matrix(u, v, outer), a, b, factors);
  const DenseMatrix r_ac = embed(r_matrix(u, w, middle), a, c, factors);
  const DenseMatrix r_bc = embed(r_matrix(v, w, outer), b, c, factors);
  return {r_ab * r_ac * r_bc, r_bc * r_ac * r_ab};
}

bool check_yang_baxter(const Scalar& u, const Scalar& v, const Scalar& w, const RParams& p) {
  return yang_baxter_sides(u, v, w, p, p).holds();
}

OperatorIdentity reflection_sides(const Scalar& u, const Scalar& w, const RParams& p, const BoundaryMatrixFn& boundary) {
  constexpr int a = 0, b = 1, factors = 2;
  const Scalar ratio = u / w;
  const Scalar prod = u * w;
  const DenseMatrix k_a = embed(boundary(w), a, factors);
  const DenseMatrix k_b = embed(boundary(u), b, factors);
  const DenseMatrix lhs = embed(r_matrix(ratio, 1, p), b, a, factors) * k_b * embed(r_matrix(prod, 1, p), a, b, factors) * k_a;
  const DenseMatrix rhs = k_a * embed(r_matrix(prod, 1, p), b, a, factors) * k_b * embed(r_matrix(ratio, 1, p), a, b, factors);
  return {lhs, rhs};
}

bool check_reflection(const Scalar& u, const Scalar& w, const RParams& p, const KParams& k) {
  return reflection_sides(u, w, p, [&k](const Scalar& x) { return k_matrix(x, k); }).holds();
}

OperatorIdentity rll_sides(const Scalar& u1, const Scalar& u2, const Scalar& w, const LSiteParams& s,
                           const RParams& p) {
  constexpr int a = 0, b = 1, j = 2, factors = 3;
  const DenseMatrix r_ab = embed(r_matrix(u1, u2, p), a, b, factors);
  const DenseMatrix l_aj = embed(l_matrix(u1, w, s, p), a, j, factors);
  const DenseMatrix l_bj = embed(l_matrix(u2, w, s, p), b, j, factors);
  return {r_ab * l_aj * l_bj, l_bj * l_aj * r_ab};
}

bool check_rll(const Scalar& u1, const Scalar& u2, const Scalar& w, const LSiteParams& s, const RParams& p) {
  return rll_sides(u1, u2, w, s, p).holds();
}

}  // namespace vertexion
