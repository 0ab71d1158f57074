#include "vertexion/weights.hpp"

#include "vertexion/errors.hpp"

namespace vertexion {

LSiteParams::LSiteParams(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), e_(std::move(e)), f_(std::move(f)) {}

LSiteParams LSiteParams::make(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f, const Scalar& t) {
  LSiteParams s(std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f));
  if (!s.satisfies_constraints(t)) {
    throw ConstraintViolation("L-operator parameters violate cd + af = 0, tcd + be = 0 at t = " + t.str() +
                              " (a=" + s.a_.str() + " b=" + s.b_.str() + " c=" + s.c_.str() + " d=" + s.d_.str() +
                              " e=" + s.e_.str() + " f=" + s.f_.str() + ")");
  }
  return s;
}

LSiteParams LSiteParams::unchecked(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f) {
  return LSiteParams(std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f));
}

LSiteParams LSiteParams::six_vertex(const Scalar& t) { return make(1, -t, 1, 1, 1, -1, t); }

bool LSiteParams::satisfies_constraints(const Scalar& t) const {
  return (c_ * d_ + a_ * f_).is_zero() && (t * c_ * d_ + b_ * e_).is_zero();
}

Scalar r_element(Spin gamma, Spin delta, Spin alpha, Spin beta, const Scalar& u, const Scalar& w, const RParams& p) {
  const Scalar& t = p.t;
  if (bit(alpha) + bit(beta) != bit(gamma) + bit(delta)) return {};
  if (alpha == beta) return u - t * w;
  // one down spin among the pair
  if (gamma == Spin::up && alpha == Spin::up) return t * (u - w);
  if (gamma == Spin::up && alpha == Spin::down) return (1 - t) * u;
  if (gamma == Spin::down && alpha == Spin::up) return (1 - t) * w;
  return u - w;
}

Scalar k_element(Spin gamma, Spin alpha, const Scalar& u, const KParams& k) {
  if (gamma == Spin::up) return alpha == Spin::up ? k.B * u - k.A : Scalar{};
  const Scalar inv = u.inverse();
  return alpha == Spin::down ? k.B * inv - k.A : u - inv;
}

Scalar l_element(Spin gamma, Spin delta, Spin alpha, Spin beta, const Scalar& u, const Scalar& w,
                 const LSiteParams& s, const RParams& p) {
  const Scalar& t = p.t;
  if (bit(alpha) + bit(beta) != bit(gamma) + bit(delta)) return {};
  if (alpha == Spin::up && beta == Spin::up) return s.a() * u + s.b() * w;
  if (alpha == Spin::down && beta == Spin::down) return s.e() * u + s.f() * t * w;
  if (gamma == Spin::up && alpha == Spin::up) return s.a() * t * u + s.b() * w;
  if (gamma == Spin::up && alpha == Spin::down) return (1 - t) * s.c() * u;
  if (gamma == Spin::down && alpha == Spin::up) return (1 - t) * s.d() * w;
  return s.e() * u + s.f() * w;
}

Op4 r_matrix(const Scalar& u, const Scalar& w, const RParams& p) {
  Op4 op;
  for (Spin g : kSpins)
    for (Spin d : kSpins)
      for (Spin a : kSpins)
        for (Spin b : kSpins) op[op4_index(g, d, a, b)] = r_element(g, d, a, b, u, w, p);
  return op;
}

Op2 k_matrix(const Scalar& u, const KParams& k) {
  Op2 op;
  for (Spin g : kSpins)
    for (Spin a : kSpins) op[static_cast<std::size_t>(bit(g) * 2 + bit(a))] = k_element(g, a, u, k);
  return op;
}

Op4 l_matrix(const Scalar& u, const Scalar& w, const LSiteParams& s, const RParams& p) {
  Op4 op;
  for (Spin g : kSpins)
    for (Spin d : kSpins)
      for (Spin a : kSpins)
        for (Spin b : kSpins) op[op4_index(g, d, a, b)] = l_element(g, d, a, b, u, w, s, p);
  return op;
}

}  // namespace vertexion
