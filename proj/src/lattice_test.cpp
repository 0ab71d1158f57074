#include <bit>

#include <gtest/gtest.h>

#include "vertexion/dense_matrix.hpp"
#include "vertexion/errors.hpp"
#include "vertexion/lattice.hpp"
#include "vertexion/random.hpp"

namespace vertexion {
namespace {

FockVector random_vector(ScalarSampler& s, int sites) {
  FockVector v(sites);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.draw();
  return v;
}

FockVector dense_apply(const DenseMatrix& m, const FockVector& v) {
  FockVector out(v.sites());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

TEST(FockVector, VacuumIsAllUp) {
  const FockVector v = FockVector::vacuum(3);
  EXPECT_EQ(v.size(), 8U);
  EXPECT_EQ(v[0], Scalar(1));
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(v[i].is_zero());
  EXPECT_EQ(v.spin_at(0b100, 0), Spin::down);
  EXPECT_EQ(v.spin_at(0b100, 2), Spin::up);
}

TEST(LocalApply, MatchesDenseEmbedding) {
  ScalarSampler s(31);
  for (int trial = 0; trial < 10; ++trial) {
    Op4 op;
    for (auto& e : op) e = s.draw();
    Op2 single;
    for (auto& e : single) e = s.draw();
    const FockVector v = random_vector(s, 3);
    for (auto [a, b] : {std::pair{0, 1}, {1, 0}, {2, 0}, {0, 2}, {1, 2}}) {
      EXPECT_EQ(apply_two_site(op, a, b, v), dense_apply(embed(op, a, b, 3), v));
    }
    for (int site = 0; site < 3; ++site) {
      EXPECT_EQ(apply_one_site(single, site, v), dense_apply(embed(single, site, 3), v));
    }
  }
}

TEST(LocalApply, IdentityLeavesVectorUnchanged) {
  ScalarSampler s(32);
  const FockVector v = random_vector(s, 3);
  Op4 id{};
  for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(i * 4 + i)] = Scalar(1);
  EXPECT_EQ(apply_two_site(id, 0, 2, v), v);
}

TEST(LocalApply, RejectsBadSites) {
  const FockVector v(2);
  Op4 op{};
  EXPECT_THROW(apply_two_site(op, 0, 0, v), IndexOutOfRange);
  EXPECT_THROW(apply_two_site(op, 0, 2, v), IndexOutOfRange);
  EXPECT_THROW(apply_one_site(Op2{}, -1, v), IndexOutOfRange);
}

TEST(SpinConfig, EnumeratesLexicographically) {
  const auto all = SpinConfig::all(4, 2);
  ASSERT_EQ(all.size(), 6U);
  EXPECT_EQ(all.front().positions(), (std::vector<int>{1, 2}));
  EXPECT_EQ(all.back().positions(), (std::vector<int>{3, 4}));
  EXPECT_EQ(SpinConfig::all(3, 0).size(), 1U);
}

TEST(SpinConfig, ValidatesPositions) {
  EXPECT_THROW(SpinConfig::make(3, {2, 2}), std::invalid_argument);
  EXPECT_THROW(SpinConfig::make(3, {0}), std::invalid_argument);
  EXPECT_THROW(SpinConfig::make(3, {4}), std::invalid_argument);
  EXPECT_THROW(SpinConfig::make(3, {3, 1}), std::invalid_argument);
}

TEST(SpinConfig, ShapesAndIndex) {
  const auto x = SpinConfig::make(4, {2, 4});
  EXPECT_TRUE(x.occupies_last_site());
  EXPECT_EQ(x.without_last_spin(), SpinConfig::make(3, {2}));
  EXPECT_EQ(x.dashed(), "2-4");
  EXPECT_EQ(x.basis_index(), 0b0101U);
  const auto y = SpinConfig::make(4, {1, 3});
  EXPECT_EQ(y.without_last_site(), SpinConfig::make(3, {1, 3}));
}

TriangularModel model_of(long t, long A, long B, std::vector<Scalar> u, std::vector<Scalar> w) {
  return TriangularModel{RParams{Scalar(t)}, KParams{Scalar(A), Scalar(B)}, std::move(u), std::move(w)};
}

TEST(TriangularLattice, EmptyLatticeIsVacuum) {
  const auto model = model_of(2, 1, 3, {}, {});
  EXPECT_EQ(wavefunction_triangular(model, SpinConfig::make(0, {})), Scalar(1));
}

TEST(TriangularLattice, SingleRowSingleColumnByHand) {
  ScalarSampler s(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar t = s.draw(), u = s.draw(), w = s.draw();
    const TriangularModel model{RParams{t}, KParams{s.draw(), s.draw()}, {u}, {w}};
    EXPECT_EQ(wavefunction_triangular(model, SpinConfig::make(1, {1})), (1 - t) * (u * u - 1));
  }
  const auto fixed = model_of(2, 5, 7, {Scalar(3)}, {Scalar(11)});
  EXPECT_EQ(wavefunction_triangular(fixed, SpinConfig::make(1, {1})), Scalar(-8));
}

TEST(TriangularLattice, OneRowNoDownSpins) {
  ScalarSampler s(34);
  const Scalar t = s.draw(), u = s.draw(), w1 = s.draw(), w2 = s.draw();
  const KParams k{s.draw(), s.draw()};
  const TriangularModel model{RParams{t}, k, {u}, {w1, w2}};
  EXPECT_EQ(wavefunction_triangular(model, SpinConfig::make(2, {})), (k.B * u - k.A) * (u - t * w1) * (u - t * w2));
}

TEST(TriangularLattice, DomainWallMatchesFullConfiguration) {
  ScalarSampler s(35);
  for (int N = 1; N <= 3; ++N) {
    for (int n = N; n <= 3; ++n) {
      TriangularModel model{RParams{s.draw()}, KParams{s.draw(), s.draw()}, s.draw_distinct(n), s.draw_distinct(N)};
      std::vector<int> all_sites;
      for (int k = 1; k <= N; ++k) all_sites.push_back(k);
      EXPECT_EQ(domain_wall_Z(model), wavefunction_triangular(model, SpinConfig::make(N, all_sites)));
    }
  }
}

OrdinaryModel ordinary_model(ScalarSampler& s, int N, int n) {
  OrdinaryModel model;
  model.r.t = s.draw();
  for (int k = 0; k < N; ++k) {
    const Scalar a = s.draw(), b = s.draw(), c = s.draw(), d = s.draw();
    model.sites.push_back(LSiteParams::make(a, b, c, d, -model.r.t * c * d / b, -c * d / a, model.r.t));
  }
  model.u = s.draw_distinct(static_cast<std::size_t>(n));
  model.w = s.draw_distinct(static_cast<std::size_t>(N));
  return model;
}

TEST(OrdinaryLattice, SingleSiteValue) {
  ScalarSampler s(36);
  for (int trial = 0; trial < 10; ++trial) {
    const OrdinaryModel model = ordinary_model(s, 1, 1);
    EXPECT_EQ(ordinary_wavefunction(model, SpinConfig::make(1, {1})),
              (1 - model.r.t) * model.sites[0].c() * model.u[0]);
  }
}

TEST(OrdinaryLattice, StateLivesInTheNDownSector) {
  ScalarSampler s(37);
  const OrdinaryModel model = ordinary_model(s, 4, 2);
  const FockVector state = ordinary_state_vector(model);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (std::popcount(i) != 2) {
      EXPECT_TRUE(state[i].is_zero()) << i;
    }
  }
  EXPECT_TRUE(ordinary_wavefunction(model, SpinConfig::make(4, {1})).is_zero());
}

TEST(OrdinaryLattice, SizeMismatchRejected) {
  ScalarSampler s(38);
  OrdinaryModel model = ordinary_model(s, 3, 1);
  model.w.pop_back();
  EXPECT_THROW(ordinary_state_vector(model), std::invalid_argument);
}

}  // namespace
}  // namespace vertexion
