#include "vertexion/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

std::size_t site_mask(int site, int sites) { return std::size_t{1} << (sites - 1 - site); }

void check_site(int site, int sites) {
  if (site < 0 || site >= sites) {
    throw IndexOutOfRange("site " + std::to_string(site) + " outside 0.." + std::to_string(sites - 1));
  }
}

void next_combination_all(int N, int m, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int p = start; p <= N; ++p) {
    current.push_back(p);
    next_combination_all(N, m, p + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

FockVector::FockVector(int sites) : sites_(sites), amplitudes_(std::size_t{1} << sites) {
  if (sites < 0 || sites > 30) throw std::invalid_argument("unsupported site count " + std::to_string(sites));
}

FockVector FockVector::vacuum(int sites) {
  FockVector v(sites);
  v[0] = 1;
  return v;
}

Spin FockVector::spin_at(std::size_t index, int site) const {
  return (index & site_mask(site, sites_)) != 0 ? Spin::down : Spin::up;
}

FockVector apply_two_site(const Op4& op, int site_a, int site_b, const FockVector& v) {
  const int L = v.sites();
  check_site(site_a, L);
  check_site(site_b, L);
  if (site_a == site_b) throw IndexOutOfRange("two-site operator needs distinct sites");
  const std::size_t ma = site_mask(site_a, L);
  const std::size_t mb = site_mask(site_b, L);
  const std::array<std::size_t, 4> offsets{0, mb, ma, ma | mb};  // local index a*2 + b
  FockVector out(L);
  for (std::size_t base = 0; base < v.size(); ++base) {
    if ((base & (ma | mb)) != 0) continue;
    for (std::size_t in = 0; in < 4; ++in) {
      const Scalar& amp = v[base | offsets[in]];
      if (amp.is_zero()) continue;
      for (std::size_t o = 0; o < 4; ++o) {
        const Scalar& element = op[o * 4 + in];
        if (!element.is_zero()) out[base | offsets[o]] += element * amp;
      }
    }
  }
  return out;
}

FockVector apply_one_site(const Op2& op, int site, const FockVector& v) {
  const int L = v.sites();
  check_site(site, L);
  const std::size_t m = site_mask(site, L);
  FockVector out(L);
  for (std::size_t base = 0; base < v.size(); ++base) {
    if ((base & m) != 0) continue;
    for (std::size_t in = 0; in < 2; ++in) {
      const Scalar& amp = v[base | (in != 0 ? m : 0)];
      if (amp.is_zero()) continue;
      for (std::size_t o = 0; o < 2; ++o) {
        const Scalar& element = op[o * 2 + in];
        if (!element.is_zero()) out[base | (o != 0 ? m : 0)] += element * amp;
      }
    }
  }
  return out;
}

SpinConfig SpinConfig::make(int N, std::vector<int> positions) {
  if (N < 0) throw std::invalid_argument("negative site count");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > N) {
      throw std::invalid_argument("down-spin position " + std::to_string(positions[i]) + " outside 1.." +
                                  std::to_string(N));
    }
    if (i > 0 && positions[i] <= positions[i - 1]) throw std::invalid_argument("positions must strictly increase");
  }
  return SpinConfig(N, std::move(positions));
}

std::vector<SpinConfig> SpinConfig::all(int N, int m) {
  std::vector<std::vector<int>> combos;
  std::vector<int> current;
  if (m >= 0 && m <= N) next_combination_all(N, m, 1, current, combos);
  std::vector<SpinConfig> out;
  out.reserve(combos.size());
  for (auto& c : combos) out.push_back(SpinConfig(N, std::move(c)));
  return out;
}

std::size_t SpinConfig::basis_index() const {
  std::size_t index = 0;
  for (int x : positions_) index |= std::size_t{1} << (N_ - x);
  return index;
}

SpinConfig SpinConfig::without_last_site() const {
  if (N_ == 0 || occupies_last_site()) throw std::logic_error("last site is occupied");
  return SpinConfig(N_ - 1, positions_);
}

SpinConfig SpinConfig::without_last_spin() const {
  if (!occupies_last_site()) throw std::logic_error("last site is not occupied");
  return SpinConfig(N_ - 1, std::vector<int>(positions_.begin(), positions_.end() - 1));
}

std::string SpinConfig::dashed() const {
  std::string s;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i > 0) s += '-';
    s += std::to_string(positions_[i]);
  }
  return s;
}

void OrdinaryModel::validate() const {
  if (sites.size() != w.size()) throw std::invalid_argument("one L-operator site per column required");
  for (std::size_t j = 0; j < sites.size(); ++j) {
    if (!sites[j].satisfies_constraints(r.t)) {
      throw ConstraintViolation("site " + std::to_string(j + 1) + " violates cd + af = 0, tcd + be = 0");
    }
  }
}

FockVector triangular_full_state(const TriangularModel& model, const BoundaryMatrixFn& boundary) {
  const int n = model.n();
  const int N = model.N();
  const auto aux = [n](int j) { return n - j; };         // W_{-j}
  const auto column = [n](int k) { return n + k - 1; };  // W_k
  const BoundaryMatrixFn k_of =
      boundary ? boundary : BoundaryMatrixFn([&model](const Scalar& x) { return k_matrix(x, model.k); });

  FockVector state = FockVector::vacuum(n + N);
  for (int j = n; j >= 1; --j) {
    const Scalar& uj = model.u[static_cast<std::size_t>(j - 1)];
    state = apply_one_site(k_of(uj), aux(j), state);
    for (int k = j - 1; k >= 1; --k) {
      state = apply_two_site(r_matrix(uj * model.u[static_cast<std::size_t>(k - 1)], 1, model.r), aux(j), aux(k), state);
    }
    for (int k = 1; k <= N; ++k) {
      state = apply_two_site(r_matrix(uj, model.w[static_cast<std::size_t>(k - 1)], model.r), aux(j), column(k), state);
    }
  }
  return state;
}

FockVector triangular_state_vector(const TriangularModel& model, const BoundaryMatrixFn& boundary) {
  const FockVector full = triangular_full_state(model, boundary);
  // auxiliary factors are the high bits, so <0^n| keeps the leading block
  FockVector projected(model.N());
  std::copy_n(full.amplitudes().begin(), projected.size(), &projected[0]);
  return projected;
}

Scalar wavefunction_triangular(const TriangularModel& model, const SpinConfig& x, const BoundaryMatrixFn& boundary) {
  if (x.N() != model.N()) throw std::invalid_argument("configuration and model disagree on N");
  return triangular_state_vector(model, boundary)[x.basis_index()];
}

Scalar domain_wall_Z(const TriangularModel& model, const BoundaryMatrixFn& boundary) {
  const FockVector full = triangular_full_state(model, boundary);
  std::size_t index = 0;
  for (int k = 1; k <= model.N(); ++k) index |= site_mask(model.n() + k - 1, full.sites());
  return full[index];
}

FockVector apply_b_operator(const OrdinaryModel& model, const Scalar& u, const FockVector& state) {
  const int N = model.N();
  if (state.sites() != N) throw std::invalid_argument("state and model disagree on N");
  // auxiliary space is factor 0, column k is factor k
  FockVector extended(N + 1);
  const std::size_t aux_down = std::size_t{1} << N;
  for (std::size_t i = 0; i < state.size(); ++i) extended[aux_down | i] = state[i];
  for (int k = 1; k <= N; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    extended = apply_two_site(l_matrix(u, model.w[idx], model.sites[idx], model.r), 0, k, extended);
  }
  FockVector out(N);
  std::copy_n(extended.amplitudes().begin(), out.size(), &out[0]);
  return out;
}

FockVector ordinary_state_vector(const OrdinaryModel& model) {
  model.validate();
  FockVector state = FockVector::vacuum(model.N());
  for (int j = model.n(); j >= 1; --j) state = apply_b_operator(model, model.u[static_cast<std::size_t>(j - 1)], state);
  return state;
}

Scalar ordinary_wavefunction(const OrdinaryModel& model, const SpinConfig& x) {
  if (x.N() != model.N()) throw std::invalid_argument("configuration and model disagree on N");
  return ordinary_state_vector(model)[x.basis_index()];
}

}  // namespace vertexion
