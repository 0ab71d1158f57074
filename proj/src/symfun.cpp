#include "vertexion/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vertexion/determinant.hpp"
#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

void require_distinct(std::span<const Scalar> values, const char* name) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t k = j + 1; k < values.size(); ++k) {
      if (values[j] == values[k]) {
        throw CoincidentVariables(std::string(name) + "_" + std::to_string(j + 1) + " = " + name + "_" +
                                  std::to_string(k + 1) + " = " + values[j].str());
      }
    }
  }
}

void require_size_limit(std::size_t n, const SymfunOptions& options) {
  if (static_cast<int>(n) > options.max_n) {
    throw SizeLimitExceeded("permutation sum over S_" + std::to_string(n) + " exceeds the configured cap " +
                            std::to_string(options.max_n));
  }
}

/// Calls fn(permuted) for each sigma in S_n in lexicographic order, where permuted[j] = values[sigma(j)].
template <typename Fn>
Scalar sum_over_permutations(std::span<const Scalar> values, Fn&& fn) {
  std::vector<std::size_t> sigma(values.size());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<Scalar> permuted(values.size());
  Scalar total;
  do {
    for (std::size_t j = 0; j < sigma.size(); ++j) permuted[j] = values[sigma[j]];
    total += fn(std::span<const Scalar>(permuted), std::span<const std::size_t>(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace

Scalar f_triangular(const Scalar& t, const Scalar& A, const Scalar& B, std::span<const Scalar> u,
                    std::span<const Scalar> w, const SpinConfig& x, const SymfunOptions& options) {
  const std::size_t n = u.size();
  const std::size_t m = static_cast<std::size_t>(x.m());
  const int N = static_cast<int>(w.size());
  if (x.N() != N) throw std::invalid_argument("configuration and w disagree on N");
  if (m > n) throw std::invalid_argument("closed form needs m <= n");
  require_size_limit(n, options);
  require_distinct(u, "u");
  const auto& pos = x.positions();
  const auto wk = [&w](int k) -> const Scalar& { return w[static_cast<std::size_t>(k - 1)]; };

  const Scalar total = sum_over_permutations(u, [&](std::span<const Scalar> us, std::span<const std::size_t>) {
    Scalar term{1};
    for (std::size_t j = 0; j < m; ++j) {
      for (int k = pos[j] + 1; k <= N; ++k) term *= us[j] - t * wk(k);
      for (int k = 1; k < pos[j]; ++k) term *= us[j] - wk(k);
      term *= (1 - t) * (us[j] * us[j] - 1);
      for (std::size_t k = j + 1; k < m; ++k) {
        term *= (t * us[j] - us[k]) * (us[j] * us[k] - 1) / (us[j] - us[k]);
      }
    }
    for (std::size_t j = m; j < n; ++j) {
      for (int k = 1; k <= N; ++k) term *= us[j] - t * wk(k);
      for (std::size_t k = 0; k < m; ++k) {
        term *= (t * us[j] - us[k]) * (us[j] * us[k] - 1) / (us[j] - us[k]);
      }
      for (std::size_t k = j + 1; k < n; ++k) term *= us[j] * us[k] - t;
      term *= B * us[j] - A;
    }
    return term;
  });
  if (options.drop_factorial) return total;
  return total / factorial(static_cast<int>(n - m));
}

Scalar f_triangular(const TriangularModel& model, const SpinConfig& x, const SymfunOptions& options) {
  return f_triangular(model.r.t, model.k.A, model.k.B, model.u, model.w, x, options);
}

Scalar of_ordinary(const Scalar& t, std::span<const LSiteParams> sites, std::span<const Scalar> u,
                   std::span<const Scalar> w, const SpinConfig& x, const SymfunOptions& options) {
  const std::size_t n = u.size();
  const int N = static_cast<int>(w.size());
  if (sites.size() != w.size()) throw std::invalid_argument("one L-operator site per column required");
  if (x.N() != N) throw std::invalid_argument("configuration and w disagree on N");
  if (static_cast<std::size_t>(x.m()) != n) throw std::invalid_argument("ordinary closed form needs m = n");
  for (std::size_t j = 0; j < sites.size(); ++j) {
    if (!sites[j].satisfies_constraints(t)) {
      throw ConstraintViolation("site " + std::to_string(j + 1) + " violates cd + af = 0, tcd + be = 0");
    }
  }
  require_size_limit(n, options);
  require_distinct(u, "u");
  const auto& pos = x.positions();
  const auto site = [&sites](int k) -> const LSiteParams& { return sites[static_cast<std::size_t>(k - 1)]; };
  const auto wk = [&w](int k) -> const Scalar& { return w[static_cast<std::size_t>(k - 1)]; };

  return sum_over_permutations(u, [&](std::span<const Scalar> us, std::span<const std::size_t>) {
    Scalar term{1};
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = pos[j] + 1; k <= N; ++k) term *= site(k).a() * us[j] + site(k).b() * wk(k);
      for (int k = 1; k < pos[j]; ++k) term *= site(k).e() * us[j] + site(k).f() * wk(k);
      term *= (1 - t) * site(pos[j]).c() * us[j];
      for (std::size_t k = j + 1; k < n; ++k) term *= (t * us[j] - us[k]) / (us[j] - us[k]);
    }
    return term;
  });
}

Scalar of_ordinary(const OrdinaryModel& model, const SpinConfig& x, const SymfunOptions& options) {
  return of_ordinary(model.r.t, model.sites, model.u, model.w, x, options);
}

Partition Partition::make(std::vector<int> parts, int N) {
  const int n = static_cast<int>(parts.size());
  if (N < n) throw FrameViolation("frame needs N >= n");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] < 0 || parts[j] > N - n) {
      throw FrameViolation("part " + std::to_string(parts[j]) + " outside 0.." + std::to_string(N - n));
    }
    if (j > 0 && parts[j] > parts[j - 1]) throw FrameViolation("parts must be weakly decreasing");
  }
  return Partition(std::move(parts), N);
}

std::vector<Partition> Partition::all_in_frame(int n, int N) {
  std::vector<Partition> out;
  for (const auto& x : SpinConfig::all(N, n)) out.push_back(x_to_lambda(x, n));
  return out;
}

Partition x_to_lambda(const SpinConfig& x, int n) {
  if (x.m() != n) throw std::invalid_argument("translation needs exactly n down spins");
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) parts[static_cast<std::size_t>(j - 1)] = x.positions()[static_cast<std::size_t>(n - j)] - n + j - 1;
  return Partition::make(std::move(parts), x.N());
}

SpinConfig lambda_to_x(const Partition& lambda) {
  const int n = lambda.n();
  std::vector<int> positions(static_cast<std::size_t>(n));
  // x_i = lambda_{n-i+1} + i
  for (int i = 1; i <= n; ++i) {
    positions[static_cast<std::size_t>(i - 1)] = lambda.parts()[static_cast<std::size_t>(n - i)] + i;
  }
  return SpinConfig::make(lambda.N(), std::move(positions));
}

Scalar grothendieck(const Partition& lambda, const GrothendieckPoint& point) {
  const std::size_t n = point.z.size();
  if (static_cast<std::size_t>(lambda.n()) != n) throw std::invalid_argument("partition length and variable count differ");
  require_distinct(point.z, "z");
  ScalarMatrix m(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar& z = point.z[j];
    const Scalar shifted = 1 + point.beta * z;
    for (std::size_t k = 0; k < n; ++k) {
      const long exponent = lambda.parts()[k] + static_cast<long>(n) - static_cast<long>(k) - 1;
      m[j][k] = z.pow(exponent) * shifted.pow(static_cast<long>(k));
    }
  }
  Scalar vandermonde{1};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) vandermonde *= point.z[j] - point.z[k];
  return bareiss_determinant(std::move(m)) / vandermonde;
}

GrothendieckSpecialization grothendieck_specialization(int n, int N, const Scalar& beta, std::span<const Scalar> u,
                                                       const Scalar& t) {
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("need exactly n spectral parameters");
  const Scalar inv_beta = beta.inverse();
  GrothendieckSpecialization spec;
  spec.sites.reserve(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) spec.sites.push_back(LSiteParams::make(1, t * beta, 1, 1, -inv_beta, -1, t));
  spec.w.assign(static_cast<std::size_t>(N), Scalar{1});
  Scalar u_power{1};
  for (const Scalar& uj : u) {
    spec.z.push_back(-inv_beta - uj.inverse());
    u_power *= uj.pow(N);
  }
  spec.prefactor = (-beta).pow(-static_cast<long>(n) * (n - 1) / 2) * u_power;
  return spec;
}

Scalar of_homogeneous(const Scalar& t, const Scalar& beta, std::span<const Scalar> u, int N, const SpinConfig& x,
                      const SymfunOptions& options) {
  const std::size_t n = u.size();
  if (x.N() != N || static_cast<std::size_t>(x.m()) != n) throw std::invalid_argument("need m = n down spins on N sites");
  require_size_limit(n, options);
  require_distinct(u, "u");
  const Scalar inv_beta = beta.inverse();
  const auto& pos = x.positions();

  Scalar front{1};
  for (std::size_t j = 0; j < n; ++j) {
    front *= (1 - t) * u[j] * (u[j] + t * beta).pow(N) / (-inv_beta * u[j] - 1);
    for (std::size_t k = j + 1; k < n; ++k) front *= (t * u[j] - u[k]) / (u[j] - u[k]);
  }
  const Scalar sum = sum_over_permutations(u, [&](std::span<const Scalar> us, std::span<const std::size_t> sigma) {
    Scalar term{1};
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (sigma[j] > sigma[k]) term *= (us[k] - t * us[j]) / (t * us[k] - us[j]);
      }
      term *= ((-inv_beta * us[j] - 1) / (us[j] + t * beta)).pow(pos[j]);
    }
    return term;
  });
  return front * sum;
}

}  // namespace vertexion
