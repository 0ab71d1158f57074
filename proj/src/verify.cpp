#include "vertexion/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "vertexion/errors.hpp"
#include "vertexion/interpolation.hpp"
#include "vertexion/lattice.hpp"
#include "vertexion/random.hpp"
#include "vertexion/relations.hpp"
#include "vertexion/symfun.hpp"

namespace vertexion {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kGridNote = "polynomial behaviour certified by interpolation consistency on the sampled grid only";

struct Trial {
  ojson params = ojson::object();
  Scalar lhs;
  Scalar rhs;
};

struct Cell {
  std::string check_id;
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> x;
  std::string note;
  std::function<void(ScalarSampler&, Trial&)> run;
};

std::string cell_key(const Cell& c) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  return c.check_id + "|" + opt(c.N) + "|" + opt(c.n) + "|" + opt(c.m) + "|" + c.x.value_or("-");
}

CheckReport run_cell(const Cell& cell, int trials, std::uint64_t seed) {
  CheckReport report;
  report.check_id = cell.check_id;
  report.N = cell.N;
  report.n = cell.n;
  report.m = cell.m;
  report.x = cell.x;
  report.note = cell.note;
  report.passed = true;
  ScalarSampler sampler(derive_seed(seed, cell_key(cell)));
  for (int i = 0; i < trials; ++i) {
    Trial trial;
    report.trials = i + 1;
    try {
      cell.run(sampler, trial);
    } catch (const std::exception& e) {
      report.passed = false;
      report.params_used = trial.params;
      report.witness = Witness{std::string("error: ") + e.what(), ""};
      break;
    }
    if (i == 0) report.params_used = trial.params;
    if (trial.lhs != trial.rhs) {
      report.passed = false;
      report.params_used = trial.params;
      report.witness = Witness{trial.lhs.str(), trial.rhs.str()};
      break;
    }
  }
  return report;
}

std::vector<CheckReport> run_cells(const std::vector<Cell>& cells, int trials, std::uint64_t seed, unsigned threads) {
  std::vector<CheckReport> reports(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) reports[i] = run_cell(cells[i], trials, seed);
  };
  const unsigned count = std::min<unsigned>(resolve_thread_count(threads), static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::stable_sort(reports.begin(), reports.end(), report_order);
  return reports;
}

ojson scalars_json(std::span<const Scalar> values) {
  ojson a = ojson::array();
  for (const auto& v : values) a.push_back(v.str());
  return a;
}

ojson site_json(const LSiteParams& s) {
  return ojson{{"a", s.a().str()}, {"b", s.b().str()}, {"c", s.c().str()},
               {"d", s.d().str()}, {"e", s.e().str()}, {"f", s.f().str()}};
}

ojson model_json(const TriangularModel& model) {
  return ojson{{"t", model.r.t.str()},
               {"A", model.k.A.str()},
               {"B", model.k.B.str()},
               {"u", scalars_json(model.u)},
               {"w", scalars_json(model.w)}};
}

ojson model_json(const OrdinaryModel& model) {
  ojson sites = ojson::array();
  for (const auto& s : model.sites) sites.push_back(site_json(s));
  return ojson{{"t", model.r.t.str()}, {"u", scalars_json(model.u)}, {"w", scalars_json(model.w)}, {"sites", sites}};
}

/// Trial outcome for a matrix identity: first mismatching entry, or the (0, 0) entries when equal.
void record_identity(const OperatorIdentity& id, Trial& trial) {
  if (auto mismatch = id.first_mismatch()) {
    trial.lhs = mismatch->first;
    trial.rhs = mismatch->second;
  } else {
    trial.lhs = id.lhs(0, 0);
    trial.rhs = id.rhs(0, 0);
  }
}

const std::vector<Scalar> kUnitValues{1, -1};

Scalar draw_t(ScalarSampler& s) { return s.draw(kUnitValues); }

TriangularModel random_triangular(ScalarSampler& s, int N, int n) {
  TriangularModel model;
  model.r.t = draw_t(s);
  model.k.A = s.draw();
  model.k.B = s.draw();
  // u also stays off the zeros of Bu - A, u_j u_k - t and u_j u_k - 1, so the w_N degree cannot drop by accident
  std::vector<Scalar> avoid_u = kUnitValues;
  avoid_u.push_back(model.k.A / model.k.B);
  for (int j = 0; j < n; ++j) {
    const Scalar uj = s.draw(avoid_u);
    model.u.push_back(uj);
    avoid_u.push_back(uj);
    avoid_u.push_back(model.r.t / uj);
    avoid_u.push_back(uj.inverse());
  }
  std::vector<Scalar> avoid;
  for (const auto& uj : model.u) {
    avoid.push_back(uj / model.r.t);
    avoid.push_back(uj);
  }
  for (int k = 0; k < N; ++k) model.w.push_back(s.draw(avoid));
  return model;
}

LSiteParams random_site(ScalarSampler& s, const Scalar& t, Fault fault) {
  const Scalar a = s.draw();
  const Scalar b = s.draw();
  const Scalar c = s.draw();
  const Scalar d = s.draw();
  const Scalar e = -t * c * d / b;
  if (fault == Fault::unconstrained_sites) return LSiteParams::unchecked(a, b, c, d, e, s.draw());
  return LSiteParams::make(a, b, c, d, e, -c * d / a, t);
}

OrdinaryModel random_ordinary(ScalarSampler& s, int N, int n, Fault fault) {
  OrdinaryModel model;
  model.r.t = draw_t(s);
  for (int k = 0; k < N; ++k) model.sites.push_back(random_site(s, model.r.t, fault));
  std::vector<Scalar> avoid_u = kUnitValues;
  for (int j = 0; j < n; ++j) {
    const Scalar uj = s.draw(avoid_u);
    model.u.push_back(uj);
    avoid_u.push_back(uj);
    avoid_u.push_back(model.r.t * uj);
    avoid_u.push_back(uj / model.r.t);
  }
  // w_k avoids the zeros of a_k u + b_k w and e_k u + f_k w
  for (int k = 0; k < N; ++k) {
    const auto& site = model.sites[static_cast<std::size_t>(k)];
    std::vector<Scalar> avoid;
    for (const auto& uj : model.u) {
      avoid.push_back(-site.a() * uj / site.b());
      if (!site.f().is_zero()) avoid.push_back(-site.e() * uj / site.f());
    }
    model.w.push_back(s.draw(avoid));
  }
  return model;
}

template <typename Model>
Model without_last_column(const Model& model) {
  Model reduced = model;
  reduced.w.pop_back();
  if constexpr (std::is_same_v<Model, OrdinaryModel>) reduced.sites.pop_back();
  return reduced;
}

template <typename Model>
Model without_last_row_and_column(const Model& model) {
  Model reduced = without_last_column(model);
  reduced.u.pop_back();
  return reduced;
}

template <typename Model>
Model with_random_transposition(const Model& model, ScalarSampler& s) {
  Model swapped = model;
  if (model.u.size() >= 2) {
    const std::size_t i = s.index(model.u.size());
    std::size_t j = s.index(model.u.size() - 1);
    if (j >= i) ++j;
    std::swap(swapped.u[i], swapped.u[j]);
  }
  return swapped;
}

std::vector<int> m_values(const SweepSpec& spec, int N, int n) {
  std::vector<int> out;
  const int top = std::min(n, N);
  if (spec.fixed_m) {
    if (*spec.fixed_m >= 0 && *spec.fixed_m <= top) out.push_back(*spec.fixed_m);
  } else {
    for (int m = 0; m <= top; ++m) out.push_back(m);
  }
  return out;
}

Cell shaped_cell(std::string id, int N, int n, const SpinConfig& x) {
  Cell c;
  c.check_id = std::move(id);
  c.N = N;
  c.n = n;
  c.m = x.m();
  c.x = x.dashed();
  return c;
}

/// (1-t) prod_{j<n} (t u_j - u_n) prod_{j<=n} (u_j u_n - 1) prod_{k<N} (u_n - w_k)
Scalar triangular_recursion_factor(const TriangularModel& model) {
  const Scalar& t = model.r.t;
  const Scalar& un = model.u.back();
  Scalar f = 1 - t;
  for (std::size_t j = 0; j + 1 < model.u.size(); ++j) f *= t * model.u[j] - un;
  for (const auto& uj : model.u) f *= uj * un - 1;
  for (std::size_t k = 0; k + 1 < model.w.size(); ++k) f *= un - model.w[k];
  return f;
}

/// (1-t) c_N u_n prod_{j<n} a_N (t u_j - u_n) prod_{k<N} (e_k u_n + f_k w_k)
Scalar ordinary_recursion_factor(const OrdinaryModel& model) {
  const Scalar& t = model.r.t;
  const Scalar& un = model.u.back();
  const LSiteParams& last = model.sites.back();
  Scalar f = (1 - t) * last.c() * un;
  for (std::size_t j = 0; j + 1 < model.u.size(); ++j) f *= last.a() * (t * model.u[j] - un);
  for (std::size_t k = 0; k + 1 < model.w.size(); ++k) f *= model.sites[k].e() * un + model.sites[k].f() * model.w[k];
  return f;
}

using TriangularEval = std::function<Scalar(const TriangularModel&, const SpinConfig&)>;
using OrdinaryEval = std::function<Scalar(const OrdinaryModel&, const SpinConfig&)>;

/// Degree, symmetry, recursion / factorization and N = 1 evaluations of a triangular evaluator.
void add_triangular_property_cells(std::vector<Cell>& cells, const std::string& prefix, const TriangularEval& eval,
                                   int N, int n, const SpinConfig& x) {
  {
    Cell c = shaped_cell(prefix + ".degree", N, n, x);
    c.note = kGridNote;
    c.run = [=](ScalarSampler& s, Trial& trial) {
      TriangularModel model = random_triangular(s, N, n);
      const auto grid = s.draw_distinct(static_cast<std::size_t>(n) + 2);
      trial.params = model_json(model);
      trial.params["w_N_grid"] = scalars_json(grid);
      UnivariateSample sample;
      for (const auto& wN : grid) {
        model.w.back() = wN;
        sample.add(wN, eval(model, x));
      }
      trial.lhs = interpolate_degree(sample, n);
      trial.rhs = x.occupies_last_site() ? n - 1 : n;
    };
    cells.push_back(std::move(c));
  }
  {
    Cell c = shaped_cell(prefix + ".symmetry", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const TriangularModel model = random_triangular(s, N, n);
      const TriangularModel swapped = with_random_transposition(model, s);
      trial.params = model_json(model);
      trial.params["u_permuted"] = scalars_json(swapped.u);
      trial.lhs = eval(model, x);
      trial.rhs = eval(swapped, x);
    };
    cells.push_back(std::move(c));
  }
  if (x.occupies_last_site()) {
    Cell c = shaped_cell(prefix + ".recursion", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      TriangularModel model = random_triangular(s, N, n);
      model.w.back() = model.u.back() / model.r.t;
      trial.params = model_json(model);
      trial.lhs = eval(model, x);
      trial.rhs = triangular_recursion_factor(model) * eval(without_last_row_and_column(model), x.without_last_spin());
    };
    cells.push_back(std::move(c));
  } else {
    Cell c = shaped_cell(prefix + ".factorization", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const TriangularModel model = random_triangular(s, N, n);
      trial.params = model_json(model);
      Scalar frozen{1};
      for (const auto& uj : model.u) frozen *= uj - model.r.t * model.w.back();
      trial.lhs = eval(model, x);
      trial.rhs = frozen * eval(without_last_column(model), x.without_last_site());
    };
    cells.push_back(std::move(c));
  }
  if (N == 1 && x.m() == 1) {
    Cell c = shaped_cell(prefix + ".initial-one-down", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      TriangularModel model = random_triangular(s, N, n);
      const Scalar& t = model.r.t;
      const Scalar& un = model.u.back();
      model.w[0] = un / t;
      trial.params = model_json(model);
      Scalar expected = 1 - t;
      for (std::size_t j = 0; j + 1 < model.u.size(); ++j) {
        expected *= (t * model.u[j] - un) * (model.k.B * model.u[j] - model.k.A);
        for (std::size_t k = j + 1; k + 1 < model.u.size(); ++k) expected *= model.u[j] * model.u[k] - t;
      }
      for (const auto& uj : model.u) expected *= uj * un - 1;
      trial.lhs = eval(model, x);
      trial.rhs = expected;
    };
    cells.push_back(std::move(c));
  }
  if (N == 1 && x.m() == 0) {
    Cell c = shaped_cell(prefix + ".initial-empty", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const TriangularModel model = random_triangular(s, N, n);
      const Scalar& t = model.r.t;
      trial.params = model_json(model);
      Scalar expected{1};
      for (std::size_t j = 0; j < model.u.size(); ++j) {
        expected *= (model.k.B * model.u[j] - model.k.A) * (model.u[j] - t * model.w[0]);
        for (std::size_t k = j + 1; k < model.u.size(); ++k) expected *= model.u[j] * model.u[k] - t;
      }
      trial.lhs = eval(model, x);
      trial.rhs = expected;
    };
    cells.push_back(std::move(c));
  }
}

/// Degree, symmetry, recursion / factorization and the N = n = 1 value of an ordinary evaluator.
void add_ordinary_property_cells(std::vector<Cell>& cells, const std::string& prefix, const OrdinaryEval& eval,
                                 int N, int n, const SpinConfig& x, Fault fault) {
  {
    Cell c = shaped_cell(prefix + ".degree", N, n, x);
    c.note = kGridNote;
    c.run = [=](ScalarSampler& s, Trial& trial) {
      OrdinaryModel model = random_ordinary(s, N, n, fault);
      const auto grid = s.draw_distinct(static_cast<std::size_t>(n) + 2);
      trial.params = model_json(model);
      trial.params["w_N_grid"] = scalars_json(grid);
      UnivariateSample sample;
      for (const auto& wN : grid) {
        model.w.back() = wN;
        sample.add(wN, eval(model, x));
      }
      trial.lhs = interpolate_degree(sample, n);
      trial.rhs = x.occupies_last_site() ? n - 1 : n;
    };
    cells.push_back(std::move(c));
  }
  {
    Cell c = shaped_cell(prefix + ".symmetry", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const OrdinaryModel model = random_ordinary(s, N, n, fault);
      const OrdinaryModel swapped = with_random_transposition(model, s);
      trial.params = model_json(model);
      trial.params["u_permuted"] = scalars_json(swapped.u);
      trial.lhs = eval(model, x);
      trial.rhs = eval(swapped, x);
    };
    cells.push_back(std::move(c));
  }
  if (x.occupies_last_site()) {
    Cell c = shaped_cell(prefix + ".recursion", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      OrdinaryModel model = random_ordinary(s, N, n, fault);
      const LSiteParams& last = model.sites.back();
      model.w.back() = -last.a() * model.u.back() / last.b();
      trial.params = model_json(model);
      trial.lhs = eval(model, x);
      trial.rhs = ordinary_recursion_factor(model) * eval(without_last_row_and_column(model), x.without_last_spin());
    };
    cells.push_back(std::move(c));
  } else {
    Cell c = shaped_cell(prefix + ".factorization", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const OrdinaryModel model = random_ordinary(s, N, n, fault);
      trial.params = model_json(model);
      const LSiteParams& last = model.sites.back();
      Scalar frozen{1};
      for (const auto& uj : model.u) frozen *= last.a() * uj + last.b() * model.w.back();
      trial.lhs = eval(model, x);
      trial.rhs = frozen * eval(without_last_column(model), x.without_last_site());
    };
    cells.push_back(std::move(c));
  }
  if (N == 1 && n == 1) {
    Cell c = shaped_cell(prefix + ".initial", N, n, x);
    c.run = [=](ScalarSampler& s, Trial& trial) {
      const OrdinaryModel model = random_ordinary(s, N, n, fault);
      trial.params = model_json(model);
      trial.lhs = eval(model, x);
      trial.rhs = (1 - model.r.t) * model.sites[0].c() * model.u[0];
    };
    cells.push_back(std::move(c));
  }
}

template <typename Fn>
void for_each_shape(const SweepSpec& spec, bool ordinary, Fn&& fn) {
  for (int N = spec.N_range.lo; N <= spec.N_range.hi; ++N) {
    for (int n = spec.n_range.lo; n <= spec.n_range.hi; ++n) {
      if (ordinary) {
        if (n > N) continue;
        if (spec.fixed_m && *spec.fixed_m != n) continue;
        for (const auto& x : SpinConfig::all(N, n)) fn(N, n, x);
      } else {
        for (int m : m_values(spec, N, n)) {
          for (const auto& x : SpinConfig::all(N, m)) fn(N, n, x);
        }
      }
    }
  }
}

BoundaryMatrixFn boundary_for(Fault fault, const KParams& k) {
  if (fault != Fault::non_triangular_boundary) return {};
  return [k](const Scalar& u) {
    Op2 op = k_matrix(u, k);
    op[1] = 1;  // <0|K|1>
    return op;
  };
}

TriangularEval lattice_eval(Fault fault) {
  return [fault](const TriangularModel& model, const SpinConfig& x) {
    return wavefunction_triangular(model, x, boundary_for(fault, model.k));
  };
}

TriangularEval closed_form_eval(Fault fault) {
  SymfunOptions opts;
  opts.drop_factorial = fault == Fault::dropped_factorial;
  return [opts](const TriangularModel& model, const SpinConfig& x) { return f_triangular(model, x, opts); };
}

OrdinaryEval ordinary_lattice_eval() {
  return [](const OrdinaryModel& model, const SpinConfig& x) { return ordinary_wavefunction(model, x); };
}

OrdinaryEval ordinary_closed_form_eval() {
  return [](const OrdinaryModel& model, const SpinConfig& x) { return of_ordinary(model, x); };
}

std::vector<Scalar> random_permutation_of(std::vector<Scalar> values, ScalarSampler& s) {
  for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[s.index(i)]);
  return values;
}

}  // namespace

void SweepSpec::validate() const {
  if (N_range.lo > N_range.hi || n_range.lo > n_range.hi) throw std::invalid_argument("empty sweep range");
  if (N_range.lo < 1 || n_range.lo < 1) throw std::invalid_argument("sweep ranges start at 1");
  if (trials_per_point < 1) throw std::invalid_argument("trials_per_point must be at least 1");
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("VERTEXION_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // unparsable override falls through to the default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CheckReport> verify_algebraic_relations(int points, std::uint64_t seed, const VerifyOptions& options) {
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  std::vector<Cell> cells;
  {
    Cell c;
    c.check_id = "relations.yang-baxter";
    c.run = [](ScalarSampler& s, Trial& trial) {
      const Scalar u = s.draw(), v = s.draw(), w = s.draw(), t = s.draw();
      trial.params = ojson{{"u", u.str()}, {"v", v.str()}, {"w", w.str()}, {"t", t.str()}};
      record_identity(yang_baxter_sides(u, v, w, RParams{t}, RParams{t}), trial);
    };
    cells.push_back(std::move(c));
  }
  {
    Cell c;
    c.check_id = "relations.reflection";
    const Fault fault = options.fault;
    c.run = [fault](ScalarSampler& s, Trial& trial) {
      const Scalar u = s.draw(), w = s.draw(), t = s.draw();
      const KParams k{s.draw(), s.draw()};
      trial.params = ojson{{"u", u.str()}, {"w", w.str()}, {"t", t.str()}, {"A", k.A.str()}, {"B", k.B.str()}};
      BoundaryMatrixFn boundary = boundary_for(fault, k);
      if (!boundary) boundary = [&k](const Scalar& x) { return k_matrix(x, k); };
      record_identity(reflection_sides(u, w, RParams{t}, boundary), trial);
    };
    cells.push_back(std::move(c));
  }
  {
    Cell c;
    c.check_id = "relations.rll";
    const Fault fault = options.fault;
    c.run = [fault](ScalarSampler& s, Trial& trial) {
      const Scalar t = draw_t(s);
      const LSiteParams site = random_site(s, t, fault);
      const Scalar u1 = s.draw(), u2 = s.draw(), w = s.draw();
      trial.params = ojson{{"u1", u1.str()}, {"u2", u2.str()}, {"w", w.str()}, {"t", t.str()}, {"site", site_json(site)}};
      record_identity(rll_sides(u1, u2, w, site, RParams{t}), trial);
    };
    cells.push_back(std::move(c));
  }
  return run_cells(cells, points, seed, options.threads);
}

std::vector<CheckReport> verify_triangular_properties(const SweepSpec& spec, const VerifyOptions& options) {
  spec.validate();
  std::vector<Cell> cells;
  const TriangularEval eval = lattice_eval(options.fault);
  for_each_shape(spec, false, [&](int N, int n, const SpinConfig& x) {
    add_triangular_property_cells(cells, "triangular", eval, N, n, x);
  });
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

std::vector<CheckReport> verify_triangular_closed_form(const SweepSpec& spec, const VerifyOptions& options) {
  spec.validate();
  std::vector<Cell> cells;
  const TriangularEval lattice = lattice_eval(options.fault);
  const TriangularEval closed = closed_form_eval(options.fault);
  for_each_shape(spec, false, [&](int N, int n, const SpinConfig& x) {
    {
      Cell c = shaped_cell("triangular.closed-form", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const TriangularModel model = random_triangular(s, N, n);
        trial.params = model_json(model);
        trial.lhs = lattice(model, x);
        trial.rhs = closed(model, x);
      };
      cells.push_back(std::move(c));
    }
    if (x.m() == N) {
      Cell c = shaped_cell("triangular.domain-wall", N, n, x);
      const Fault fault = options.fault;
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const TriangularModel model = random_triangular(s, N, n);
        trial.params = model_json(model);
        trial.lhs = domain_wall_Z(model, boundary_for(fault, model.k));
        trial.rhs = lattice(model, x);
      };
      cells.push_back(std::move(c));
    }
    add_triangular_property_cells(cells, "closed-form", closed, N, n, x);
  });
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

std::vector<CheckReport> verify_ordinary_properties(const SweepSpec& spec, const VerifyOptions& options) {
  spec.validate();
  std::vector<Cell> cells;
  const Fault fault = options.fault;
  for_each_shape(spec, true, [&](int N, int n, const SpinConfig& x) {
    Cell gate = shaped_cell("ordinary.rll-gate", N, n, x);
    gate.run = [=](ScalarSampler& s, Trial& trial) {
      const OrdinaryModel model = random_ordinary(s, N, n, fault);
      const Scalar u1 = s.draw(), u2 = s.draw();
      trial.params = model_json(model);
      trial.params["u1"] = u1.str();
      trial.params["u2"] = u2.str();
      for (std::size_t k = 0; k < model.sites.size(); ++k) {
        record_identity(rll_sides(u1, u2, model.w[k], model.sites[k], model.r), trial);
        if (trial.lhs != trial.rhs) {
          trial.params["failing_site"] = static_cast<int>(k + 1);
          return;
        }
      }
    };
    cells.push_back(std::move(gate));
    add_ordinary_property_cells(cells, "ordinary", ordinary_lattice_eval(), N, n, x, fault);
  });
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

std::vector<CheckReport> verify_ordinary_closed_form(const SweepSpec& spec, const VerifyOptions& options) {
  spec.validate();
  std::vector<Cell> cells;
  const Fault fault = options.fault;
  for_each_shape(spec, true, [&](int N, int n, const SpinConfig& x) {
    {
      Cell c = shaped_cell("ordinary.closed-form", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const OrdinaryModel model = random_ordinary(s, N, n, fault);
        trial.params = model_json(model);
        trial.lhs = ordinary_wavefunction(model, x);
        trial.rhs = of_ordinary(model, x);
      };
      cells.push_back(std::move(c));
    }
    {
      Cell c = shaped_cell("ordinary.b-commutativity", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const OrdinaryModel model = random_ordinary(s, N, n, fault);
        OrdinaryModel reversed = model;
        std::reverse(reversed.u.begin(), reversed.u.end());
        trial.params = model_json(model);
        trial.lhs = ordinary_wavefunction(model, x);
        trial.rhs = ordinary_wavefunction(reversed, x);
      };
      cells.push_back(std::move(c));
    }
    {
      Cell c = shaped_cell("ordinary.six-vertex-closed-form", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        OrdinaryModel model = random_ordinary(s, N, n, fault);
        model.sites.assign(static_cast<std::size_t>(N), LSiteParams::six_vertex(model.r.t));
        trial.params = model_json(model);
        trial.lhs = ordinary_wavefunction(model, x);
        trial.rhs = of_ordinary(model, x);
      };
      cells.push_back(std::move(c));
    }
    add_ordinary_property_cells(cells, "ordinary-closed-form", ordinary_closed_form_eval(), N, n, x, fault);
  });
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

std::vector<CheckReport> verify_grothendieck_correspondence(const SweepSpec& spec, std::optional<Scalar> beta,
                                                            const VerifyOptions& options) {
  spec.validate();
  if (beta && beta->is_zero()) throw std::invalid_argument("beta must be nonzero");
  std::vector<Cell> cells;
  for_each_shape(spec, true, [&](int N, int n, const SpinConfig& x) {
    {
      Cell c = shaped_cell("grothendieck.correspondence", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const Scalar b = beta ? *beta : s.draw();
        const auto u = s.draw_distinct(static_cast<std::size_t>(n));
        const Scalar t{0};
        const auto special = grothendieck_specialization(n, N, b, u, t);
        const Partition lambda = x_to_lambda(x, n);
        trial.params = ojson{{"t", t.str()}, {"beta", b.str()}, {"u", scalars_json(u)}, {"z", scalars_json(special.z)},
                             {"lambda", lambda.parts()}};
        trial.lhs = of_ordinary(t, special.sites, u, special.w, x);
        trial.rhs = special.prefactor * grothendieck(lambda, GrothendieckPoint{special.z, b});
      };
      cells.push_back(std::move(c));
    }
    {
      Cell c = shaped_cell("grothendieck.homogeneous-form", N, n, x);
      c.run = [=](ScalarSampler& s, Trial& trial) {
        const Scalar t = draw_t(s);
        const Scalar b = beta ? *beta : s.draw();
        // keep u away from the poles of the rewritten form
        std::vector<Scalar> avoid{-t * b, -b};
        std::vector<Scalar> u;
        for (int j = 0; j < n; ++j) {
          u.push_back(s.draw(avoid));
          avoid.push_back(u.back());
          avoid.push_back(u.back() * t);
          avoid.push_back(u.back() / t);
        }
        const auto special = grothendieck_specialization(n, N, b, u, t);
        trial.params = ojson{{"t", t.str()}, {"beta", b.str()}, {"u", scalars_json(u)}};
        trial.lhs = of_ordinary(t, special.sites, u, special.w, x);
        trial.rhs = of_homogeneous(t, b, u, N, x);
      };
      cells.push_back(std::move(c));
    }
  });
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

std::vector<CheckReport> verify_proof_identities(const SweepSpec& spec, const VerifyOptions& options) {
  spec.validate();
  std::vector<Cell> cells;
  for (int n = spec.n_range.lo; n <= spec.n_range.hi; ++n) {
    for (int m = 0; m <= n; ++m) {
      if (spec.fixed_m && *spec.fixed_m != m) continue;
      if (m >= 1) {
        // rows other than the m-th carry u_1..u_{n-1} in any order
        Cell c;
        c.check_id = "identity.row-product-invariance";
        c.n = n;
        c.m = m;
        c.run = [n](ScalarSampler& s, Trial& trial) {
          const Scalar t = draw_t(s);
          const auto u = s.draw_distinct(static_cast<std::size_t>(n));
          const auto rest = random_permutation_of(std::vector<Scalar>(u.begin(), u.end() - 1), s);
          trial.params = ojson{{"t", t.str()}, {"u", scalars_json(u)}, {"permuted", scalars_json(rest)}};
          Scalar lhs{1}, rhs{1};
          for (const auto& v : rest) lhs *= (t * v - u.back()) * (v * u.back() - 1);
          for (std::size_t j = 0; j + 1 < u.size(); ++j) rhs *= (t * u[j] - u.back()) * (u[j] * u.back() - 1);
          trial.lhs = lhs;
          trial.rhs = rhs;
        };
        cells.push_back(std::move(c));
      }
      {
        Cell c;
        c.check_id = "identity.column-product-invariance";
        c.n = n;
        c.m = m;
        c.run = [n, m](ScalarSampler& s, Trial& trial) {
          const Scalar t = draw_t(s);
          const Scalar wN = s.draw();
          const auto u = s.draw_distinct(static_cast<std::size_t>(n));
          const auto us = random_permutation_of(u, s);
          trial.params = ojson{{"t", t.str()}, {"w_N", wN.str()}, {"u", scalars_json(u)}, {"permuted", scalars_json(us)}};
          Scalar head{1}, tail{1}, rhs{1};
          for (int j = 0; j < n; ++j) (j < m ? head : tail) *= us[static_cast<std::size_t>(j)] - t * wN;
          for (const auto& uj : u) rhs *= uj - t * wN;
          trial.lhs = head * tail;
          trial.rhs = rhs;
        };
        cells.push_back(std::move(c));
      }
    }
    if (spec.fixed_m && *spec.fixed_m != n) continue;
    {
      Cell c;
      c.check_id = "identity.ratio-telescoping";
      c.n = n;
      c.run = [n](ScalarSampler& s, Trial& trial) {
        const Scalar t = draw_t(s);
        const Scalar aN = s.draw();
        const auto u = s.draw_distinct(static_cast<std::size_t>(n));
        const auto rest = random_permutation_of(std::vector<Scalar>(u.begin(), u.end() - 1), s);
        trial.params = ojson{{"t", t.str()}, {"a_N", aN.str()}, {"u", scalars_json(u)}, {"permuted", scalars_json(rest)}};
        Scalar lhs{1}, rhs{1};
        for (const auto& v : rest) lhs *= (t * v - u.back()) / (v - u.back()) * aN * (v - u.back());
        for (std::size_t j = 0; j + 1 < u.size(); ++j) rhs *= aN * (t * u[j] - u.back());
        trial.lhs = lhs;
        trial.rhs = rhs;
      };
      cells.push_back(std::move(c));
    }
    {
      Cell c;
      c.check_id = "identity.site-product-invariance";
      c.n = n;
      c.run = [n](ScalarSampler& s, Trial& trial) {
        const Scalar aN = s.draw(), bN = s.draw(), wN = s.draw();
        const auto u = s.draw_distinct(static_cast<std::size_t>(n));
        const auto us = random_permutation_of(u, s);
        trial.params = ojson{{"a_N", aN.str()}, {"b_N", bN.str()}, {"w_N", wN.str()}, {"u", scalars_json(u)},
                             {"permuted", scalars_json(us)}};
        Scalar lhs{1}, rhs{1};
        for (const auto& v : us) lhs *= aN * v + bN * wN;
        for (const auto& v : u) rhs *= aN * v + bN * wN;
        trial.lhs = lhs;
        trial.rhs = rhs;
      };
      cells.push_back(std::move(c));
    }
  }
  return run_cells(cells, spec.trials_per_point, spec.seed, options.threads);
}

}  // namespace vertexion
