#include "vertexion/jobs.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

using json = nlohmann::json;

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommandNames{{
    {Command::eval_w, "eval-w"},
    {Command::eval_f, "eval-f"},
    {Command::eval_ow, "eval-ow"},
    {Command::eval_of, "eval-of"},
    {Command::eval_groth, "eval-groth"},
    {Command::verify, "verify"},
}};

// Strict view of one JSON object: every key must be consumed before finish().
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string pointer) : value_(value), pointer_(std::move(pointer)) {
    if (!value_.is_object()) throw ConfigError(pointer_, "expected an object");
  }

  [[nodiscard]] bool has(const std::string& key) const { return value_.contains(key); }

  const json& at(const std::string& key) {
    if (!value_.contains(key)) throw ConfigError(child(key), "missing field");
    consumed_.insert(key);
    return value_.at(key);
  }

  void skip(const std::string& key) { consumed_.insert(key); }

  [[nodiscard]] std::string child(const std::string& key) const { return pointer_ + "/" + key; }

  void finish() const {
    for (const auto& [key, _] : value_.items()) {
      if (!consumed_.contains(key)) throw ConfigError(child(key), "unknown field");
    }
  }

 private:
  const json& value_;
  std::string pointer_;
  std::set<std::string> consumed_;
};

Scalar read_scalar(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) throw ConfigError(pointer, "expected a rational string \"p/q\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(pointer, e.what());
  }
}

std::vector<Scalar> read_scalars(const json& v, const std::string& pointer) {
  if (!v.is_array()) throw ConfigError(pointer, "expected an array of rationals");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_scalar(v[i], pointer + "/" + std::to_string(i)));
  return out;
}

long long read_integer(const json& v, const std::string& pointer) {
  if (!v.is_number_integer()) throw ConfigError(pointer, "expected an integer");
  return v.get<long long>();
}

int read_positive(const json& v, const std::string& pointer) {
  const long long value = read_integer(v, pointer);
  if (value < 1 || value > 1000000) throw ConfigError(pointer, "expected a positive integer");
  return static_cast<int>(value);
}

std::vector<int> read_integers(const json& v, const std::string& pointer) {
  if (!v.is_array()) throw ConfigError(pointer, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<int>(read_integer(v[i], pointer + "/" + std::to_string(i))));
  }
  return out;
}

SpinConfig read_spin_config(ObjectReader& r, int N) {
  const std::string pointer = r.child("x");
  try {
    return SpinConfig::make(N, read_integers(r.at("x"), pointer));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(pointer, e.what());
  }
}

TriangularEvalJob read_triangular(ObjectReader& r) {
  TriangularModel model;
  model.r.t = read_scalar(r.at("t"), r.child("t"));
  model.k.A = read_scalar(r.at("A"), r.child("A"));
  model.k.B = read_scalar(r.at("B"), r.child("B"));
  model.u = read_scalars(r.at("u"), r.child("u"));
  model.w = read_scalars(r.at("w"), r.child("w"));
  SpinConfig x = read_spin_config(r, model.N());
  return TriangularEvalJob{std::move(model), std::move(x)};
}

OrdinaryEvalJob read_ordinary(ObjectReader& r) {
  OrdinaryModel model;
  model.r.t = read_scalar(r.at("t"), r.child("t"));
  model.u = read_scalars(r.at("u"), r.child("u"));
  model.w = read_scalars(r.at("w"), r.child("w"));
  const json& sites = r.at("sites");
  const std::string sites_pointer = r.child("sites");
  if (!sites.is_array()) throw ConfigError(sites_pointer, "expected an array of site objects");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    ObjectReader site(sites[i], sites_pointer + "/" + std::to_string(i));
    std::array<Scalar, 6> p;
    constexpr std::array<const char*, 6> keys{"a", "b", "c", "d", "e", "f"};
    for (std::size_t k = 0; k < keys.size(); ++k) p[k] = read_scalar(site.at(keys[k]), site.child(keys[k]));
    site.finish();
    try {
      model.sites.push_back(LSiteParams::make(p[0], p[1], p[2], p[3], p[4], p[5], model.r.t));
    } catch (const ConstraintViolation& e) {
      throw ConfigError(sites_pointer + "/" + std::to_string(i), e.what());
    }
  }
  if (model.sites.size() != model.w.size()) throw ConfigError(sites_pointer, "need one site per entry of w");
  SpinConfig x = read_spin_config(r, model.N());
  return OrdinaryEvalJob{std::move(model), std::move(x)};
}

GrothendieckEvalJob read_grothendieck(ObjectReader& r) {
  GrothendieckPoint point;
  point.beta = read_scalar(r.at("beta"), r.child("beta"));
  point.z = read_scalars(r.at("z"), r.child("z"));
  const std::vector<int> parts = read_integers(r.at("lambda"), r.child("lambda"));
  if (parts.size() != point.z.size()) throw ConfigError(r.child("lambda"), "lambda and z must have the same length");
  int N = static_cast<int>(parts.size()) + (parts.empty() ? 0 : parts.front());
  if (r.has("N")) N = static_cast<int>(read_integer(r.at("N"), r.child("N")));
  try {
    return GrothendieckEvalJob{Partition::make(parts, N), std::move(point)};
  } catch (const FrameViolation& e) {
    throw ConfigError(r.child("lambda"), e.what());
  }
}

VerifyJob read_verify(ObjectReader& r) {
  VerifyJob job;
  if (r.has("seed")) {
    const long long seed = read_integer(r.at("seed"), r.child("seed"));
    if (seed < 0) throw ConfigError(r.child("seed"), "expected a non-negative integer");
    job.seed = static_cast<std::uint64_t>(seed);
  }
  if (r.has("trials")) job.trials = read_positive(r.at("trials"), r.child("trials"));
  if (r.has("max_n")) job.max_n = read_positive(r.at("max_n"), r.child("max_n"));
  if (r.has("max_N")) job.max_N = read_positive(r.at("max_N"), r.child("max_N"));
  if (r.has("out")) {
    const json& out = r.at("out");
    if (!out.is_string() || out.get<std::string>().empty()) throw ConfigError(r.child("out"), "expected a path");
    job.out = out.get<std::string>();
  }
  return job;
}

int clip(int limit, const std::optional<int>& cap) { return cap ? std::min(limit, *cap) : limit; }

void append(std::vector<CheckReport>& into, std::vector<CheckReport> from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

template <typename Job>
const Job& job_as(const JobConfig& config) {
  return std::get<Job>(config.job);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [command, text] : kCommandNames) {
    if (text == name) return command;
  }
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [c, text] : kCommandNames) {
    if (c == command) return text;
  }
  return "?";
}

JobConfig parse_job_config(Command command, const json& document, const JobOverrides& overrides) {
  JobConfig config;
  config.command = command;
  const json empty = json::object();
  const json& root = document.is_null() ? empty : document;
  ObjectReader r(root, "");
  if (r.has("command")) {
    const json& named = r.at("command");
    if (!named.is_string() || parse_command(named.get<std::string>()) != command) {
      throw ConfigError("/command", "does not match the subcommand " + std::string(command_name(command)));
    }
  }
  switch (command) {
    case Command::eval_w:
    case Command::eval_f:
      config.job = read_triangular(r);
      break;
    case Command::eval_ow:
    case Command::eval_of:
      config.job = read_ordinary(r);
      break;
    case Command::eval_groth:
      config.job = read_grothendieck(r);
      break;
    case Command::verify: {
      VerifyJob job = read_verify(r);
      if (overrides.seed) job.seed = *overrides.seed;
      if (overrides.trials) job.trials = *overrides.trials;
      if (overrides.max_n) job.max_n = *overrides.max_n;
      if (overrides.max_N) job.max_N = *overrides.max_N;
      if (overrides.out) job.out = *overrides.out;
      if (job.trials < 1) throw ConfigError("/trials", "expected a positive integer");
      if ((job.max_n && *job.max_n < 1) || (job.max_N && *job.max_N < 1)) {
        throw ConfigError(job.max_n && *job.max_n < 1 ? "/max_n" : "/max_N", "expected a positive integer");
      }
      config.job = job;
      break;
    }
  }
  r.finish();
  return config;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("config is not valid JSON: ") + e.what());
  }
}

std::vector<CheckReport> run_verify_plan(const VerifyJob& job, const VerifyOptions& options) {
  std::vector<CheckReport> reports;
  append(reports, verify_algebraic_relations(job.relation_points, job.seed, options));

  SweepSpec triangular;
  triangular.N_range = {1, clip(4, job.max_N)};
  triangular.n_range = {1, clip(4, job.max_n)};
  triangular.trials_per_point = job.trials;
  triangular.seed = job.seed;
  append(reports, verify_triangular_properties(triangular, options));
  append(reports, verify_triangular_closed_form(triangular, options));

  SweepSpec ordinary = triangular;
  ordinary.N_range = {1, clip(5, job.max_N)};
  ordinary.n_range = {1, clip(3, job.max_n)};
  append(reports, verify_ordinary_properties(ordinary, options));
  append(reports, verify_ordinary_closed_form(ordinary, options));

  SweepSpec grothendieck = ordinary;
  grothendieck.trials_per_point = std::min(job.trials, 3);
  append(reports, verify_grothendieck_correspondence(grothendieck, std::nullopt, options));

  SweepSpec identities = triangular;
  append(reports, verify_proof_identities(identities, options));

  std::stable_sort(reports.begin(), reports.end(), report_order);
  return reports;
}

std::string csv_path_for(const std::string& json_path) {
  const auto slash = json_path.find_last_of('/');
  const auto dot = json_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return json_path.substr(0, dot) + ".csv";
  return json_path + ".csv";
}

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::eval_w:
      case Command::eval_f: {
        const auto& job = job_as<TriangularEvalJob>(config);
        if (job.model.r.t == Scalar(1)) err << "warning: t = 1 makes every wavefunction vanish\n";
        const Scalar oracle = wavefunction_triangular(job.model, job.x);
        out << "oracle=" << oracle << " formula=";
        if (job.x.m() > job.model.n()) {
          out << "n/a";
        } else {
          out << f_triangular(job.model, job.x);
        }
        out << '\n';
        return 0;
      }
      case Command::eval_ow:
      case Command::eval_of: {
        const auto& job = job_as<OrdinaryEvalJob>(config);
        if (job.model.r.t == Scalar(1)) err << "warning: t = 1 makes every wavefunction vanish\n";
        if (config.command == Command::eval_ow) {
          out << ordinary_wavefunction(job.model, job.x) << '\n';
        } else {
          out << of_ordinary(job.model, job.x) << '\n';
        }
        return 0;
      }
      case Command::eval_groth: {
        const auto& job = job_as<GrothendieckEvalJob>(config);
        out << grothendieck(job.lambda, job.point) << '\n';
        return 0;
      }
      case Command::verify: {
        const auto& job = job_as<VerifyJob>(config);
        const auto reports = run_verify_plan(job);
        {
          std::ofstream json_out(job.out, std::ios::binary);
          std::ofstream csv_out(csv_path_for(job.out), std::ios::binary);
          if (!json_out || !csv_out) {
            err << "error: cannot write report to " << job.out << '\n';
            return 2;
          }
          json_out << reports_to_json_text(reports);
          csv_out << reports_to_csv(reports);
        }
        const auto failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.passed; });
        for (const auto& r : reports) {
          if (r.passed) continue;
          err << "FAIL " << r.check_id;
          if (r.x) err << " x=" << *r.x;
          if (r.witness) err << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
          err << '\n';
        }
        out << (reports.size() - static_cast<std::size_t>(failed)) << '/' << reports.size() << " checks passed; report written to "
            << job.out << '\n';
        return failed == 0 ? 0 : 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace vertexion
