#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "sun_euler/density_matrix.hpp"
#include "sun_euler/euler_param.hpp"
#include "sun_euler/group_volume.hpp"
#include "sun_euler/haar_measure.hpp"
#include "sun_euler/haar_sampler.hpp"
#include "sun_euler/lie_algebra.hpp"
#include "sun_euler/matrix_json.hpp"
#include "sun_euler/param_ranges.hpp"
#include "sun_euler/reference_checks.hpp"

namespace sun::cli {

namespace {

using nlohmann::json;

// Output size grows like N^4 for `generators`; beyond this the CLI refuses.
constexpr int kMaxCliDimension = 64;

struct Options {
  int n = 2;
  int index = 0;
  std::string alpha;
  std::string theta;
  std::string method = "marinov";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string mode = "quotient";
  std::string sample_mode = "covering";
  std::string what = "unitary";
  std::string theta_mode = "uniform";
  int count = 1;
  int points = 50;
  bool check_oracle = false;
  std::string suite = "paper";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParamVector alpha_or_zero(const Options& o) {
  if (o.alpha.empty()) return ParamVector(o.n);
  return ParamVector(o.n, parse_number_list(o.alpha));
}

json cmd_generators(const Options& o) {
  const GeneratorSet gs = make_generators(o.n);
  json out = json::array();
  if (o.index != 0) {
    out.push_back(generator_to_json(gs, o.index));
  } else {
    for (int i = 1; i <= gs.size(); ++i) out.push_back(generator_to_json(gs, i));
  }
  return out;
}

json cmd_sequence(const Options& o) {
  json factors = json::array();
  for (const EulerFactor& f : factor_sequence(o.n).factors) {
    factors.push_back({{"generator", f.generator_index},
                       {"param", f.param_index},
                       {"kind", std::string(to_string(f.kind))},
                       {"level", f.level},
                       {"block", f.block}});
  }
  return {{"n", o.n}, {"factors", std::move(factors)}};
}

json cmd_unitary(const Options& o) {
  if (o.alpha.empty()) throw UsageError("unitary requires --alpha");
  json out = matrix_to_json(unitary(o.n, alpha_or_zero(o)));
  out["n"] = o.n;
  return out;
}

json cmd_kernel(const Options& o) {
  if (o.check_oracle) {
    const OracleReport r = check_oracle(o.n, o.points, o.seed);
    return {{"n", r.n}, {"points", r.points}, {"seed", r.seed}, {"max_relative_deviation", r.max_relative_deviation}};
  }
  if (o.alpha.empty()) throw UsageError("kernel requires --alpha or --check-oracle");
  return {{"n", o.n}, {"value", kernel(o.n, alpha_or_zero(o))}};
}

json cmd_volume(const Options& o) {
  VolumeResult r;
  switch (volume_method_from_string(o.method)) {
    case VolumeMethod::Marinov: r = {o.n, marinov_volume(o.n), VolumeMethod::Marinov, 0.0, 0, 0}; break;
    case VolumeMethod::Quadrature: r = {o.n, quadrature_volume(o.n), VolumeMethod::Quadrature, 0.0, 0, 0}; break;
    case VolumeMethod::MonteCarlo: r = monte_carlo_volume(o.n, o.samples, o.seed, o.workers); break;
  }
  return {{"n", r.n},
          {"method", to_string(r.method)},
          {"value", r.value},
          {"stderr", r.std_error},
          {"samples", r.samples},
          {"seed", r.seed}};
}

json cmd_ranges(const Options& o) {
  const RangeSet box = ranges(o.n, range_mode_from_string(o.mode));
  json out = json::array();
  for (int i = 1; i <= box.size(); ++i) out.push_back({{"param", i}, {"lo", box[i].lo}, {"hi", box[i].hi}});
  return out;
}

json cmd_rho(const Options& o) {
  if (o.theta.empty()) throw UsageError("rho requires --theta");
  DensitySpec spec{o.n, parse_number_list(o.theta), alpha_or_zero(o)};
  const ComplexMatrix rho = density(spec);
  json coefficients = json::array();
  for (const CartanCoefficient& c : rho_coefficients(o.n, spec.theta)) {
    coefficients.push_back({{"level", c.level}, {"generator", c.generator_index}, {"value", c.value}});
  }
  return {{"n", o.n},
          {"matrix", matrix_to_json(rho)},
          {"eigenvalues", rho_diagonal(o.n, spec.theta).eigenvalues},
          {"coefficients", std::move(coefficients)}};
}

json cmd_sample(const Options& o) {
  if (o.what != "unitary" && o.what != "rho") throw UsageError("--what must be unitary or rho");
  HaarSampler sampler({o.n, o.seed, range_mode_from_string(o.sample_mode)});
  const ThetaMode theta_mode = theta_mode_from_string(o.theta_mode);
  json lines = json::array();
  for (int i = 0; i < o.count; ++i) {
    const ComplexMatrix m = o.what == "unitary" ? sampler.sample_unitary() : sampler.sample_density(theta_mode);
    json line = matrix_to_json(m);
    line["n"] = o.n;
    line["index"] = i;
    lines.push_back(std::move(line));
  }
  return lines;
}

json cmd_verify(const Options& o, bool& all_passed) {
  json checks = json::array();
  int failed = 0;
  for (const CheckOutcome& c : run_reference_checks()) {
    if (!c.passed) ++failed;
    spdlog::debug("{} {}: {}", c.passed ? "PASS" : "FAIL", c.name, c.detail);
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  all_passed = failed == 0;
  return {{"suite", o.suite},
          {"passed", static_cast<int>(checks.size()) - failed},
          {"failed", failed},
          {"checks", std::move(checks)}};
}

CommandResult error_result(int exit_code, std::string code, std::string message) {
  CommandResult r;
  r.status = Status::Error;
  r.exit_code = exit_code;
  r.code = std::move(code);
  r.message = std::move(message);
  return r;
}

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Generalized Euler angles for SU(N)", "sun-euler"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "group dimension N")->required()->check(CLI::Range(1, kMaxCliDimension));
  };

  auto* generators = app.add_subcommand("generators", "su(N) generators as JSON");
  add_n(generators);
  generators->add_option("--index", o.index, "emit only lambda_index");

  auto* sequence = app.add_subcommand("sequence", "factor table of U(alpha)");
  add_n(sequence);

  auto* unitary_cmd = app.add_subcommand("unitary", "evaluate U(alpha)");
  add_n(unitary_cmd);
  unitary_cmd->add_option("--alpha", o.alpha, "comma-separated alpha_1..alpha_{N^2-1}");

  auto* kernel_cmd = app.add_subcommand("kernel", "Haar kernel value or oracle comparison");
  add_n(kernel_cmd);
  kernel_cmd->add_option("--alpha", o.alpha, "comma-separated angles");
  kernel_cmd->add_flag("--check-oracle", o.check_oracle, "compare with the one-form determinant");
  kernel_cmd->add_option("--points", o.points, "oracle sample points")->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--seed", o.seed, "RNG seed");

  auto* volume = app.add_subcommand("volume", "SU(N) group volume");
  add_n(volume);
  volume->add_option("--method", o.method, "marinov|quadrature|mc")
      ->check(CLI::IsMember({"marinov", "quadrature", "mc", "monte_carlo"}));
  volume->add_option("--samples", o.samples, "Monte Carlo samples");
  volume->add_option("--seed", o.seed, "RNG seed");
  volume->add_option("--workers", o.workers, "Monte Carlo worker threads")->check(CLI::Range(1, 256));

  auto* ranges_cmd = app.add_subcommand("ranges", "parameter box");
  add_n(ranges_cmd);
  ranges_cmd->add_option("--mode", o.mode, "quotient|covering")->check(CLI::IsMember({"quotient", "covering"}));

  auto* rho = app.add_subcommand("rho", "density matrix U rho_d(theta) U^dagger");
  add_n(rho);
  rho->add_option("--theta", o.theta, "comma-separated theta_1..theta_{N-1}");
  rho->add_option("--alpha", o.alpha, "comma-separated angles (default all zero)");

  auto* sample = app.add_subcommand("sample", "Haar-random unitaries or density matrices, JSON lines");
  add_n(sample);
  sample->add_option("--count", o.count, "number of draws")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--what", o.what, "unitary|rho")->check(CLI::IsMember({"unitary", "rho"}));
  sample->add_option("--mode", o.sample_mode, "box for flat directions: covering|quotient")
      ->check(CLI::IsMember({"quotient", "covering"}));
  sample->add_option("--theta-mode", o.theta_mode, "rho eigenvalues: uniform (not Haar-induced)|endpoints")
      ->check(CLI::IsMember({"uniform", "endpoints"}));

  auto* verify = app.add_subcommand("verify", "replay the published fixtures");
  verify->add_option("--suite", o.suite, "fixture suite")->check(CLI::IsMember({"paper", "reference"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.help = true;
    r.message = (app.get_subcommands().empty() ? &app : app.get_subcommands().front())->help();
    return r;
  } catch (const CLI::CallForAllHelp&) {
    CommandResult r;
    r.help = true;
    r.message = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::ParseError& e) {
    return error_result(kExitUsage, "usage", e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  spdlog::debug("dispatching {}", name);

  CommandResult r;
  if (name == "generators") r.payload = cmd_generators(o);
  else if (name == "sequence") r.payload = cmd_sequence(o);
  else if (name == "unitary") r.payload = cmd_unitary(o);
  else if (name == "kernel") r.payload = cmd_kernel(o);
  else if (name == "volume") r.payload = cmd_volume(o);
  else if (name == "ranges") r.payload = cmd_ranges(o);
  else if (name == "rho") r.payload = cmd_rho(o);
  else if (name == "sample") {
    r.payload = cmd_sample(o);
    r.json_lines = true;
  } else if (name == "verify") {
    bool all_passed = false;
    r.payload = cmd_verify(o, all_passed);
    if (!all_passed) {
      r.status = Status::Error;
      r.exit_code = kExitVerifyFailed;
      r.code = "verification-failed";
      r.message = "one or more fixtures failed";
    }
  }
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    r = dispatch(args);
  } catch (const UsageError& e) {
    r = error_result(kExitUsage, "usage", e.what());
  } catch (const Error& e) {
    const bool numerical = e.code() == ErrorCode::InternalConsistency;
    r = error_result(numerical ? kExitVerifyFailed : kExitUsage, to_string(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    r = error_result(kExitUsage, "invalid-argument", e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void emit(const CommandResult& result, std::ostream& out, std::ostream& err) {
  if (result.help) {
    out << result.message;
    return;
  }
  if (!result.payload.is_null()) {
    if (result.json_lines) {
      for (const auto& line : result.payload) out << line.dump() << '\n';
    } else {
      out << result.payload.dump() << '\n';
    }
  }
  if (result.status == Status::Error) {
    err << json{{"status", "error"}, {"code", result.code}, {"message", result.message}}.dump() << '\n';
  }
}

}  // namespace sun::cli
