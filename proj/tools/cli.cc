// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hyperrec/errors.h"
#include "hyperrec/global_profile.h"
#include "hyperrec/growth.h"
#include "hyperrec/io.h"
#include "hyperrec/local_profile.h"
#include "hyperrec/montecarlo.h"
#include "hyperrec/oracle.h"
#include "hyperrec/verify.h"

namespace hyperrec::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

struct Output {
  std::string json_path;
  std::string csv_path;
  std::string format = "json";
  CLI::Option* format_option = nullptr;
};

void add_output_flags(CLI::App* cmd, Output& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--json", o.json_path, "Write JSON to this path");
  cmd->add_option("--csv", o.csv_path, "Write CSV to this path");
  o.format_option = cmd->add_option("--format", o.format, "Format written to stdout")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

// Writes to the requested paths and prints `summary` to stdout, or, with no
// path, prints the chosen format itself.
void emit(const Output& o, const Json& json, const std::optional<std::string>& csv,
          const std::string& summary, std::ostream& out) {
  require(o.csv_path.empty() || csv, "this command has no CSV form");
  require(o.format != "csv" || csv, "this command has no CSV form");
  if (!o.json_path.empty()) write_file(o.json_path, json.dump(2) + "\n");
  if (!o.csv_path.empty()) write_file(o.csv_path, *csv);
  if (!o.json_path.empty() || !o.csv_path.empty()) {
    out << summary << '\n';
    return;
  }
  if (o.format == "csv") {
    out << *csv;
  } else {
    out << json.dump(2) << '\n';
  }
}

std::uint64_t parse_cap(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && used > 0 && text[0] != '-',
          source + " must be a nonnegative integer, got '" + text + "'");
  return value;
}

std::uint64_t resolve_table_cap(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HYPERREC_TABLE_CAP")) {
    return parse_cap(env, "HYPERREC_TABLE_CAP");
  }
  return kDefaultStirlingCap;
}

// "1/2", "3" or a plain decimal such as "0.25".
Rational parse_exact_number(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  require(!frac.empty() && std::all_of(frac.begin(), frac.end(), ::isdigit),
          "not a decimal number: '" + text + "'");
  const Rational head = whole.empty() || whole == "-" ? Rational(0)
                                                      : parse_rational(whole);
  Rational tail = make_rational(BigInt(frac, 10), pow(Rational(10), frac.size()).get_num());
  if (!whole.empty() && whole[0] == '-') tail = -tail;
  return head + tail;
}

void check_theta(int theta) {
  require(theta >= 2, "--theta must be at least 2, got " + std::to_string(theta));
}

struct SimulateFlags {
  int theta = 0;
  std::uint64_t steps = 0;
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> track_vertex;
  bool emit_state = false;
  bool martingale = false;
  unsigned threads = 1;
  Output output;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  check_theta(f.theta);
  require(f.replicates >= 1, "--replicates must be at least 1");
  require(f.threads >= 1, "--threads must be at least 1");
  require(!(f.emit_state && f.track_vertex), "--emit-state and --track-vertex are exclusive");
  require(!f.track_vertex || *f.track_vertex <= f.steps,
          "--track-vertex must not exceed --steps");

  if (f.emit_state) {
    require(f.output.csv_path.empty() && f.output.format_option->count() == 0,
            "--emit-state writes JSON lines only");
    std::string lines;
    for (std::uint64_t r = 0; r < f.replicates; ++r) {
      TreeState state = init_tree(f.theta, true);
      DrawSource draws = DrawSource::seeded(replicate_seed(f.seed, r));
      for (std::uint64_t i = 0; i < f.steps; ++i) grow(state, draws);
      lines += tree_state_json(state).dump() + "\n";
    }
    if (f.output.json_path.empty()) {
      out << lines;
    } else {
      write_file(f.output.json_path, lines);
      out << "wrote " << f.replicates << " tree states\n";
    }
    return kExitOk;
  }

  SimConfig config;
  config.theta = f.theta;
  config.n = f.steps;
  config.replicates = f.replicates;
  config.master_seed = f.seed;
  config.tracked_vertex = f.track_vertex;
  config.record_martingale = f.martingale;
  config.threads = f.threads;

  if (f.track_vertex) {
    const LocalSample sample = run_local(config);
    emit(f.output, local_sample_json(sample), local_sample_csv(sample),
         "C_{n,k} sample: mean " + format_double(sample.mean) + ", variance " +
             format_double(sample.variance),
         out);
    return kExitOk;
  }
  const GlobalSample sample = run_global(config);
  emit(f.output, global_sample_json(sample), global_sample_csv(sample),
       "X1 mean " + format_double(sample.mean1) + ", X2 mean " +
           format_double(sample.mean2),
       out);
  return kExitOk;
}

struct ExactFlags {
  std::string mode;
  int theta = 0;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> k;
  bool asymptotic = false;
  std::optional<std::uint64_t> table_cap;
  Output output;
};

int cmd_exact(const ExactFlags& f, std::ostream& out) {
  check_theta(f.theta);
  const bool needs_k = f.mode == "pmf" || f.mode == "local-moments";
  require(f.asymptotic || f.n, "--n is required");
  require(!f.asymptotic || f.mode == "cov", "--asymptotic applies to cov only");
  require(!needs_k || f.k, "--k is required for " + f.mode);
  require(needs_k || !f.k, "--k does not apply to " + f.mode);
  if (f.k) {
    if (*f.k > *f.n) throw RangeError("--k must not exceed --n");
  }
  const std::uint64_t cap = resolve_table_cap(f.table_cap);

  if (f.mode == "pmf") {
    PmfOptions options;
    options.max_support = cap;
    const LocalPmf pmf = exact_pmf(f.theta, *f.n, *f.k, options);
    emit(f.output, local_pmf_json(pmf), local_pmf_csv(pmf),
         "pmf over r = 1.." + std::to_string(pmf.support_max()), out);
  } else if (f.mode == "local-moments") {
    const auto m = exact_moments(f.theta, *f.n, *f.k);
    emit(f.output, local_moments_json(f.theta, *f.n, *f.k, m), std::nullopt,
         "mean " + to_string(m.mean) + ", variance " + to_string(m.variance), out);
  } else if (f.mode == "global-moments") {
    const auto m = second_moments_recurrence(f.theta, *f.n);
    emit(f.output, global_moments_json(m, exact_cov(m)), std::nullopt,
         "e1 " + to_string(m.e1) + ", e2 " + to_string(m.e2), out);
  } else if (f.mode == "cov") {
    Json j{{"theta", f.theta}};
    CovMatrix cov;
    if (f.asymptotic) {
      j["scaling"] = "limit of Cov/n";
      cov = asymptotic_cov(f.theta);
    } else {
      j["n"] = *f.n;
      cov = exact_cov(f.theta, *f.n);
    }
    j.update(cov_json(cov));
    emit(f.output, j, std::nullopt,
         "var1 " + to_string(cov.var1) + ", cov12 " + to_string(cov.cov12) +
             ", var2 " + to_string(cov.var2),
         out);
  } else {
    const auto factors = martingale_factors(f.theta, *f.n);
    emit(f.output, martingale_factors_json(f.theta, factors), std::nullopt,
         "r " + to_string(factors.r) + ", s " + to_string(factors.s), out);
  }
  return kExitOk;
}

struct OracleFlags {
  std::string mode;
  int theta = 0;
  std::uint64_t n = 0;
  std::uint64_t max_age = kDefaultDpMaxAge;
  std::uint64_t budget = kDefaultHistoryBudget;
  Output output;
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  check_theta(f.theta);
  if (f.mode == "dp") {
    const auto laws = dp_joint_distribution(f.theta, f.n, f.max_age);
    const auto& law = laws.back();
    emit(f.output, joint_distribution_json(law), std::nullopt,
         std::to_string(law.mass.size()) + " profile states", out);
  } else {
    const auto ensemble = enumerate_histories(f.theta, f.n, f.budget);
    emit(f.output, history_ensemble_json(ensemble), std::nullopt,
         std::to_string(ensemble.outcomes.size()) + " histories", out);
  }
  return kExitOk;
}

struct VerifyFlags {
  std::string suite = "all";
  std::uint64_t seed = kDefaultVerifySeed;
  unsigned threads = 1;
  std::string json_path;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  require(f.threads >= 1, "--threads must be at least 1");
  const Suite suite = parse_suite(f.suite);
  VerifyOptions options;
  options.seed = f.seed;
  options.threads = f.threads;

  std::ofstream file;
  if (!f.json_path.empty()) {
    file.open(f.json_path, std::ios::binary);
    require(static_cast<bool>(file), "cannot open '" + f.json_path + "' for writing");
  }
  bool all_passed = true;
  for (int id : suite_criteria(suite)) {
    const CriterionResult result = run_criterion(id, options);
    all_passed = all_passed && result.passed;
    const std::string line = criterion_json(result).dump() + "\n";
    if (file.is_open()) {
      file << line << std::flush;
      out << "criterion " << id << ' ' << result.name << ": "
          << (result.passed ? "PASS" : "FAIL") << '\n';
    } else {
      out << line << std::flush;
    }
  }
  if (file.is_open()) require(static_cast<bool>(file), "failed writing '" + f.json_path + "'");
  return all_passed ? kExitOk : kExitGateFailed;
}

struct LimitsFlags {
  std::string scope;
  std::string regime = "fixed";
  int theta = 0;
  std::optional<std::string> alpha;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> n;
  std::string k_of_n;
  Output output;
};

int cmd_limits(const LimitsFlags& f, std::ostream& out) {
  check_theta(f.theta);
  if (f.scope == "global") {
    require(f.regime == "fixed" && !f.alpha && !f.k && f.k_of_n.empty(),
            "regime flags apply to local limits only");
    const CltParams params = clt_params(f.theta);
    Json j = clt_params_json(params);
    if (f.n) {
      const double n = static_cast<double>(*f.n);
      j["n"] = *f.n;
      j["center_at_n"] = to_double(params.centering_coeff) * n;
      j["scale_at_n"] = std::sqrt(n);
    }
    emit(f.output, j, std::nullopt,
         "normal limit, variance " + to_string(params.limit_variance), out);
    return kExitOk;
  }

  require(!f.alpha || f.regime == "intermediate", "--alpha needs --regime intermediate");
  require(f.k_of_n.empty() || f.regime == "early", "--k-of-n needs --regime early");
  RegimeSpec regime;
  if (f.regime == "fixed") {
    regime = RegimeSpec::fixed(f.k.value_or(0));
  } else if (f.regime == "early") {
    regime = RegimeSpec::early(f.k_of_n);
  } else if (f.regime == "intermediate") {
    require(f.alpha.has_value(), "--regime intermediate needs --alpha");
    regime = RegimeSpec::intermediate(parse_exact_number(*f.alpha));
  } else {
    regime = RegimeSpec::late();
  }
  const LimitLaw law = limit_law(regime, f.theta);
  Json j = limit_law_json(law);
  if (regime.kind == RegimeKind::kIntermediate) j["alpha"] = rational_json(regime.alpha);
  if (regime.kind == RegimeKind::kFixed) j["k"] = regime.fixed_k;
  if (regime.kind == RegimeKind::kEarly && !f.k_of_n.empty()) j["k_of_n"] = f.k_of_n;
  if (f.n) {
    std::uint64_t k = 0;
    if (regime.kind == RegimeKind::kFixed) {
      k = regime.fixed_k;
    } else if (f.k) {
      k = *f.k;
    } else {
      require(regime.kind == RegimeKind::kIntermediate, "--n needs --k for this regime");
      // check_regime accepts exactly round(alpha n).
      const Rational target = regime.alpha * Rational(BigInt(static_cast<unsigned long>(*f.n)));
      BigInt rounded;
      mpz_fdiv_q(rounded.get_mpz_t(), BigInt(2 * target.get_num() + target.get_den()).get_mpz_t(),
                 BigInt(2 * target.get_den()).get_mpz_t());
      k = rounded.get_ui();
    }
    check_regime(regime, *f.n, k);
    j["n"] = *f.n;
    j["k"] = k;
    j["asymptotic_mean"] = asymptotic_mean(f.theta, *f.n, k, regime);
    j["center_at_n"] = law.center_at(*f.n, k);
    j["scale_at_n"] = law.scale_at(*f.n, k);
  }
  emit(f.output, j, std::nullopt, to_string(law.kind) + " limit", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Containment profile of hyperrecursive trees", "hyperrec"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Grow random trees");
  simulate->add_option("--theta", sim.theta, "Originator count")->required();
  simulate->add_option("--steps", sim.steps, "Growth steps n")->required();
  simulate->add_option("--replicates", sim.replicates)->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Master seed")->required();
  simulate->add_option("--track-vertex", sim.track_vertex, "Label k: sample C_{n,k}");
  simulate->add_flag("--emit-state", sim.emit_state, "One JSON tree state per replicate");
  simulate->add_flag("--martingale", sim.martingale, "Record M_n per replicate");
  simulate->add_option("--threads", sim.threads)->capture_default_str();
  add_output_flags(simulate, sim.output, "csv");

  ExactFlags ex;
  auto* exact = app.add_subcommand("exact", "Exact rational quantities");
  exact->add_option("mode", ex.mode)
      ->required()
      ->check(CLI::IsMember({"pmf", "local-moments", "global-moments", "cov", "martingale"}));
  exact->add_option("--theta", ex.theta)->required();
  exact->add_option("--n", ex.n);
  exact->add_option("--k", ex.k);
  exact->add_flag("--asymptotic", ex.asymptotic, "Limit of Cov/n");
  exact->add_option("--table-cap", ex.table_cap,
                    "Largest n-k for the pmf; overrides HYPERREC_TABLE_CAP");
  add_output_flags(exact, ex.output, "json");

  OracleFlags orc;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference laws");
  oracle->add_option("mode", orc.mode)->required()->check(CLI::IsMember({"dp", "histories"}));
  oracle->add_option("--theta", orc.theta)->required();
  oracle->add_option("--n", orc.n)->required();
  oracle->add_option("--max-age", orc.max_age)->capture_default_str();
  oracle->add_option("--budget", orc.budget)->capture_default_str();
  add_output_flags(oracle, orc.output, "json");

  VerifyFlags ver;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--suite", ver.suite)
      ->check(CLI::IsMember({"exact", "statistical", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", ver.seed)->capture_default_str();
  verify->add_option("--threads", ver.threads)->capture_default_str();
  verify->add_option("--json", ver.json_path, "Write JSON lines here");

  LimitsFlags lim;
  auto* limits = app.add_subcommand("limits", "Limit-law descriptors");
  limits->add_option("scope", lim.scope)->required()->check(CLI::IsMember({"local", "global"}));
  limits->add_option("--theta", lim.theta)->required();
  limits->add_option("--regime", lim.regime)
      ->check(CLI::IsMember({"fixed", "early", "intermediate", "late"}))
      ->capture_default_str();
  limits->add_option("--alpha", lim.alpha, "k/n for the intermediate regime");
  limits->add_option("--k", lim.k);
  limits->add_option("--n", lim.n);
  limits->add_option("--k-of-n", lim.k_of_n, "Description of k(n), early regime");
  add_output_flags(limits, lim.output, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (exact->parsed()) return cmd_exact(ex, out);
    if (oracle->parsed()) return cmd_oracle(orc, out);
    if (verify->parsed()) return cmd_verify(ver, out);
    return cmd_limits(lim, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DegenerateTestError& e) {
    err << "test: " << e.what() << '\n';
    return kExitGateFailed;
  } catch (const InsufficientSampleError& e) {
    err << "test: " << e.what() << '\n';
    return kExitGateFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperrec::cli
