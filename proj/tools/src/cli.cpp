// Copyright 2026 The cuetrunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cuetrunc/cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "cuetrunc/diagnostics.hpp"
#include "cuetrunc/exact_dist.hpp"
#include "cuetrunc/limit_laws.hpp"
#include "cuetrunc/matrix_oracle.hpp"
#include "cuetrunc/special_fn.hpp"

namespace cuetrunc::cli {

namespace {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kDefaultMonteCarlo = 10000;
constexpr std::size_t kDefaultTrials = 100;
constexpr std::size_t kDefaultOracleCount = 2000;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text, std::string_view flag) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError(std::string(flag) + ": not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

// Accepts plain integers and integral values in scientific notation (1e6).
std::int64_t parse_int(std::string_view text, std::string_view flag) {
  std::int64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec == std::errc() && res.ptr == text.data() + text.size()) return v;
  const double d = parse_double(text, flag);
  if (d != std::floor(d) || std::fabs(d) > 9007199254740992.0) {
    throw ValidationError(std::string(flag) + ": not an integer: '" + std::string(text) + "'");
  }
  return static_cast<std::int64_t>(d);
}

std::vector<double> parse_double_list(std::string_view text, std::string_view flag) {
  std::vector<double> out;
  for (const auto part : split(text, ',')) out.push_back(parse_double(part, flag));
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view flag) {
  std::vector<std::int64_t> out;
  for (const auto part : split(text, ',')) out.push_back(parse_int(part, flag));
  return out;
}

Grid parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("--grid: expected lo:hi:step");
  Grid g{parse_double(parts[0], "--grid"), parse_double(parts[1], "--grid"),
         parse_double(parts[2], "--grid")};
  if (!(g.step > 0.0)) throw ValidationError("--grid: step must be positive");
  if (!(g.hi >= g.lo)) throw ValidationError("--grid: hi must not be below lo");
  return g;
}

std::vector<double> grid_or(const RunConfig& cfg, Grid fallback) {
  const Grid g = cfg.grid.value_or(fallback);
  return make_grid(g.lo, g.hi, g.step);
}

std::int64_t resolve_depth(const std::string& rule, std::int64_t n) {
  if (rule == "logsq") return depth_log_squared(n);
  if (rule == "sublog") return depth_sub_log(n);
  return parse_int(rule, "--k");
}

std::vector<EnsembleSpec> specs_for(const RunConfig& cfg) {
  if (cfg.n.empty()) throw ValidationError("--n is required");
  if (cfg.k.has_value() == cfg.p.has_value()) {
    throw ValidationError("exactly one of --k and --p is required");
  }
  std::vector<EnsembleSpec> specs;
  for (const std::int64_t n : cfg.n) {
    try {
      specs.push_back(cfg.k ? EnsembleSpec::from_depth(n, resolve_depth(*cfg.k, n))
                            : EnsembleSpec(n, *cfg.p));
    } catch (const std::domain_error& e) {
      throw ValidationError(e.what());
    }
  }
  return specs;
}

EnsembleSpec single_spec(const RunConfig& cfg) {
  const auto specs = specs_for(cfg);
  if (specs.size() != 1) throw ValidationError("this command takes a single --n");
  return specs.front();
}

std::string regime_list(const std::vector<RegimeLabel>& regimes) {
  std::string out;
  for (const RegimeLabel r : regimes) {
    if (!out.empty()) out += ", ";
    out += to_string(r);
  }
  return out.empty() ? "none" : out;
}

Normalization normalization_for(const EnsembleSpec& spec, const RunConfig& cfg) {
  const RegimeLabel regime = cfg.regime.value_or(classify_regime(spec));
  if (regime == RegimeLabel::kAmbiguous) {
    throw ValidationError("regime is ambiguous for n=" + std::to_string(spec.n()) +
                          " k=" + std::to_string(spec.k()) +
                          "; pass --regime with one of: " +
                          regime_list(candidate_regimes(spec)));
  }
  return normalize(spec, regime);
}

Record spec_record(const EnsembleSpec& spec) {
  Record r;
  r.add("n", spec.n()).add("k", spec.k());
  return r;
}

Record lemma_record(const LemmaCheck& c) {
  Record r;
  r.add("lemma", to_string(c.lemma));
  for (const auto& [key, value] : c.inputs) r.add(key, value);
  const char* sense = "two_sided";
  switch (c.sense) {
    case LemmaCheck::Sense::kTwoSided: sense = "two_sided"; break;
    case LemmaCheck::Sense::kAtMost: sense = "at_most"; break;
    case LemmaCheck::Sense::kBelow: sense = "below"; break;
    case LemmaCheck::Sense::kAbove: sense = "above"; break;
  }
  r.add("observed", c.observed).add("target", c.target).add("tolerance", c.tolerance);
  r.add("sense", std::string(sense)).add("pass", c.pass);
  return r;
}

Record gof_record(const GofReport& g) {
  Record r = spec_record(g.spec);
  r.add("regime", to_string(g.normalization.regime)).add("law", g.law.name());
  r.add("A", g.normalization.A).add("B", g.normalization.B);
  r.add("sample_count", static_cast<std::int64_t>(g.sample_count));
  r.add("excluded", static_cast<std::int64_t>(g.excluded));
  r.add("ks_statistic", g.ks_statistic).add("sup_grid_distance", g.sup_grid_distance);
  return r;
}

std::vector<double> xs_or_zero(const RunConfig& cfg) {
  return cfg.x.empty() ? std::vector<double>{0.0} : cfg.x;
}

std::vector<Record> cmd_constants(const RunConfig& cfg) {
  std::vector<Record> out;
  for (const EnsembleSpec& spec : specs_for(cfg)) {
    const Normalization norm = normalization_for(spec, cfg);
    Record r = spec_record(spec);
    r.add("p", spec.p()).add("regime", to_string(norm.regime));
    if (norm.lambda) {
      r.add("lambda", norm.lambda->lambda).add("residual", norm.lambda->residual);
    }
    if (norm.gamma_root) {
      r.add("a_n", norm.gamma_root->a_n).add("residual", norm.gamma_root->residual);
    }
    r.add("A", norm.A).add("B", norm.B).add("law", norm.law.name());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Record> cmd_cdf(const RunConfig& cfg) {
  const EnsembleSpec spec = single_spec(cfg);
  std::vector<Record> out;
  if (!cfg.r.empty()) {
    for (const double r : cfg.r) {
      if (!(r >= 0.0)) throw ValidationError("--r must be nonnegative");
      Record rec = spec_record(spec);
      rec.add("r", r).add("cdf", radius_cdf(spec, r));
      out.push_back(std::move(rec));
    }
    return out;
  }
  if (cfg.x.empty() && !cfg.grid) throw ValidationError("cdf needs --r, --x or --grid");
  const Normalization norm = normalization_for(spec, cfg);
  const std::vector<double> xs = cfg.x.empty() ? grid_or(cfg, {}) : cfg.x;
  for (const double x : xs) {
    const StandardizedCdf g = standardized_cdf(spec, norm, x);
    Record rec = spec_record(spec);
    rec.add("regime", to_string(norm.regime)).add("law", norm.law.name());
    rec.add("x", x).add("r", norm.A + norm.B * x).add("cdf", g.value);
    rec.add("law_cdf", law_cdf(norm.law, x)).add("clamped", g.clamped);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> cmd_quantile(const RunConfig& cfg) {
  const EnsembleSpec spec = single_spec(cfg);
  if (cfg.q.empty()) throw ValidationError("quantile needs --q");
  std::vector<Record> out;
  for (const double q : cfg.q) {
    if (!(q > 0.0 && q < 1.0)) throw ValidationError("--q must lie in (0, 1)");
    Record rec = spec_record(spec);
    rec.add("q", q).add("r", radius_quantile(spec, q));
    out.push_back(std::move(rec));
  }
  return out;
}

std::size_t require_count(const RunConfig& cfg) {
  if (!cfg.count) throw ValidationError("--count is required");
  return *cfg.count;
}

std::vector<Record> cmd_sample(const RunConfig& cfg, std::string& message) {
  const EnsembleSpec spec = single_spec(cfg);
  const SampleBatch batch = sample_radius(spec, cfg.method, require_count(cfg), cfg.seed);
  if (batch.excluded > 0) {
    message = std::to_string(batch.excluded) + " matrix draws excluded for nonconvergence";
  }
  if (batch.values.empty()) throw ConvergenceError("every draw was excluded");
  std::vector<Record> out;
  out.reserve(batch.values.size());
  for (std::size_t i = 0; i < batch.values.size(); ++i) {
    Record rec;
    rec.add("index", static_cast<std::int64_t>(i)).add("r", batch.values[i]);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> cmd_gof(const RunConfig& cfg) {
  const EnsembleSpec spec = single_spec(cfg);
  const Normalization norm = normalization_for(spec, cfg);
  const std::size_t count = cfg.count.value_or(kDefaultMonteCarlo);
  const GofReport g = goodness_of_fit(spec, norm, cfg.method, count, cfg.seed,
                                      grid_or(cfg, {-3.0, 6.0, 0.1}));
  Record rec = gof_record(g);
  rec.add("method", to_string(cfg.method)).add("seed", cfg.seed);
  rec.add("ks_critical_5pct", ks_critical_value(0.05, std::max<std::size_t>(1, g.sample_count)));
  return {rec};
}

std::vector<Record> cmd_converge(const RunConfig& cfg) {
  const std::vector<double> grid = grid_or(cfg, {-3.0, 6.0, 0.1});
  const std::size_t samples = cfg.count.value_or(0);
  std::vector<Record> out;
  for (const EnsembleSpec& spec : specs_for(cfg)) {
    const Normalization norm = normalization_for(spec, cfg);
    out.push_back(gof_record(goodness_of_fit(spec, norm, SampleMethod::kBetaMax, samples,
                                             cfg.seed, grid)));
  }
  return out;
}

std::vector<Record> cmd_lemma(const RunConfig& cfg) {
  if (!cfg.which) throw ValidationError("lemma needs --which");
  std::vector<Record> out;
  const int which = *cfg.which;
  if (which == 11) {
    if (cfg.n.empty()) throw ValidationError("--n is required");
    for (const std::int64_t n : cfg.n) {
      std::int64_t m = cfg.m.value_or(n / 10);
      if (!cfg.m && (cfg.k || cfg.p)) {
        RunConfig one = cfg;
        one.n = {n};
        m = std::min(n, m_n(single_spec(one)));
      }
      out.push_back(lemma_record(check_lemma11(n, m, cfg.count.value_or(kDefaultTrials), cfg.seed)));
    }
    return out;
  }
  RunConfig with_depth = cfg;
  if (which == 5 && !cfg.k && !cfg.p) with_depth.k = "logsq";
  const std::vector<EnsembleSpec> specs = specs_for(with_depth);
  if (which == 5) {
    for (const LemmaCheck& c : check_lemma5(specs)) out.push_back(lemma_record(c));
    return out;
  }
  for (const EnsembleSpec& spec : specs) {
    switch (which) {
      case 6:
        for (const double x : xs_or_zero(cfg)) {
          out.push_back(lemma_record(check_lemma6(spec, x, false)));
          out.push_back(lemma_record(check_lemma6(spec, x, true)));
        }
        break;
      case 7:
        for (const double x : xs_or_zero(cfg)) out.push_back(lemma_record(check_lemma7(spec, x)));
        break;
      case 8:
        for (const double x : xs_or_zero(cfg)) {
          out.push_back(lemma_record(check_lemma8(spec, x, cfg.window)));
        }
        break;
      case 10:
        for (const double x : xs_or_zero(cfg)) {
          out.push_back(lemma_record(
              check_lemma10(spec, x, cfg.count.value_or(kDefaultMonteCarlo), cfg.seed)));
        }
        break;
      case 12: {
        const GofReport g = check_lemma12(spec, cfg.count.value_or(kDefaultMonteCarlo), cfg.seed,
                                          cfg.window, grid_or(cfg, {-4.0, 4.0, 0.1}));
        Record rec;
        rec.add("lemma", std::string("L12")).add("n", spec.n()).add("k", spec.k());
        rec.add("law", g.law.name()).add("sample_count", static_cast<std::int64_t>(g.sample_count));
        rec.add("seed", cfg.seed);
        rec.add("ks_statistic", g.ks_statistic).add("exact_sup_distance", g.sup_grid_distance);
        rec.add("ks_critical_5pct",
                ks_critical_value(0.05, std::max<std::size_t>(1, g.sample_count)));
        out.push_back(std::move(rec));
        break;
      }
      default:
        throw ValidationError("--which must be one of 5, 6, 7, 8, 10, 11, 12");
    }
  }
  return out;
}

std::vector<Record> cmd_oracle(const RunConfig& cfg, std::string& message) {
  const EnsembleSpec spec = single_spec(cfg);
  const std::size_t count = cfg.count.value_or(kDefaultOracleCount);
  const SampleBatch batch = oracle_radius(spec, count, cfg.seed);
  if (batch.values.empty()) throw ConvergenceError("every oracle draw was excluded");
  if (batch.excluded > 0) {
    message = std::to_string(batch.excluded) + " matrix draws excluded for nonconvergence";
  }
  Record rec = spec_record(spec);
  rec.add("count", static_cast<std::int64_t>(count)).add("seed", cfg.seed);
  rec.add("excluded", static_cast<std::int64_t>(batch.excluded));
  rec.add("ks_statistic", ks_against_radius_cdf(spec, batch.values));
  rec.add("ks_critical_5pct", ks_critical_value(0.05, batch.values.size()));
  return {rec};
}

struct RawArgs {
  std::string n, k, p, regime = "auto", r, x, q, count, seed, method = "beta", grid,
      format = "json", out, which, m, window;
};

RunConfig to_config(const std::string& command, const RawArgs& a) {
  RunConfig cfg;
  static const std::pair<const char*, Command> kCommands[] = {
      {"constants", Command::kConstants}, {"cdf", Command::kCdf},
      {"quantile", Command::kQuantile},   {"sample", Command::kSample},
      {"gof", Command::kGof},             {"converge", Command::kConverge},
      {"lemma", Command::kLemma},         {"oracle", Command::kOracle}};
  for (const auto& [name, cmd] : kCommands) {
    if (command == name) cfg.command = cmd;
  }
  if (!a.n.empty()) {
    cfg.n = parse_int_list(a.n, "--n");
    for (const std::int64_t n : cfg.n) {
      if (n < 2) throw ValidationError("--n must be at least 2");
    }
  }
  if (!a.k.empty()) cfg.k = a.k;
  if (!a.p.empty()) cfg.p = parse_int(a.p, "--p");
  if (a.regime != "auto") {
    cfg.regime = parse_regime(a.regime);
    if (!cfg.regime || *cfg.regime == RegimeLabel::kAmbiguous) {
      throw ValidationError("--regime must be one of auto, thm1, thm2, thm3, thm4");
    }
  }
  if (!a.r.empty()) cfg.r = parse_double_list(a.r, "--r");
  if (!a.x.empty()) cfg.x = parse_double_list(a.x, "--x");
  if (!a.q.empty()) cfg.q = parse_double_list(a.q, "--q");
  if (!a.count.empty()) {
    const std::int64_t c = parse_int(a.count, "--count");
    if (c < 1) throw ValidationError("--count must be at least 1");
    cfg.count = static_cast<std::size_t>(c);
  }
  if (!a.seed.empty()) {
    const auto res = std::from_chars(a.seed.data(), a.seed.data() + a.seed.size(), cfg.seed);
    if (res.ec != std::errc() || res.ptr != a.seed.data() + a.seed.size()) {
      throw ValidationError("--seed must be an unsigned 64-bit integer");
    }
  }
  const auto method = parse_method(a.method);
  if (!method) throw ValidationError("--method must be one of beta, gamma-ratio, matrix");
  cfg.method = *method;
  if (!a.grid.empty()) cfg.grid = parse_grid(a.grid);
  if (a.format == "json") {
    cfg.format = Format::kJson;
  } else if (a.format == "csv") {
    cfg.format = Format::kCsv;
  } else {
    throw ValidationError("--format must be json or csv");
  }
  if (!a.out.empty()) cfg.out = a.out;
  if (!a.which.empty()) {
    const std::int64_t w = parse_int(a.which, "--which");
    if (w != 5 && w != 6 && w != 7 && w != 8 && w != 10 && w != 11 && w != 12) {
      throw ValidationError("--which must be one of 5, 6, 7, 8, 10, 11, 12");
    }
    cfg.which = static_cast<int>(w);
  }
  if (!a.m.empty()) cfg.m = parse_int(a.m, "--m");
  if (!a.window.empty()) cfg.window = parse_int(a.window, "--window");
  return cfg;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    switch (config.command) {
      case Command::kConstants: result.records = cmd_constants(config); break;
      case Command::kCdf: result.records = cmd_cdf(config); break;
      case Command::kQuantile: result.records = cmd_quantile(config); break;
      case Command::kSample: result.records = cmd_sample(config, result.message); break;
      case Command::kGof: result.records = cmd_gof(config); break;
      case Command::kConverge: result.records = cmd_converge(config); break;
      case Command::kLemma: result.records = cmd_lemma(config); break;
      case Command::kOracle: result.records = cmd_oracle(config, result.message); break;
    }
  } catch (const ConvergenceError& e) {
    result = {kExitNumerical, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    result = {kExitValidation, {}, e.what()};
  } catch (const std::logic_error& e) {  // domain_error, out_of_range, length_error
    result = {kExitValidation, {}, e.what()};
  } catch (const std::range_error& e) {
    result = {kExitValidation, {}, e.what()};
  } catch (const std::exception& e) {
    result = {kExitNumerical, {}, e.what()};
  }
  return result;
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(std::random_device{}());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + tmp.string() + " for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.flush();
    if (!file) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot rename onto " + path + ": " + ec.message());
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius of truncated circular unitary matrices"};
  app.require_subcommand(1);
  RawArgs raw;
  const std::pair<const char*, const char*> commands[] = {
      {"constants", "normalizing constants A_n, B_n and the limit law"},
      {"cdf", "exact cdf of the spectral radius (--r) or standardized (--x, --grid)"},
      {"quantile", "exact quantile of the spectral radius"},
      {"sample", "draw spectral radii"},
      {"gof", "goodness of fit of sampled standardized radii to the limit law"},
      {"converge", "sup-grid distance to the limit law along a sequence of n"},
      {"lemma", "numeric and Monte Carlo lemma-level checks"},
      {"oracle", "full-matrix spectral radii against the exact cdf"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", raw.n, "matrix size; comma list where a sequence is accepted");
    sub->add_option("--k", raw.k, "truncation depth n - p, or the rule logsq or sublog");
    sub->add_option("--p", raw.p, "size of the retained block");
    sub->add_option("--regime", raw.regime, "auto, thm1, thm2, thm3 or thm4");
    sub->add_option("--r", raw.r, "radius, comma list allowed");
    sub->add_option("--x", raw.x, "standardized point, comma list allowed");
    sub->add_option("--q", raw.q, "probability, comma list allowed");
    sub->add_option("--count", raw.count, "number of draws, samples or trials");
    sub->add_option("--seed", raw.seed, "64-bit master seed (default 0)");
    sub->add_option("--method", raw.method, "beta, gamma-ratio or matrix");
    sub->add_option("--grid", raw.grid, "lo:hi:step");
    sub->add_option("--format", raw.format, "json or csv");
    sub->add_option("--out", raw.out, "output path, written atomically");
    sub->add_option("--which", raw.which, "lemma: 5, 6, 7, 8, 10, 11 or 12");
    sub->add_option("--m", raw.m, "lemma 11: first index of the partial-sum window");
    sub->add_option("--window", raw.window, "lemma 8 and 12: number of columns j");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  RunConfig cfg;
  try {
    cfg = to_config(app.get_subcommands().front()->get_name(), raw);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  const RunResult result = run(cfg);
  if (!result.message.empty()) {
    err << (result.exit_code == kExitOk ? "note: " : "error: ") << result.message << "\n";
  }
  if (result.exit_code != kExitOk) return result.exit_code;

  try {
    const std::string text = emit(result.records, cfg.format);
    if (cfg.out) {
      write_atomically(*cfg.out, text);
    } else {
      out << text;
      out.flush();
      if (!out) throw IoError("write to standard output failed");
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace cuetrunc::cli
