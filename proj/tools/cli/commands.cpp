#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "cli/format.hpp"
#include "infoscale/infoscale.hpp"

namespace infoscale::cli {
namespace {

using json = nlohmann::json;

struct Outcome {
  std::string text;
  int code = kExitOk;
};

std::string trim(std::string s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  return s.substr(begin, s.find_last_not_of(" \t") - begin + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    T value{};
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw ConfigError(flag + ": cannot parse '" + item + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ScheduleFlags {
  std::string name;
  std::size_t n_tr = 64;
  double epsilon = 0.0;
  std::size_t base_len = 512;
  double fixed_value = 1.0;
};

void add_schedule_flags(CLI::App* cmd, ScheduleFlags& f) {
  cmd->add_option("--schedule", f.name,
                  "vanilla, loglength, softmaxplus, yarn, infoscale or fixed")
      ->capture_default_str();
  cmd->add_option("--n-tr", f.n_tr, "training length")->capture_default_str();
  cmd->add_option("--epsilon", f.epsilon, "InfoScale epsilon")->capture_default_str();
  cmd->add_option("--base-len", f.base_len, "Softmax Plus base length")->capture_default_str();
  cmd->add_option("--fixed-value", f.fixed_value, "multiplier of the fixed schedule")
      ->capture_default_str();
}

TemperatureSchedule make_schedule(const ScheduleFlags& f) {
  TemperatureSchedule s;
  if (f.name == "vanilla") {
    s = Vanilla{};
  } else if (f.name == "loglength") {
    s = LogLength{};
  } else if (f.name == "softmaxplus") {
    s = SoftmaxPlus{f.base_len};
  } else if (f.name == "yarn") {
    s = YarnPreSoftmax{f.n_tr};
  } else if (f.name == "infoscale") {
    s = InfoScale{f.n_tr, 0, f.epsilon};
  } else if (f.name == "fixed") {
    s = FixedTemperature{f.fixed_value};
  } else {
    throw ConfigError("--schedule: unknown schedule '" + f.name + "'");
  }
  validate(s);
  return s;
}

struct PositionalFlags {
  std::string name = "rope";
  double base = kDefaultRopeBase;
  double factor = 4.0;
  std::size_t window = 64;
  std::size_t heads = 8;
  std::size_t head = 0;
};

void add_positional_flags(CLI::App* cmd, PositionalFlags& f) {
  cmd->add_option("--positional", f.name, "nope, rope, pi, rerope or alibi")->capture_default_str();
  cmd->add_option("--base", f.base, "rotary base")->capture_default_str();
  cmd->add_option("--factor", f.factor, "PI interpolation factor")->capture_default_str();
  cmd->add_option("--window", f.window, "ReRoPE clamp window")->capture_default_str();
  cmd->add_option("--heads", f.heads, "ALiBi head count")->capture_default_str();
  cmd->add_option("--head", f.head, "ALiBi head index")->capture_default_str();
}

PositionalScheme make_positional(const PositionalFlags& f) {
  PositionalScheme s;
  if (f.name == "nope") {
    s = NoPE{};
  } else if (f.name == "rope") {
    s = RoPE{f.base};
  } else if (f.name == "pi") {
    s = PIScaledRoPE{f.base, f.factor};
  } else if (f.name == "rerope") {
    s = ReRoPE{f.base, f.window};
  } else if (f.name == "alibi") {
    s = ALiBi{f.heads, f.head};
  } else {
    throw ConfigError("--positional: unknown scheme '" + f.name + "'");
  }
  validate(s);
  return s;
}

struct MaskFlags {
  std::string name = "causal";
  std::size_t w = 64;
  std::optional<std::size_t> sinks;
};

MaskSpec make_mask(const MaskFlags& f) {
  if (f.name == "full") return FullMask{};
  if (f.name == "causal") return CausalMask{};
  if (f.name == "windowed") return WindowedMask{f.w};
  if (f.name == "sinkwindow") return SinkWindowMask{f.sinks.value_or(SinkWindowMask{}.sinks), f.w};
  if (f.name == "lambda") return LambdaMask{f.sinks.value_or(LambdaMask{}.sinks), f.w};
  throw ConfigError("--mask: unknown mask '" + f.name + "'");
}

void require_dim(std::size_t d) { detail::require(d >= 2, "--d must be >= 2"); }

Outcome csv(const SweepResult& r) { return {to_csv(r.columns, r.rows)}; }

json spec_echo(const SweepSpec& s) {
  return json{{"kind", sweep_kind_name(s.kind)},
              {"lengths", s.lengths},
              {"alphas", s.alphas},
              {"dims", s.dims},
              {"deltas", s.deltas},
              {"schedule", schedule_name(s.schedule)},
              {"positional", scheme_name(s.positional)},
              {"d", s.d},
              {"v", s.v},
              {"n", s.n},
              {"window", s.window},
              {"alpha", s.alpha},
              {"bins", s.bins},
              {"trials", s.trials},
              {"tol", s.tol},
              {"seed", s.seed}};
}

struct ScalesCmd {
  std::size_t n_te = 4096;
  std::size_t n_tr = 64;
  std::size_t d = 64;
  double epsilon = 0.0;
  std::size_t base_len = 512;

  void add(CLI::App* cmd) {
    cmd->add_option("--n-te", n_te, "test length")->capture_default_str();
    cmd->add_option("--n-tr", n_tr, "training length")->capture_default_str();
    cmd->add_option("--d", d, "head dimension")->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "InfoScale epsilon")->capture_default_str();
    cmd->add_option("--base-len", base_len, "Softmax Plus base length")->capture_default_str();
  }

  Outcome run() const {
    require_dim(d);
    const std::vector<TemperatureSchedule> schedules = {
        Vanilla{}, LogLength{}, SoftmaxPlus{base_len}, YarnPreSoftmax{n_tr},
        InfoScale{n_tr, d, epsilon}};
    const double root_d = std::sqrt(static_cast<double>(d));
    std::string text = "schedule,multiplier,lambda\n";
    for (const auto& s : schedules) {
      const double m = temperature(s, n_te, d);
      text += schedule_name(s) + "," + format_double(m) + "," + format_double(m / root_d) + "\n";
    }
    return {text};
  }
};

struct Theorem1Cmd {
  std::size_t d = 64;
  std::string alphas = "8,16,32,64,96,128,256";
  double tol = 1e-6;

  void add(CLI::App* cmd) {
    cmd->add_option("--d", d, "head dimension")->capture_default_str();
    cmd->add_option("--alphas", alphas, "comma-separated CosScale values")->capture_default_str();
    cmd->add_option("--tol", tol, "allowed |theoretical - numerical|")->capture_default_str();
  }

  Outcome run(std::ostream& err) const {
    detail::require(tol > 0.0, "--tol must be > 0");
    detail::require(d > 3, "--d must be > 3");
    const auto grid = parse_list<double>(alphas, "--alphas");
    for (double a : grid) detail::require(a > 0.0, "--alphas: values must be > 0");
    const std::size_t dims[] = {d};
    const TheoremCheck check = eta_star_check(grid, dims, tol * 1e-2);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({grid[i], check.theoretical[i], check.numerical[i], check.abs_error[i]});
    }
    Outcome outcome{to_csv({"alpha", "theoretical", "numerical", "abs_error"}, rows)};
    if (check.max_abs_error > tol) {
      err << "theorem1: max abs_error " << format_double(check.max_abs_error) << " exceeds tol "
          << format_double(tol) << "\n";
      outcome.code = kExitNumeric;
    }
    return outcome;
  }
};

struct EntropySweepCmd {
  std::size_t d = 64;
  double v = 1.0;
  std::string lengths = "64,128,256,512,1024,2048,4096";
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
  ScheduleFlags schedule{"infoscale"};

  void add(CLI::App* cmd) {
    cmd->add_option("--d", d, "head dimension")->capture_default_str();
    cmd->add_option("--v", v, "embedding variance")->capture_default_str();
    cmd->add_option("--lengths", lengths, "comma-separated sequence lengths")
        ->capture_default_str();
    cmd->add_option("--trials", trials, "Monte Carlo trials per length")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    add_schedule_flags(cmd, schedule);
  }

  Outcome run() const {
    static const std::vector<std::string> allowed = {"infoscale", "fixed", "loglength",
                                                     "softmaxplus", "yarn"};
    if (std::find(allowed.begin(), allowed.end(), schedule.name) == allowed.end()) {
      throw ConfigError("--schedule: must be one of infoscale, fixed, loglength, softmaxplus, yarn");
    }
    require_dim(d);
    detail::require(trials >= 1, "--trials must be >= 1");
    detail::require(v > 0.0, "--v must be > 0");
    SweepSpec spec;
    spec.kind = SweepKind::EntropyVsLength;
    spec.lengths = parse_list<std::size_t>(lengths, "--lengths");
    for (std::size_t n : spec.lengths) detail::require(n >= 2, "--lengths: values must be >= 2");
    spec.schedule = make_schedule(schedule);
    spec.d = d;
    spec.v = v;
    spec.trials = trials;
    spec.seed = seed;
    return csv(run_sweep(spec));
  }
};

struct AttendCmd {
  std::size_t n = 512;
  std::size_t d = 64;
  double v = 1.0;
  std::uint64_t seed = 0;
  bool cosine = false;
  double cos_scale = 128.0;
  std::size_t mass_window = 64;
  ScheduleFlags schedule{"vanilla"};
  MaskFlags mask;
  PositionalFlags positional;

  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "sequence length")->capture_default_str();
    cmd->add_option("--d", d, "head dimension")->capture_default_str();
    cmd->add_option("--v", v, "embedding variance of the sampled Q, K, V")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd->add_flag("--cosine", cosine, "scaled cosine attention");
    cmd->add_option("--cos-scale", cos_scale, "CosScale alpha")->capture_default_str();
    cmd->add_option("--mass-window", mass_window, "width for mass_in_window")->capture_default_str();
    cmd->add_option("--mask", mask.name, "full, causal, windowed, sinkwindow or lambda")
        ->capture_default_str();
    cmd->add_option("--w", mask.w, "mask window")->capture_default_str();
    cmd->add_option("--sinks", mask.sinks, "sink tokens (default 4 sinkwindow, 5 lambda)");
    add_schedule_flags(cmd, schedule);
    add_positional_flags(cmd, positional);
  }

  Outcome run() const {
    AttentionSpec spec;
    spec.n = n;
    spec.d_k = d;
    spec.schedule = make_schedule(schedule);
    spec.mask = make_mask(mask);
    spec.positional = make_positional(positional);
    spec.cosine = cosine;
    spec.cos_scale = cos_scale;
    validate(spec);
    detail::require(mass_window >= 1, "--mass-window must be >= 1");

    const double radius = embedding_radius(v, d);
    const SeededRng root(seed);
    SeededRng rq = root.fork(0);
    SeededRng rk = root.fork(1);
    SeededRng rv = root.fork(2);
    const Matrix q = sample_hypersphere(rq, d, radius, n);
    const Matrix k = sample_hypersphere(rk, d, radius, n);
    const Matrix val = sample_hypersphere(rv, d, radius, n);
    const AttentionResult result = attend(q, k, val, spec);
    const std::vector<double> entropy = entropy_exact(result.probs);

    json j;
    j["config"] = {{"n", n},
                   {"d", d},
                   {"v", v},
                   {"seed", seed},
                   {"schedule", schedule_name(spec.schedule)},
                   {"n_tr", schedule.n_tr},
                   {"epsilon", schedule.epsilon},
                   {"base_len", schedule.base_len},
                   {"fixed_value", schedule.fixed_value},
                   {"mask", mask_name(spec.mask)},
                   {"w", mask.w},
                   {"positional", scheme_name(spec.positional)},
                   {"cosine", cosine},
                   {"cos_scale", cos_scale},
                   {"mass_window", mass_window}};
    j["temperature"] = n >= 2 ? temperature(spec.schedule, n, d) : 1.0;
    j["per_row_entropy"] = entropy;
    j["mean_entropy"] = mean_and_stderr(entropy).mean;
    j["mass_in_window"] = mass_in_window(result.probs, mass_window);
    j["last_row_allowed"] = allowed_in_row(spec.mask, n, n - 1);
    return {j.dump(2) + "\n"};
  }
};

struct HistogramCmd {
  std::size_t n = 512;
  std::size_t d = 64;
  std::size_t bins = 100;
  std::uint64_t seed = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "vectors per side")->capture_default_str();
    cmd->add_option("--d", d, "dimension")->capture_default_str();
    cmd->add_option("--bins", bins, "histogram bins")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  }

  Outcome run() const {
    require_dim(d);
    detail::require(n >= 1, "--n must be >= 1");
    SweepSpec spec;
    spec.kind = SweepKind::CosHistogram;
    spec.n = n;
    spec.d = d;
    spec.bins = bins;
    spec.seed = seed;
    return csv(run_sweep(spec));
  }
};

struct HeatmapCmd {
  std::size_t n = 64;
  std::size_t d = 64;
  double alpha = 128.0;
  std::uint64_t seed = 0;
  std::string stage = "post";
  PositionalFlags positional;

  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "sequence length")->capture_default_str();
    cmd->add_option("--d", d, "dimension")->capture_default_str();
    cmd->add_option("--alpha", alpha, "CosScale alpha")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd->add_option("--stage", stage, "pre or post (positional transform)")->capture_default_str();
    add_positional_flags(cmd, positional);
  }

  Outcome run() const {
    detail::require(stage == "pre" || stage == "post", "--stage must be pre or post");
    detail::require(n >= 1, "--n must be >= 1");
    require_dim(d);
    SweepSpec spec;
    spec.kind = SweepKind::QkHeatmap;
    spec.n = n;
    spec.d = d;
    spec.alpha = alpha;
    spec.seed = seed;
    spec.positional = make_positional(positional);
    const SweepResult r = run_sweep(spec);
    const std::size_t column = stage == "pre" ? 2 : 3;
    std::vector<std::vector<double>> rows;
    rows.reserve(r.rows.size());
    for (const auto& row : r.rows) rows.push_back({row[0], row[1], row[column]});
    return {to_csv({"i", "j", "value"}, rows)};
  }
};

struct LaplaceCmd {
  std::string d_list = "16,32,64,128,256";
  std::string kind = "sin";
  double lambda_v = 0.1;

  void add(CLI::App* cmd) {
    cmd->add_option("--d-list", d_list, "comma-separated dimensions")->capture_default_str();
    cmd->add_option("--kind", kind, "sin or boltzmann")->capture_default_str();
    cmd->add_option("--lambda-v", lambda_v, "lambda v for the boltzmann check (alpha = lambda v d)")
        ->capture_default_str();
  }

  Outcome run() const {
    detail::require(kind == "sin" || kind == "boltzmann", "--kind must be sin or boltzmann");
    const auto dims = parse_list<std::size_t>(d_list, "--d-list");
    for (std::size_t d : dims) detail::require(d >= 4, "--d-list: values must be >= 4");
    if (kind == "boltzmann") detail::require(lambda_v > 0.0, "--lambda-v must be > 0");
    std::vector<std::vector<double>> rows;
    for (std::size_t d : dims) {
      const LaplaceCheck c =
          kind == "sin" ? laplace_sin_integral_check(d)
                        : laplace_boltzmann_integral_check(lambda_v * static_cast<double>(d), d);
      rows.push_back({static_cast<double>(d), c.exact, c.approx, c.rel_error});
    }
    return {to_csv({"d", "exact", "approx", "rel_error"}, rows)};
  }
};

struct DominanceCmd {
  std::size_t n = 256;
  std::size_t d = 64;
  double alpha = 128.0;
  std::string deltas = "0.1,0.01,0.001";
  std::uint64_t seed = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "sequence length")->capture_default_str();
    cmd->add_option("--d", d, "dimension")->capture_default_str();
    cmd->add_option("--alpha", alpha, "CosScale alpha")->capture_default_str();
    cmd->add_option("--deltas", deltas, "comma-separated cosine spreads")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  }

  Outcome run() const {
    SweepSpec spec;
    spec.kind = SweepKind::DominanceVsDelta;
    spec.n = n;
    spec.d = d;
    spec.alpha = alpha;
    spec.deltas = parse_list<double>(deltas, "--deltas");
    spec.seed = seed;
    return csv(run_sweep(spec));
  }
};

struct SweepCmd {
  std::string kind = "eta-star-curve";
  std::string lengths = "64,128,256,512,1024,2048,4096";
  std::string alphas = "8,16,32,64,96,128,256";
  std::string dims = "64";
  std::string deltas = "0.1,0.01,0.001";
  std::size_t d = 64;
  double v = 1.0;
  std::size_t n = 512;
  std::size_t window = 64;
  double alpha = 128.0;
  std::size_t bins = 100;
  std::size_t trials = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string format = "csv";
  ScheduleFlags schedule{"infoscale"};
  PositionalFlags positional;

  void add(CLI::App* cmd) {
    cmd->add_option("--kind", kind,
                    "entropy-vs-length, cos-histogram, qk-heatmap, eta-star-curve, "
                    "laplace-error-curve, mass-in-window-vs-alpha or dominance-vs-delta")
        ->capture_default_str();
    cmd->add_option("--lengths", lengths, "comma-separated lengths")->capture_default_str();
    cmd->add_option("--alphas", alphas, "comma-separated alphas")->capture_default_str();
    cmd->add_option("--dims", dims, "comma-separated dimensions")->capture_default_str();
    cmd->add_option("--deltas", deltas, "comma-separated cosine spreads")->capture_default_str();
    cmd->add_option("--d", d, "dimension")->capture_default_str();
    cmd->add_option("--v", v, "embedding variance")->capture_default_str();
    cmd->add_option("--n", n, "sequence length")->capture_default_str();
    cmd->add_option("--mass-window", window, "width for mass_in_window")->capture_default_str();
    cmd->add_option("--alpha", alpha, "CosScale alpha")->capture_default_str();
    cmd->add_option("--bins", bins, "histogram bins")->capture_default_str();
    cmd->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    cmd->add_option("--tol", tol, "argmax tolerance")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd->add_option("--timestamp", timestamp, "provenance timestamp (JSON output)");
    cmd->add_option("--format", format, "csv or json")->capture_default_str();
    add_schedule_flags(cmd, schedule);
    add_positional_flags(cmd, positional);
  }

  Outcome run() const {
    detail::require(format == "csv" || format == "json", "--format must be csv or json");
    require_dim(d);
    SweepSpec spec;
    spec.kind = parse_sweep_kind(kind);
    spec.lengths = parse_list<std::size_t>(lengths, "--lengths");
    spec.alphas = parse_list<double>(alphas, "--alphas");
    spec.dims = parse_list<std::size_t>(dims, "--dims");
    spec.deltas = parse_list<double>(deltas, "--deltas");
    spec.schedule = make_schedule(schedule);
    spec.positional = make_positional(positional);
    spec.d = d;
    spec.v = v;
    spec.n = n;
    spec.window = window;
    spec.alpha = alpha;
    spec.bins = bins;
    spec.trials = trials;
    spec.tol = tol;
    spec.seed = seed;
    spec.timestamp = timestamp;
    const SweepResult r = run_sweep(spec);
    if (format == "csv") return csv(r);
    json j;
    j["spec"] = spec_echo(r.spec);
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["provenance"] = {{"seed", r.provenance.seed},
                       {"version", r.provenance.version},
                       {"timestamp", r.provenance.timestamp}};
    return {j.dump(2) + "\n"};
  }
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open --out file '" + path + "'");
  file << text;
  if (!file) throw NumericalError("failed writing '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attention scale-temperature laboratory", "infoscale"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(INFOSCALE_VERSION));

  std::string out_path;
  std::string config_path;
  std::vector<std::pair<CLI::App*, std::function<Outcome()>>> commands;

  ScalesCmd scales;
  Theorem1Cmd theorem1;
  EntropySweepCmd entropy_sweep;
  AttendCmd attend_cmd;
  HistogramCmd histogram;
  HeatmapCmd heatmap;
  LaplaceCmd laplace;
  DominanceCmd dominance;
  SweepCmd sweep;

  auto add = [&](const std::string& name, const std::string& help, auto& cmd, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--out", out_path, "write the result here instead of stdout");
    sub->add_option("--config", config_path, "flat key=value file; command-line flags win");
    cmd.add(sub);
    commands.emplace_back(sub, fn);
  };
  add("scales", "temperature multiplier of every schedule (CSV)", scales,
      [&] { return scales.run(); });
  add("theorem1", "closed-form vs numerical eta* (CSV; exit 3 above --tol)", theorem1,
      [&] { return theorem1.run(err); });
  add("entropy-sweep", "Monte Carlo entropy against sequence length (CSV)", entropy_sweep,
      [&] { return entropy_sweep.run(); });
  add("attend", "one attention pass on sampled inputs (JSON summary)", attend_cmd,
      [&] { return attend_cmd.run(); });
  add("histogram", "histogram of causal-pair cosines (CSV)", histogram,
      [&] { return histogram.run(); });
  add("heatmap", "normalized QK heatmap as i,j,value (CSV)", heatmap,
      [&] { return heatmap.run(); });
  add("laplace", "Laplace approximation errors (CSV)", laplace, [&] { return laplace.run(); });
  add("dominance", "positional dominance rank correlation (CSV)", dominance,
      [&] { return dominance.run(); });
  add("sweep", "any diagnostic sweep (CSV or JSON)", sweep, [&] { return sweep.run(); });

  try {
    const std::vector<std::string> args = expand_config(raw_args);
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) {
        const Outcome outcome = fn();
        write_output(outcome.text, out_path, out);
        return outcome.code;
      }
    }
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace infoscale::cli
