// critlab: batch driver for the criticality laboratory.
//
// Subcommands: seminorm | scan | wave | green | transmute | verify.
// Every run writes CSV outputs plus a manifest.txt echoing the effective
// configuration into --out; values from --config (key=value with
// [subcommand] sections) are overridden by command-line flags.
//
// Exit codes: 0 success, 1 usage error, 2 numerical guard tripped,
// 3 property violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critlab/csv.hpp"
#include "critlab/density.hpp"
#include "critlab/fitting.hpp"
#include "critlab/operators.hpp"
#include "critlab/profiles.hpp"
#include "critlab/semigroup.hpp"
#include "critlab/transform.hpp"
#include "critlab/wave.hpp"

namespace {

using namespace critlab;

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: \"" + s + "\"");
  }
  if (pos != s.size()) throw std::invalid_argument("not a number: \"" + s + "\"");
  return v;
}

// "a,b,c" or "lo:hi:step" (inclusive endpoints, integer-indexed steps).
std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 3) {
      throw std::invalid_argument("alpha range must be lo:hi:step, got \"" + text
                                  + "\"");
    }
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw std::invalid_argument("alpha range needs hi >= lo and step > 0");
    }
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= n; ++i) out.push_back(lo + i * step);
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(to_double(tok));
  }
  return out;
}

std::vector<double> log_time_grid(double t_min, double t_max, int per_decade) {
  if (!(t_min > 0.0) || !(t_max > t_min)) {
    throw std::invalid_argument("time grid needs 0 < tmin < tmax");
  }
  if (per_decade < 1 || per_decade > 512) {
    throw std::invalid_argument("points-per-decade must lie in [1, 512]");
  }
  const int n = std::max(
      1, static_cast<int>(std::ceil(std::log10(t_max / t_min) * per_decade)));
  std::vector<double> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) / n);
  }
  return t;
}

// CSV with word cells (verdicts, model names) alongside format_full numbers.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << header[i] << (i + 1 < header.size() ? "," : "");
    }
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i] << (i + 1 < row.size() ? "," : "");
      }
      out << "\n";
    }
  }
};

struct Manifest {
  std::map<std::string, std::string> kv;

  void set(const std::string& key, const std::string& value) { kv[key] = value; }
  void set(const std::string& key, double value) { kv[key] = format_full(value); }
  void set(const std::string& key, int value) { kv[key] = std::to_string(value); }
  void set(const std::string& key, std::uint64_t value) {
    kv[key] = std::to_string(value);
  }

  void write(const std::filesystem::path& dir) const {
    std::ofstream out(dir / "manifest.txt");
    if (!out) {
      throw std::runtime_error("cannot open " + (dir / "manifest.txt").string());
    }
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
  }
};

struct CommonOpts {
  std::string op = "free:3";
  std::string data = "gaussian(1)";
  int grid_m = 256;
  double grid_r = 40.0;
  std::string out = ".";
  std::uint64_t seed = 12345;
};

std::filesystem::path prepare_out(const CommonOpts& c) {
  std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  return dir;
}

// Data invariants owned by the harness: profiles must be supported inside
// (0, R), and inverse-square runs need data supported away from the origin.
SampledFunction load_data(const std::shared_ptr<SpectralTransform>& T,
                          const ModelOperator& op, const std::string& spec) {
  RadialProfile profile = parse_profile(spec);
  if (profile.support_radius > T->radius()) {
    std::ostringstream msg;
    msg << "data \"" << spec << "\" extends to r = " << profile.support_radius
        << ", outside the grid radius R = " << T->radius();
    throw std::invalid_argument(msg.str());
  }
  if (op.kind == OperatorKind::HardyRadial && profile.value(0.0) != 0.0) {
    std::ostringstream msg;
    msg << "data \"" << spec
        << "\" does not vanish at the origin; inverse-square runs need data "
           "supported away from r = 0 (use bump or annulus)";
    throw std::invalid_argument(msg.str());
  }
  return SampledFunction::from_profile(T, profile);
}

void fill_common(Manifest& m, const std::string& sub, const CommonOpts& c,
                 bool with_data = true) {
  m.set("subcommand", sub);
  m.set("op", c.op);
  if (with_data) m.set("data", c.data);
  m.set("grid-m", c.grid_m);
  m.set("grid-r", c.grid_r);
  m.set("out", c.out);
  m.set("seed", c.seed);
}

// ---------------------------------------------------------------------------
// seminorm: both routes per alpha, with agreement column; also emits the heat
// decay curve used by the time route.
struct SeminormOpts : CommonOpts {
  std::string alpha;
  double t_min = 1e-4;
  double t_max = 1e6;
  int per_decade = 32;
};

int cmd_seminorm(const SeminormOpts& o) {
  const std::vector<double> alphas = parse_alpha_list(o.alpha);
  if (alphas.empty()) {
    throw std::invalid_argument("seminorm needs a nonempty --alpha list");
  }
  const ModelOperator op = parse_operator(o.op);
  auto T = std::make_shared<SpectralTransform>(op, o.grid_m, o.grid_r);
  const SampledFunction g = load_data(T, op, o.data);
  SpectralDensity density(g, o.t_max);

  SeminormOptions sopt;
  sopt.t_min = o.t_min;
  sopt.t_max = o.t_max;
  sopt.points_per_decade = o.per_decade;

  TextTable table;
  table.header = {"alpha",      "time_verdict", "time_value", "time_slope",
                  "freq_verdict", "freq_value", "freq_margin", "agreement"};
  for (const double a : alphas) {
    const SeminormResult rt = seminorm_time(g, a, sopt, &density);
    const SeminormResult rf = seminorm_freq(g, a, &density);
    const bool both = rt.verdict == SeminormVerdict::Finite
        && rf.verdict == SeminormVerdict::Finite;
    const double agreement =
        both ? std::fabs(rt.value - rf.value) / rf.value
             : std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back({format_full(a), verdict_name(rt.verdict),
                          format_full(rt.value), format_full(rt.tail_slope),
                          verdict_name(rf.verdict), format_full(rf.value),
                          format_full(rf.tail_slope), format_full(agreement)});
    std::cout << "alpha=" << a << " time=" << verdict_name(rt.verdict) << " "
              << format_full(rt.value) << " freq=" << verdict_name(rf.verdict)
              << " " << format_full(rf.value) << " agreement="
              << format_full(agreement) << "\n";
  }

  const auto dir = prepare_out(o);
  table.write(dir / "seminorm.csv");

  TextTable heat;
  heat.header = {"t", "heat_norm"};
  for (const double t : log_time_grid(o.t_min, o.t_max, 8)) {
    heat.rows.push_back(
        {format_full(t), format_full(std::sqrt(density.heat_norm_sq(t)))});
  }
  heat.write(dir / "heat.csv");

  Manifest m;
  fill_common(m, "seminorm", o);
  m.set("alpha", o.alpha);
  m.set("tmin", o.t_min);
  m.set("tmax", o.t_max);
  m.set("points-per-decade", o.per_decade);
  m.write(dir);
  return 0;
}

// ---------------------------------------------------------------------------
// scan: frequency-route scan with time-route cross-checks at the bracket.
struct ScanOpts : CommonOpts {
  std::string alpha = "0.02:1.4:0.02";
  double t_max = 1e6;
};

int cmd_scan(const ScanOpts& o) {
  const std::vector<double> alphas = parse_alpha_list(o.alpha);
  if (alphas.size() < 2) {
    throw std::invalid_argument("scan needs an alpha range lo:hi:step");
  }
  const ModelOperator op = parse_operator(o.op);
  auto T = std::make_shared<SpectralTransform>(op, o.grid_m, o.grid_r);
  const SampledFunction g = load_data(T, op, o.data);

  const double lo = alphas.front();
  const double hi = alphas.back();
  const double step = alphas[1] - alphas[0];
  const IntervalEstimate est = scan_interval(g, lo, hi, step);

  TextTable table;
  table.header = {"alpha", "verdict", "value", "tail_slope"};
  for (const ScanRow& row : est.rows) {
    table.rows.push_back({format_full(row.alpha), verdict_name(row.verdict),
                          format_full(row.value), format_full(row.margin)});
  }
  const auto dir = prepare_out(o);
  table.write(dir / "scan.csv");

  Manifest m;
  fill_common(m, "scan", o);
  m.set("alpha", o.alpha);
  m.set("tmax", o.t_max);
  m.write(dir);

  char lo_s[32], hi_s[32];
  std::snprintf(lo_s, sizeof lo_s, "%.6g", est.lo);
  std::snprintf(hi_s, sizeof hi_s, "%.6g", est.hi);
  std::cout << "sup I_S ∈ [" << lo_s << ", "
            << (est.bracketed ? hi_s : "inf") << "]\n";
  std::cout << "analytic sup = " << est.analytic.sup_alpha << " ("
            << (est.analytic.verdict == CriticalityVerdict::Subcritical
                    ? "subcritical"
                    : "critical")
            << "), monotone=" << (est.monotone ? "yes" : "no")
            << ", cross-check=" << (est.cross_checked ? "ok" : "conflict")
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// wave: decay curve with the three-way growth fit.
struct WaveOpts : CommonOpts {
  double t_min = 0.1;
  double t_max = 1e5;
  int per_decade = 8;
  double window = 1.0;
};

int cmd_wave(const WaveOpts& o) {
  const ModelOperator op = parse_operator(o.op);
  auto T = std::make_shared<SpectralTransform>(op, o.grid_m, o.grid_r);
  const SampledFunction g = load_data(T, op, o.data);
  const DecayCurve curve =
      wave_decay_curve(g, log_time_grid(o.t_min, o.t_max, o.per_decade), o.window);

  const std::string model = growth_model_name(curve.fit.model);
  const double residual = curve.fit.residual(curve.fit.model);
  TextTable table;
  table.header = {"t", "wave_norm", "model", "residual"};
  for (std::size_t i = 0; i < curve.t.size(); ++i) {
    table.rows.push_back({format_full(curve.t[i]), format_full(curve.value[i]),
                          model, format_full(residual)});
  }
  const auto dir = prepare_out(o);
  table.write(dir / "wave.csv");

  Manifest m;
  fill_common(m, "wave", o);
  m.set("tmin", o.t_min);
  m.set("tmax", o.t_max);
  m.set("points-per-decade", o.per_decade);
  m.set("window", o.window);
  m.write(dir);

  std::cout << "model=" << model << " parameter=" << format_full(curve.fit.parameter)
            << " residual=" << format_full(residual) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// green: generalized kernel at one pair of points, one row per alpha.
struct GreenOpts : CommonOpts {
  std::string alpha = "0.5";
  double x = 1.0;
  double y = 0.0;
  double t_max = 1e6;
};

int cmd_green(const GreenOpts& o) {
  const std::vector<double> alphas = parse_alpha_list(o.alpha);
  if (alphas.empty()) {
    throw std::invalid_argument("green needs a nonempty --alpha list");
  }
  const ModelOperator op = parse_operator(o.op);

  TextTable table;
  table.header = {"alpha", "verdict", "value", "tail_slope"};
  for (const double a : alphas) {
    const GreenResult r = green_kernel(op, o.x, o.y, a, o.t_max);
    table.rows.push_back({format_full(a), verdict_name(r.verdict),
                          format_full(r.value), format_full(r.tail_slope)});
    std::cout << "alpha=" << a << " verdict=" << verdict_name(r.verdict)
              << " value=" << format_full(r.value) << "\n";
  }
  const auto dir = prepare_out(o);
  table.write(dir / "green.csv");

  Manifest m;
  fill_common(m, "green", o, /*with_data=*/false);
  m.set("alpha", o.alpha);
  m.set("x", o.x);
  m.set("y", o.y);
  m.set("tmax", o.t_max);
  m.write(dir);
  return 0;
}

// ---------------------------------------------------------------------------
// transmute: subordination identity residuals at the requested times.
struct TransmuteOpts : CommonOpts {
  std::string times = "0.5,1,2";
};

int cmd_transmute(const TransmuteOpts& o) {
  const std::vector<double> times = parse_alpha_list(o.times);
  if (times.empty()) {
    throw std::invalid_argument("transmute needs a nonempty --times list");
  }
  const ModelOperator op = parse_operator(o.op);
  auto T = std::make_shared<SpectralTransform>(op, o.grid_m, o.grid_r);
  const SampledFunction g = load_data(T, op, o.data);

  TextTable table;
  table.header = {"t", "rel_error"};
  for (const double t : times) {
    const double err = transmutation_error(g, t);
    table.rows.push_back({format_full(t), format_full(err)});
    std::cout << "t=" << t << " rel_error=" << format_full(err) << "\n";
  }
  const auto dir = prepare_out(o);
  table.write(dir / "transmute.csv");

  Manifest m;
  fill_common(m, "transmute", o);
  m.set("times", o.times);
  m.write(dir);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the property battery.  Guard trips are reported and continue the
// battery; any outright property violation dominates the exit code.
struct VerifyOpts : CommonOpts {};

struct VerifyReport {
  std::vector<std::string> lines;
  int failures = 0;
  int guards = 0;
  int checks = 0;

  void check(const std::string& name, bool ok, const std::string& detail) {
    ++checks;
    if (!ok) ++failures;
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + name + " " + detail);
  }
  void guard(const std::string& name, const std::string& what) {
    ++checks;
    ++guards;
    lines.push_back("GUARD " + name + " " + what);
  }
};

std::string rel_detail(double value, double tol) {
  std::ostringstream os;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  os << "value=" << buf;
  std::snprintf(buf, sizeof buf, "%.0e", tol);
  os << " tol=" << buf;
  return os.str();
}

int cmd_verify(const VerifyOpts& o) {
  const char* kinds[] = {"free1d",    "free:2",        "free:3",
                         "free:5",    "hardy:3:1",     "hardy:3:-0.25"};
  VerifyReport rep;
  std::ostringstream head;
  head << "verify: grid-m=" << o.grid_m << " grid-r=" << format_full(o.grid_r)
       << " seed=" << o.seed;
  rep.lines.push_back(head.str());

  for (const char* opname : kinds) {
    const ModelOperator op = parse_operator(opname);
    auto T = std::make_shared<SpectralTransform>(op, o.grid_m, o.grid_r);
    const std::string tag = opname;
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);

    // Round trip + Plancherel on seeded band-limited data.
    {
      SpectralFunction gh{T, std::vector<double>(T->size(), 0.0)};
      for (int i = 0; i < T->size() / 2; ++i) {
        gh.ghat[i] = U(rng) * std::exp(-8.0 * i / T->size());
      }
      const SampledFunction back = inverse(gh);
      const SpectralFunction again = forward(back);
      double num = 0.0, den = 0.0, phys = 0.0, spec = 0.0;
      for (int i = 0; i < T->size(); ++i) {
        const double d = again.ghat[i] - gh.ghat[i];
        num += T->spectral_measure(i) * d * d;
        den += T->spectral_measure(i) * gh.ghat[i] * gh.ghat[i];
        phys += T->physical_measure(i) * back.h[i] * back.h[i];
        spec += T->spectral_measure(i) * gh.ghat[i] * gh.ghat[i];
      }
      const double roundtrip = std::sqrt(num / den);
      const double plancherel = std::fabs(phys - spec) / spec;
      rep.check("roundtrip " + tag, roundtrip < 1e-8, rel_detail(roundtrip, 1e-8));
      rep.check("plancherel " + tag, plancherel < 1e-8,
                rel_detail(plancherel, 1e-8));
    }

    // Route agreement at a comfortably interior alpha.  The annulus stays
    // representable even on coarse grids, whose first node can land beyond
    // narrow bump data.
    try {
      const SampledFunction g = load_data(T, op, "annulus(1,30)");
      SpectralDensity density(g, 1e6);
      const double a = 0.4 * classify(op).sup_alpha;
      const SeminormResult rt = seminorm_time(g, a, SeminormOptions{}, &density);
      const SeminormResult rf = seminorm_freq(g, a, &density);
      const bool both = rt.verdict == SeminormVerdict::Finite
          && rf.verdict == SeminormVerdict::Finite;
      const double rel =
          both ? std::fabs(rt.value - rf.value) / rf.value : 1.0;
      rep.check("routes " + tag, both && rel < 1e-3, rel_detail(rel, 1e-3));

      // Transmutation residual.
      const double terr = transmutation_error(g, 1.0);
      rep.check("transmutation " + tag, terr < 1e-4, rel_detail(terr, 1e-4));

      // Energy conservation across four decades.
      try {
        const WaveState w0 = wave_evolve(g, 1e-3);
        const double e0 = w0.energy();
        double drift = 0.0;
        for (const double t : {1.0, 10.0, 100.0, 1000.0}) {
          const WaveState w = wave_evolve(g, t);
          drift = std::max(drift, std::fabs(w.energy() - e0) / e0);
        }
        rep.check("energy " + tag, drift < 1e-10, rel_detail(drift, 1e-10));
      } catch (const resolution_error& e) {
        rep.guard("energy " + tag, e.what());
      }
    } catch (const resolution_error& e) {
      rep.guard("routes " + tag, e.what());
    }

    // Interpolation inequality on seeded band-limited data.
    {
      double worst = 0.0;
      double half_dev = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        SpectralFunction gh{T, std::vector<double>(T->size(), 0.0)};
        for (int i = 0; i < T->size() / 2; ++i) {
          gh.ghat[i] = U(rng) * std::exp(-8.0 * i / T->size());
        }
        for (const double a : {0.1, 0.25, 0.4}) {
          worst = std::max(worst, interpolation_check(gh, a).ratio);
        }
        half_dev = std::max(
            half_dev, std::fabs(interpolation_check(gh, 0.5).ratio - 1.0));
      }
      rep.check("interpolation " + tag, worst <= 1.0 + 1e-6,
                rel_detail(worst, 1.0 + 1e-6));
      rep.check("half-identity " + tag, half_dev <= 1e-6,
                rel_detail(half_dev, 1e-6));
    }
  }

  std::ostringstream tail;
  tail << "verify: " << rep.checks << " checks, "
       << (rep.checks - rep.failures - rep.guards) << " passed, " << rep.failures
       << " failed, " << rep.guards << " guard trips";
  rep.lines.push_back(tail.str());

  const auto dir = prepare_out(o);
  std::ofstream out(dir / "verify_report.txt");
  for (const auto& line : rep.lines) {
    out << line << "\n";
    std::cout << line << "\n";
  }

  Manifest m;
  fill_common(m, "verify", o, /*with_data=*/false);
  m.write(dir);

  if (rep.failures > 0) return 3;
  if (rep.guards > 0) return 2;
  return 0;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_data = true) {
  sub->fallthrough();  // lets --config appear after the subcommand name
  sub->add_option("--op", o.op, "Operator spec: free1d | free:N | hardy:N:lambda")
      ->capture_default_str();
  if (with_data) {
    sub->add_option("--data", o.data,
                    "Data spec: gaussian(w) | bump(c,w) | annulus(r0,r1)")
        ->join(',')
        ->capture_default_str();
  }
  sub->add_option("--grid-m", o.grid_m, "Grid size M")->capture_default_str();
  sub->add_option("--grid-r", o.grid_r, "Grid radius R")->capture_default_str();
  sub->add_option("--out", o.out, "Output directory")->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for randomized property suites")
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "critlab: criticality laboratory for nonnegative model Schrodinger "
      "operators"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Config file (key=value with [subcommand] sections)");
  app.get_formatter()->column_width(34);

  SeminormOpts sem_o;
  auto* sem = app.add_subcommand(
      "seminorm", "Range seminorm by the time and frequency routes");
  add_common(sem, sem_o);
  sem->add_option("--alpha", sem_o.alpha,
                  "Alpha list a,b,c or range lo:hi:step")
      ->join(',');
  sem->add_option("--tmin", sem_o.t_min, "Time-route lower edge")
      ->capture_default_str();
  sem->add_option("--tmax", sem_o.t_max, "Time-route horizon")
      ->capture_default_str();
  sem->add_option("--points-per-decade", sem_o.per_decade,
                  "Time-route resolution")
      ->capture_default_str();

  ScanOpts scan_o;
  auto* scan = app.add_subcommand(
      "scan", "Bracket sup I_S by scanning alpha");
  add_common(scan, scan_o);
  scan->add_option("--alpha", scan_o.alpha, "Alpha range lo:hi:step")
      ->capture_default_str();
  scan->add_option("--tmax", scan_o.t_max, "Density horizon")
      ->capture_default_str();

  WaveOpts wave_o;
  auto* wave = app.add_subcommand(
      "wave", "Wave decay curve and growth-law fit");
  add_common(wave, wave_o);
  wave->add_option("--tmin", wave_o.t_min, "Curve start")->capture_default_str();
  wave->add_option("--tmax", wave_o.t_max, "Curve end")->capture_default_str();
  wave->add_option("--points-per-decade", wave_o.per_decade, "Curve resolution")
      ->capture_default_str();
  wave->add_option("--window", wave_o.window, "Fit window in decades")
      ->capture_default_str();

  GreenOpts green_o;
  auto* green = app.add_subcommand(
      "green", "Generalized Green kernel for the free kinds");
  add_common(green, green_o, /*with_data=*/false);
  green->add_option("--alpha", green_o.alpha, "Alpha list or range")
      ->join(',')
      ->capture_default_str();
  green->add_option("--x", green_o.x, "First point (radius on a common ray)")
      ->capture_default_str();
  green->add_option("--y", green_o.y, "Second point")->capture_default_str();
  green->add_option("--tmax", green_o.t_max, "Quadrature horizon")
      ->capture_default_str();

  TransmuteOpts tr_o;
  auto* tr = app.add_subcommand(
      "transmute", "Heat-from-wave subordination residuals");
  add_common(tr, tr_o);
  tr->add_option("--times", tr_o.times, "Comma-separated times")
      ->join(',')
      ->capture_default_str();

  VerifyOpts ver_o;
  auto* ver = app.add_subcommand(
      "verify", "Property battery: transforms, routes, energy, interpolation");
  add_common(ver, ver_o, /*with_data=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sem->parsed()) return cmd_seminorm(sem_o);
    if (scan->parsed()) return cmd_scan(scan_o);
    if (wave->parsed()) return cmd_wave(wave_o);
    if (green->parsed()) return cmd_green(green_o);
    if (tr->parsed()) return cmd_transmute(tr_o);
    if (ver->parsed()) return cmd_verify(ver_o);
  } catch (const critlab::resolution_error& e) {
    std::cerr << "resolution guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
