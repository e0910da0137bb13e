#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("critlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path log = work_dir() / "last_run.log";
  const std::string cmd = std::string(CRITLAB_CLI_PATH) + " " + args + " > " +
                          log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("seminorm writes full-precision CSV plus manifest") {
  const fs::path out = work_dir() / "sem1";
  const RunResult r = run_cli(
      "seminorm --op free:3 --data 'gaussian(1)' --alpha 0.2,0.4 --out " +
      out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(out / "seminorm.csv"));
  REQUIRE(fs::exists(out / "heat.csv"));
  REQUIRE(fs::exists(out / "manifest.txt"));

  const std::string csv = slurp(out / "seminorm.csv");
  CHECK(csv.rfind("alpha,time_verdict,time_value,time_slope,freq_verdict,"
                  "freq_value,freq_margin,agreement\n", 0) == 0);
  // Every numeric cell carries 17 significant digits.
  const std::regex full_number("-?[0-9]\\.[0-9]{16}e[+-][0-9]+");
  CHECK(std::regex_search(csv, full_number));
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);  // header + one row per alpha

  const std::string manifest = slurp(out / "manifest.txt");
  CHECK(manifest.find("subcommand=seminorm\n") != std::string::npos);
  CHECK(manifest.find("op=free:3\n") != std::string::npos);
  CHECK(manifest.find("data=gaussian(1)\n") != std::string::npos);
  CHECK(manifest.find("alpha=0.2,0.4\n") != std::string::npos);
  CHECK(manifest.find("seed=12345\n") != std::string::npos);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
  const fs::path a = work_dir() / "det_a";
  const fs::path b = work_dir() / "det_b";
  const std::string tail =
      "seminorm --op free:2 --data 'bump(2,1)' --alpha 0.1,0.3 --seed 777 --out ";
  REQUIRE(run_cli(tail + a.string()).exit_code == 0);
  REQUIRE(run_cli(tail + b.string()).exit_code == 0);
  for (const char* name : {"seminorm.csv", "heat.csv"}) {
    CAPTURE(name);
    CHECK(slurp(a / name) == slurp(b / name));
    CHECK_FALSE(slurp(a / name).empty());
  }
}

TEST_CASE("config file sections with flag precedence") {
  const fs::path cfg = work_dir() / "exp.ini";
  {
    std::ofstream out(cfg);
    out << "[seminorm]\n"
        << "op=free:2\n"
        << "data=bump(2,1)\n"
        << "alpha=0.1,0.2\n"
        << "tmax=1e5\n";
  }
  const fs::path d1 = work_dir() / "cfg1";
  const RunResult r1 =
      run_cli("seminorm --config " + cfg.string() + " --out " + d1.string());
  REQUIRE(r1.exit_code == 0);
  const std::string m1 = slurp(d1 / "manifest.txt");
  CHECK(m1.find("op=free:2\n") != std::string::npos);
  CHECK(m1.find("alpha=0.1,0.2\n") != std::string::npos);
  CHECK(m1.find("tmax=1.0000000000000000e+05\n") != std::string::npos);

  // A flag beats the file for the same key.
  const fs::path d2 = work_dir() / "cfg2";
  const RunResult r2 = run_cli("seminorm --config " + cfg.string() +
                               " --op free:3 --data 'annulus(1,20)' --out " +
                               d2.string());
  REQUIRE(r2.exit_code == 0);
  const std::string m2 = slurp(d2 / "manifest.txt");
  CHECK(m2.find("op=free:3\n") != std::string::npos);
  CHECK(m2.find("data=annulus(1,20)\n") != std::string::npos);
  CHECK(m2.find("alpha=0.1,0.2\n") != std::string::npos);
}

TEST_CASE("scan prints the interval bracket") {
  const fs::path out = work_dir() / "scan4";
  const RunResult r = run_cli("scan --op free:4 --data 'bump(2,1)' --out " +
                              out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(out / "scan.csv"));
  const std::size_t at = r.output.find("sup I_S");
  REQUIRE(at != std::string::npos);
  double lo = 0.0, hi = 0.0;
  REQUIRE(std::sscanf(r.output.c_str() + at, "sup I_S %*s [%lf, %lf]", &lo, &hi) == 2);
  CHECK(lo <= 1.0);
  CHECK(hi >= 1.0);
  CHECK(hi - lo <= 0.05);

  // The nu = 0 endpoint case from the plane-critical family.
  const RunResult r2 = run_cli("scan --op hardy:2:0 --data 'bump(2,1)' --out " +
                               (work_dir() / "scan20").string());
  REQUIRE(r2.exit_code == 0);
  const std::size_t at2 = r2.output.find("sup I_S");
  REQUIRE(at2 != std::string::npos);
  REQUIRE(std::sscanf(r2.output.c_str() + at2, "sup I_S %*s [%lf, %lf]", &lo, &hi) == 2);
  CHECK(lo <= 0.5);
  CHECK(hi >= 0.5);
  CHECK(r2.output.find("critical") != std::string::npos);
}

TEST_CASE("wave fits the expected growth model") {
  const fs::path out = work_dir() / "wave1";
  const RunResult r = run_cli(
      "wave --op free1d --data 'bump(2,1)' --tmax 1e5 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(out / "wave.csv"));
  CHECK(slurp(out / "wave.csv").rfind("t,wave_norm,model,residual\n", 0) == 0);
  CHECK(r.output.find("model=power") != std::string::npos);
}

TEST_CASE("green reproduces the Newtonian constant through the CLI") {
  const fs::path out = work_dir() / "green1";
  const RunResult r = run_cli(
      "green --op free:3 --alpha 0.5 --x 1 --y 0 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(out / "green.csv");
  const std::size_t comma = csv.find('\n');
  REQUIRE(comma != std::string::npos);
  double alpha = 0.0, value = 0.0;
  char verdict[32] = {0};
  REQUIRE(std::sscanf(csv.c_str() + comma + 1, "%lf,%31[^,],%lf", &alpha,
                      verdict, &value) == 3);
  CHECK(std::string(verdict) == "finite");
  CHECK(value == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-4));
}

TEST_CASE("usage errors exit with code 1") {
  const char* bad[] = {
      "scan --op bogus:7",
      "seminorm --op free:3 --alpha=",
      "seminorm --op hardy:3:1 --data 'gaussian(1)' --alpha 0.3",
      "seminorm --op free:3 --data 'bump(50,1)' --grid-r 40 --alpha 0.3",
      "green --op hardy:3:1 --alpha 0.5",
      "seminorm --no-such-flag",
      "",
  };
  for (const char* args : bad) {
    CAPTURE(args);
    const fs::path out = work_dir() / "err";
    CHECK(run_cli(std::string(args) + " --out " + out.string()).exit_code == 1);
  }
}

TEST_CASE("resolution guards exit with code 2") {
  // M = 128 resolves every property check except the t = 10^3 energy probes
  // for the larger first frequencies, which trip the phase guard: guard
  // reports, no failures, exit 2.
  const fs::path out = work_dir() / "guard";
  const RunResult r = run_cli("verify --grid-m 128 --out " + out.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("GUARD") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify battery passes at the default grid") {
  const fs::path out = work_dir() / "verify_ok";
  const RunResult r = run_cli("verify --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(out / "verify_report.txt"));
  const std::string report = slurp(out / "verify_report.txt");
  CHECK(report.find("FAIL") == std::string::npos);
  CHECK(report.find("GUARD") == std::string::npos);
  CHECK(report.find(" 0 failed") != std::string::npos);
  CHECK(report == r.output);
}

TEST_CASE("verify reports guard trips and fails loudly on a starved grid") {
  const fs::path out = work_dir() / "verify_small";
  const RunResult r = run_cli("verify --grid-m 16 --out " + out.string());
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("GUARD") != std::string::npos);
}

TEST_CASE("verify reports are deterministic") {
  const fs::path a = work_dir() / "verify_det_a";
  const fs::path b = work_dir() / "verify_det_b";
  REQUIRE(run_cli("verify --seed 99 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("verify --seed 99 --out " + b.string()).exit_code == 0);
  const std::string ra = slurp(a / "verify_report.txt");
  CHECK_FALSE(ra.empty());
  CHECK(ra == slurp(b / "verify_report.txt"));
}
