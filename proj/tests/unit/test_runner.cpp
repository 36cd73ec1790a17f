#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "semion/config.hpp"
#include "semion/csv.hpp"
#include "semion/errors.hpp"
#include "semion/golden.hpp"
#include "semion/runner.hpp"

using namespace semion;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("semion_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::string& args, const fs::path& dir, const std::string& env = "") {
  const fs::path out = dir / "cli.out", err = dir / "cli.err";
  const std::string cmd = "cd '" + dir.string() + "' && " + env + " '" + SEMION_CLI_PATH + "' " + args + " > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

ExperimentConfig small_base() {
  auto c = ExperimentConfig::defaults(ExperimentKind::BaseDynamics);
  c.realizations = 96;
  c.seed = 17;
  return c;
}

}  // namespace

TEST(Runner, OutputIndependentOfWorkerCount) {
  TempDir a, b;
  RunOptions one{1, a.path(), true};
  RunOptions many{4, b.path(), true};
  const auto ra = run_experiment(small_base(), one);
  const auto rb = run_experiment(small_base(), many);
  ASSERT_EQ(ra.files.size(), 2u);
  EXPECT_EQ(slurp(ra.files[0]), slurp(rb.files[0]));
  EXPECT_EQ(ra.files[0].filename(), "base-dynamics.csv");
}

TEST(Runner, SidecarAndEmbeddedConfigReproduceTheRun) {
  TempDir d;
  const auto out = run_experiment(small_base(), {1, d.path(), true});
  const auto meta = nlohmann::json::parse(slurp(d.path() / "base-dynamics.meta.json"));
  EXPECT_EQ(meta.at("seed").get<std::uint64_t>(), 17u);
  EXPECT_EQ(meta.at("version").get<std::string>(), version());
  EXPECT_GE(meta.at("wall_time_seconds").get<double>(), 0.0);
  EXPECT_EQ(ExperimentConfig::from_json(meta.at("config").dump()), small_base());

  const auto table = read_csv(out.files[0]);
  EXPECT_EQ(table.meta("experiment"), "base-dynamics");
  EXPECT_EQ(table.meta("seed"), "17");
  auto again = load_config(out.files[0]);
  EXPECT_EQ(again, small_base());
  again.output = "rerun";
  const auto rerun = run_experiment(again, {2, d.path(), false});
  ASSERT_EQ(rerun.files.size(), 1u);
  EXPECT_EQ(read_csv(rerun.files[0]).rows, table.rows);
}

TEST(Runner, EveryKindProducesOutput) {
  TempDir d;
  for (auto kind : all_kinds()) {
    auto c = ExperimentConfig::defaults(kind);
    c.realizations = std::min<std::size_t>(c.realizations, 16);
    c.disorder.sigma0_grid = {0.0, 1.0};
    c.disorder.sigma1_grid = {0.5};
    c.stars.gamma0_grid = {0.3, 0.6};
    c.times = {0.0, 1.0, 10.0};
    c.dwave.half_gamma = 0.31;
    const auto out = run_experiment(c, {1, d.path(), true});
    ASSERT_GE(out.files.size(), 2u) << kind_name(kind);
    for (const auto& f : out.files) EXPECT_TRUE(fs::exists(f)) << f;
  }
  const auto report = nlohmann::json::parse(slurp(d.path() / "dwave-feasibility.json"));
  EXPECT_EQ(report.at("verdict"), "infeasible");
  EXPECT_TRUE(fs::exists(d.path() / "analytic_density.csv"));
}

TEST(Runner, CapacityLimits) {
  TempDir d;
  auto c = small_base();
  c.chain.length = 2001;
  EXPECT_THROW(run_experiment(c, {1, d.path(), false}), CapacityError);
  auto s = ExperimentConfig::defaults(ExperimentKind::Spectra);
  s.limits.max_hilbert_dimension = 512;
  EXPECT_THROW(run_experiment(s, {1, d.path(), false}), CapacityError);
}

TEST(Runner, OutputDirectoryFromEnvironment) {
  ::setenv("SEMION_OUTPUT_DIR", "/tmp/semion-out", 1);
  EXPECT_EQ(default_output_dir(), fs::path("/tmp/semion-out"));
  ::unsetenv("SEMION_OUTPUT_DIR");
  EXPECT_EQ(default_output_dir(), fs::path("."));
}

TEST(Cli, ListExperiments) {
  TempDir d;
  const auto r = cli("list-experiments", d.path());
  EXPECT_EQ(r.code, 0);
  for (auto k : all_kinds()) EXPECT_NE(r.out.find(std::string(kind_name(k))), std::string::npos);
}

TEST(Cli, ConfigTemplateParsesToDefaults) {
  TempDir d;
  for (auto k : all_kinds()) {
    const auto r = cli("print-config-template " + std::string(kind_name(k)), d.path());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ExperimentConfig::from_json(r.out), ExperimentConfig::defaults(k));
  }
  EXPECT_EQ(cli("print-config-template nope", d.path()).code, 2);
}

TEST(Cli, RunHonoursEnvironmentAndIsDeterministic) {
  TempDir d;
  write_file(d.path() / "cfg.json", small_base().to_json());
  fs::create_directories(d.path() / "w1");
  fs::create_directories(d.path() / "w8");
  EXPECT_EQ(cli("run cfg.json", d.path(), "SEMION_WORKERS=1 SEMION_OUTPUT_DIR=w1").code, 0);
  EXPECT_EQ(cli("run cfg.json", d.path(), "SEMION_WORKERS=8 SEMION_OUTPUT_DIR=w8").code, 0);
  const std::string a = slurp(d.path() / "w1" / "base-dynamics.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(d.path() / "w8" / "base-dynamics.csv"));
  EXPECT_TRUE(fs::exists(d.path() / "w1" / "base-dynamics.meta.json"));
  const auto r = cli("run cfg.json", d.path(), "SEMION_WORKERS=zero");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SEMION_WORKERS"), std::string::npos);
}

TEST(Cli, ValidationErrorExitsTwoNamingField) {
  TempDir d;
  write_file(d.path() / "bad.json", R"({"kind": "base-dynamics", "visons": {"rho_v": 1.5}})");
  const auto r = cli("run bad.json", d.path());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("visons.rho_v"), std::string::npos) << r.err;
  EXPECT_EQ(cli("run missing.json", d.path()).code, 2);
  EXPECT_EQ(cli("bogus-command", d.path()).code, 2);
}

TEST(Cli, CapacityErrorExitsFour) {
  TempDir d;
  write_file(d.path() / "big.json",
             R"({"kind": "spectra", "stars": {"K": 3.0}, "limits": {"max_hilbert_dimension": 1024}})");
  const auto r = cli("run big.json", d.path());
  EXPECT_EQ(r.code, 4) << r.err;
  EXPECT_NE(r.err.find("exceeds"), std::string::npos);
}

TEST(Cli, CompareGolden) {
  TempDir d;
  const fs::path data(SEMION_TEST_DATA);
  ASSERT_EQ(cli("run '" + (data / "analytic.json").string() + "' -o .", d.path()).code, 0);
  const auto same = cli("compare-golden analytic_density.csv '" + (data / "analytic_density.golden.csv").string() + "'",
                        d.path());
  EXPECT_EQ(same.code, 0) << same.out << same.err;
  // Shift one density entry well beyond tolerance.
  auto t = read_csv(d.path() / "analytic_density.csv");
  t.rows[3][t.column("density")] += 1e-6;
  write_csv(d.path() / "shifted.csv", t);
  const auto off = cli("compare-golden shifted.csv '" + (data / "analytic_density.golden.csv").string() + "'", d.path());
  EXPECT_EQ(off.code, 1);
  EXPECT_NE((off.out + off.err).find("density"), std::string::npos);
  const auto loose =
      cli("compare-golden shifted.csv '" + (data / "analytic_density.golden.csv").string() + "' --abs 1e-5", d.path());
  EXPECT_EQ(loose.code, 0);
}
