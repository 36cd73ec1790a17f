#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semion/config.hpp"
#include "semion/errors.hpp"
#include "semion/golden.hpp"
#include "semion/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCapacity = 4;

// "name=abs:rel"
std::pair<std::string, semion::GoldenTolerance> parse_column_tol(const std::string& spec) {
  const auto eq = spec.find('=');
  const auto colon = spec.find(':', eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || colon == std::string::npos)
    throw semion::ParameterError("--column-tol expects name=abs:rel, got '" + spec + "'");
  semion::GoldenTolerance tol;
  try {
    tol.abs = std::stod(spec.substr(eq + 1, colon - eq - 1));
    tol.rel = std::stod(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw semion::ParameterError("--column-tol expects numeric tolerances, got '" + spec + "'");
  }
  return {spec.substr(0, eq), tol};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semion: spinon/vison ladder simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", semion::version());

  auto* run = app.add_subcommand("run", "run an experiment from a JSON config or a previous result CSV");
  std::string config_path;
  std::size_t workers = 0;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> realizations;
  bool no_sidecar = false;
  run->add_option("config", config_path, "JSON config, or a result CSV to re-run")->required();
  run->add_option("-w,--workers", workers, "worker threads (default: SEMION_WORKERS or all cores)");
  run->add_option("-o,--output-dir", output_dir, "output directory (default: SEMION_OUTPUT_DIR or .)");
  run->add_option("--seed", seed, "override the master seed");
  run->add_option("--realizations", realizations, "override the realization count");
  run->add_flag("--no-sidecar", no_sidecar, "skip the .meta.json sidecar");

  auto* cmp = app.add_subcommand("compare-golden", "compare a result CSV against a golden CSV");
  std::string result_path, golden_path;
  semion::GoldenOptions gopt;
  std::vector<std::string> column_tols;
  cmp->add_option("result", result_path)->required()->check(CLI::ExistingFile);
  cmp->add_option("golden", golden_path)->required()->check(CLI::ExistingFile);
  cmp->add_option("--abs", gopt.tolerance.abs, "absolute tolerance")->capture_default_str();
  cmp->add_option("--rel", gopt.tolerance.rel, "relative tolerance")->capture_default_str();
  cmp->add_option("--sigma", gopt.sigma, "standard errors allowed on statistical columns")
      ->capture_default_str();
  cmp->add_option("--column-tol", column_tols, "per-column tolerance, name=abs:rel");

  auto* list = app.add_subcommand("list-experiments", "list experiment kinds");

  auto* tmpl = app.add_subcommand("print-config-template", "print a default config for a kind");
  std::string kind = "base-dynamics";
  tmpl->add_option("kind", kind, "experiment kind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*list) {
      for (auto k : semion::all_kinds())
        std::cout << semion::kind_name(k) << "\t" << semion::kind_description(k) << '\n';
      return kExitOk;
    }
    if (*tmpl) {
      std::cout << semion::ExperimentConfig::defaults(semion::parse_kind(kind)).to_json() << '\n';
      return kExitOk;
    }
    if (*cmp) {
      for (const auto& s : column_tols) gopt.per_column.insert(parse_column_tol(s));
      const auto report = semion::compare_golden(result_path, golden_path, gopt);
      std::cout << report.summary();
      return report.passed() ? kExitOk : kExitMismatch;
    }
    if (*run) {
      auto cfg = semion::load_config(config_path);
      if (seed) cfg.seed = *seed;
      if (realizations) cfg.realizations = *realizations;
      cfg.validate();
      semion::RunOptions opt;
      opt.workers = workers;
      opt.output_dir = output_dir.empty() ? semion::default_output_dir() : std::filesystem::path(output_dir);
      opt.write_sidecar = !no_sidecar;
      const auto out = semion::run_experiment(cfg, opt);
      for (const auto& f : out.files) std::cout << f.string() << '\n';
      std::cerr << "done in " << out.wall_seconds << " s\n";
      return kExitOk;
    }
  } catch (const semion::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const semion::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const semion::StructureError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const semion::ParameterError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
