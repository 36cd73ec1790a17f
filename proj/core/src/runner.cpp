#include "semion/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "semion/classical_walk.hpp"
#include "semion/couplings.hpp"
#include "semion/csv.hpp"
#include "semion/ensemble.hpp"
#include "semion/errors.hpp"
#include "semion/feasibility.hpp"
#include "semion/parallel.hpp"
#include "semion/segment_analytics.hpp"
#include "semion/vison_dynamics.hpp"

namespace semion {

std::string version() { return SEMION_VERSION_STRING; }

std::filesystem::path default_output_dir() {
  if (const char* dir = std::getenv("SEMION_OUTPUT_DIR"); dir && *dir) return dir;
  return ".";
}

namespace {

using Path = std::filesystem::path;

struct Context {
  const ExperimentConfig& cfg;
  std::size_t workers;
  Path stem;  // output path without extension
  std::vector<Path> files;

  ChainSpec chain() const {
    ChainSpec s;
    s.length = cfg.chain.length;
    s.hopping = cfg.chain.hopping;
    s.dephasing = cfg.chain.dephasing;
    s.origin = cfg.origin();
    return s;
  }

  CsvTable with_header(CsvTable t) const {
    std::vector<std::pair<std::string, std::string>> meta{
        {"experiment", std::string(kind_name(cfg.kind))},
        {"schema_version", std::to_string(cfg.schema_version)},
        {"version", version()},
        {"seed", std::to_string(cfg.seed)},
        {"config", cfg.to_json(-1)}};
    for (auto& kv : t.metadata)
      if (kv.first != "seed") meta.push_back(std::move(kv));
    t.metadata = std::move(meta);
    return t;
  }

  void emit(const CsvTable& t, const std::string& suffix = "") {
    Path p = stem;
    p += suffix + ".csv";
    write_csv(p, with_header(t));
    files.push_back(p);
  }
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_chain_capacity(const ExperimentConfig& cfg) {
  if (cfg.chain.length > cfg.limits.max_chain_length)
    throw CapacityError("chain.length " + std::to_string(cfg.chain.length) + " exceeds limits.max_chain_length " +
                        std::to_string(cfg.limits.max_chain_length));
}

// Throws CapacityError when the assembly the experiment would diagonalize is
// larger than the configured limit.
void check_star_capacity(const ExperimentConfig& cfg, int stars, std::optional<double> K) {
  StarAssembly a = stars == 1 ? StarAssembly::single(cfg.stars.J, 0.0, 0.0)
                              : StarAssembly::two_star(cfg.stars.J, 0.0, Sector::Even, K);
  a.max_dimension = cfg.limits.max_hilbert_dimension;
  a.validate();
}

void run_base(Context& ctx) {
  EnsembleOptions opt;
  opt.workers = ctx.workers;
  std::optional<DisorderParams> dis;
  if (ctx.cfg.disorder.sigma0 > 0.0 || ctx.cfg.disorder.sigma1 > 0.0)
    dis = DisorderParams{ctx.cfg.disorder.sigma0, ctx.cfg.disorder.sigma1};
  const auto res = run_base_ensemble(ctx.chain(), ctx.cfg.visons.rho_v, ctx.cfg.realizations,
                                     ctx.cfg.times, ctx.cfg.seed, dis, opt);
  ctx.emit(trajectory_table(res));
}

void run_disorder(Context& ctx) {
  EnsembleOptions opt;
  opt.workers = ctx.workers;
  CsvTable t;
  t.columns = {"disorder_type", "sigma", "time", "msd_visons", "msd_visons_stderr",
               "msd_clean", "msd_clean_stderr", "ratio"};
  t.metadata = {{"disorder_type", "0 = onsite (sigma0), 1 = bond (sigma1)"}};
  for (int type : {0, 1}) {
    const auto& grid = type == 0 ? ctx.cfg.disorder.sigma0_grid : ctx.cfg.disorder.sigma1_grid;
    for (double sigma : grid) {
      const DisorderParams p = type == 0 ? DisorderParams{sigma, 0.0} : DisorderParams{0.0, sigma};
      const auto with = run_base_ensemble(ctx.chain(), ctx.cfg.visons.rho_v, ctx.cfg.realizations,
                                          ctx.cfg.times, ctx.cfg.seed, p, opt);
      const auto without = run_base_ensemble(ctx.chain(), 0.0, ctx.cfg.realizations, ctx.cfg.times,
                                             ctx.cfg.seed, p, opt);
      for (std::size_t k = 0; k < ctx.cfg.times.size(); ++k)
        t.rows.push_back({static_cast<double>(type), sigma, ctx.cfg.times[k], with.msd[k],
                          with.msd_stderr[k], without.msd[k], without.msd_stderr[k],
                          with.msd[k] / without.msd[k]});
    }
  }
  ctx.emit(t);
}

void run_classical(Context& ctx) {
  const auto res = run_rw_ensemble(ctx.cfg.chain.length, ctx.cfg.classical.sigma,
                                   ctx.cfg.classical.temperature, ctx.cfg.times,
                                   ctx.cfg.realizations, ctx.cfg.seed, ctx.workers);
  CsvTable t = trajectory_table(res);
  t.metadata.emplace_back("sigma", format_double(ctx.cfg.classical.sigma));
  t.metadata.emplace_back("temperature", format_double(ctx.cfg.classical.temperature));
  ctx.emit(t);
}

void run_strobo(Context& ctx) {
  StroboOptions opt;
  opt.rho_v = ctx.cfg.visons.rho_v;
  opt.ensemble.workers = ctx.workers;
  const auto res = evolve_strobo(ctx.chain(), ctx.cfg.strobo.delta_t, ctx.cfg.times,
                                 ctx.cfg.realizations, ctx.cfg.seed, opt);
  CsvTable t = trajectory_table(res);
  t.metadata.emplace_back("delta_t", format_double(ctx.cfg.strobo.delta_t));
  ctx.emit(t);
}

void append_spectrum(CsvTable& t, double sector, const Spectrum& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    t.rows.push_back({sector, static_cast<double>(i), s.values[i],
                      s.gp.empty() ? 0.0 : static_cast<double>(s.gp[i])});
}

void run_spectra(Context& ctx) {
  const auto& st = ctx.cfg.stars;
  check_star_capacity(ctx.cfg, st.n_stars, st.K);
  CsvTable t;
  t.columns = {"sector", "level", "energy", "gp"};
  t.metadata = {{"sector", "-1 = single star, 0 = even, 1 = odd"}, {"gp", "0 = not determined"}};
  if (st.n_stars == 1) {
    const auto a = StarAssembly::single(st.J, st.gamma0, st.gamma_g.value_or(st.gamma0));
    const auto h = build_star_hamiltonian(a);
    append_spectrum(t, -1.0, lowest_spectrum(h, std::min<std::size_t>(st.levels, a.dimension())));
  } else {
    try {
      const auto res = two_star_couplings(st.J, st.gamma0, st.K, st.levels, st.gamma_g);
      append_spectrum(t, 0.0, res.even);
      append_spectrum(t, 1.0, res.odd);
      t.metadata.emplace_back("lambda", format_double(res.couplings.lambda));
      t.metadata.emplace_back("half_gamma", format_double(res.couplings.half_gamma));
    } catch (const StructureError& e) {
      for (Sector sec : {Sector::Even, Sector::Odd}) {
        auto a = StarAssembly::two_star(st.J, st.gamma0, sec, st.K);
        if (st.gamma_g) a.gamma_g = *st.gamma_g;
        Spectrum s = lowest_spectrum(build_star_hamiltonian(a), st.levels);
        label_gp(s, build_gp_operator(a));
        append_spectrum(t, sec == Sector::Even ? 0.0 : 1.0, s);
      }
      t.metadata.emplace_back("extraction_error", e.what());
    }
  }
  ctx.emit(t);
}

void run_coupling_map(Context& ctx) {
  const auto grid = ctx.cfg.gamma0_grid();
  check_star_capacity(ctx.cfg, 2, ctx.cfg.stars.K);
  const auto map = coupling_map(ctx.cfg.stars.J, grid, ctx.cfg.stars.K, ctx.workers);
  CsvTable t;
  t.columns = {"gamma0", "lambda", "half_gamma", "delta_s", "delta_h", "valid"};
  for (const auto& row : map.rows) {
    if (row.couplings) {
      const auto& c = *row.couplings;
      t.rows.push_back({row.gamma0, c.lambda, c.half_gamma, c.delta_s, c.delta_h, 1.0});
    } else {
      t.rows.push_back({row.gamma0, kNaN, kNaN, kNaN, kNaN, 0.0});
      t.metadata.emplace_back("invalid_row", format_double(row.gamma0) + " " + row.error);
    }
  }
  t.metadata.emplace_back("crossing", map.crossing ? format_double(*map.crossing) : "none");
  ctx.emit(t);
}

void run_analytic(Context& ctx) {
  const auto& a = ctx.cfg.analytic;
  SemiAnalyticOptions opt;
  opt.workers = ctx.workers;
  const auto msd = semi_analytic_msd(ctx.cfg.times, ctx.cfg.chain.length, ctx.cfg.chain.dephasing,
                                     ctx.cfg.chain.hopping, opt);
  CsvTable curve;
  curve.columns = {"time", "msd"};
  for (std::size_t k = 0; k < msd.size(); ++k) curve.rows.push_back({ctx.cfg.times[k], msd[k]});
  const std::size_t truncation = ctx.cfg.chain.length / 2;
  curve.metadata = {{"segment_truncation", std::to_string(truncation)},
                    {"truncated_mass", format_double(truncated_mass(truncation))},
                    {"plateau_msd", format_double(plateau_msd(truncation))}};
  ctx.emit(curve);

  CsvTable density;
  density.columns = {"x", "density"};
  const auto range = static_cast<long>(a.density_range);
  for (long x = -range; x <= range; ++x)
    density.rows.push_back({static_cast<double>(x), asymptotic_density(x, a.cutoff)});
  density.metadata = {{"cutoff", std::to_string(a.cutoff)},
                      {"truncated_mass", format_double(truncated_mass(a.cutoff))},
                      {"plateau_msd", format_double(plateau_msd(a.cutoff))}};
  ctx.emit(density, "_density");
}

void run_dwave(Context& ctx) {
  const auto& d = ctx.cfg.dwave;
  EffectiveCouplings c;
  if (d.half_gamma) {
    c.half_gamma = *d.half_gamma;
  } else {
    check_star_capacity(ctx.cfg, 2, d.K_dimensionless);
    c = two_star_couplings(d.J_dimensionless, d.gamma0, d.K_dimensionless).couplings;
  }
  DeviceParams dev;
  dev.J_dimensionless = d.J_dimensionless;
  dev.K_dimensionless = d.K_dimensionless;
  dev.J_physical_ghz = d.J_physical_ghz;
  dev.temperature_ghz = d.temperature_ghz;
  dev.protocol_window_ns = d.protocol_window_ns;
  dev.control_resolution_ns = d.control_resolution_ns;
  const auto report = dwave_feasibility(dev, c);
  Path p = ctx.stem;
  p += ".json";
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ParameterError("cannot open " + p.string() + " for writing");
  out << report.to_json() << '\n';
  ctx.files.push_back(p);
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::string stem = config.output.empty() ? std::string(kind_name(config.kind)) : config.output;
  Path stem_path = Path(stem).is_absolute() ? Path(stem) : options.output_dir / stem;
  Context ctx{config, options.workers ? options.workers : default_worker_count(), stem_path, {}};
  switch (config.kind) {
    case ExperimentKind::BaseDynamics:
    case ExperimentKind::DisorderSweep:
    case ExperimentKind::Strobo:
    case ExperimentKind::Analytic:
      check_chain_capacity(config);
      break;
    default:
      break;
  }
  switch (config.kind) {
    case ExperimentKind::BaseDynamics: run_base(ctx); break;
    case ExperimentKind::DisorderSweep: run_disorder(ctx); break;
    case ExperimentKind::ClassicalRw: run_classical(ctx); break;
    case ExperimentKind::Strobo: run_strobo(ctx); break;
    case ExperimentKind::Spectra: run_spectra(ctx); break;
    case ExperimentKind::CouplingMap: run_coupling_map(ctx); break;
    case ExperimentKind::Analytic: run_analytic(ctx); break;
    case ExperimentKind::DwaveFeasibility: run_dwave(ctx); break;
  }
  RunOutput out;
  out.files = ctx.files;
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (options.write_sidecar) {
    nlohmann::ordered_json meta;
    meta["config"] = nlohmann::ordered_json::parse(config.to_json(-1));
    meta["seed"] = config.seed;
    meta["version"] = version();
    meta["wall_time_seconds"] = out.wall_seconds;
    meta["workers"] = ctx.workers;
    std::vector<std::string> names;
    for (const auto& f : out.files) names.push_back(f.filename().string());
    meta["files"] = names;
    Path p = stem_path;
    p += ".meta.json";
    std::ofstream side(p, std::ios::binary);
    if (!side) throw ParameterError("cannot open " + p.string() + " for writing");
    side << meta.dump(2) << '\n';
    out.files.push_back(p);
  }
  return out;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  if (path.extension() == ".csv") {
    const CsvTable t = read_csv(path);
    const std::string cfg = t.meta("config");
    if (cfg.empty()) throw ConfigError("<file>", path.string() + " carries no embedded config");
    return ExperimentConfig::from_json(cfg);
  }
  return ExperimentConfig::load(path.string());
}

}  // namespace semion
