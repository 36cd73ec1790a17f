#include "semion/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "semion/errors.hpp"

namespace semion {

using ojson = nlohmann::ordered_json;

namespace {

struct KindInfo {
  ExperimentKind kind;
  std::string_view name;
  std::string_view description;
};

constexpr KindInfo kKinds[] = {
    {ExperimentKind::BaseDynamics, "base-dynamics",
     "spinon density profile and <x^2>(t) averaged over static vison configurations"},
    {ExperimentKind::DisorderSweep, "disorder-sweep",
     "<x^2>(t) with and without visons over onsite and bond disorder grids"},
    {ExperimentKind::ClassicalRw, "classical-rw",
     "Metropolis random walk on a Gaussian pinning landscape"},
    {ExperimentKind::Strobo, "strobo",
     "spinon dynamics with Poisson-timed stochastic vison updates"},
    {ExperimentKind::Spectra, "spectra", "lowest levels of a one- or two-star assembly with G_p labels"},
    {ExperimentKind::CouplingMap, "coupling-map",
     "effective ladder couplings (lambda, Gamma/2) over a transverse-field grid"},
    {ExperimentKind::Analytic, "analytic",
     "closed-form segment statistics and the semi-analytic <x^2>(t) curve"},
    {ExperimentKind::DwaveFeasibility, "dwave-feasibility",
     "annealer parameter feasibility report (JSON)"},
};

const KindInfo& info(ExperimentKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw ParameterError("unknown experiment kind");
}

// Strict reader: every key must be consumed, types must match.
class Reader {
 public:
  Reader(const ojson& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(where(""), "expected an object");
  }

  std::string where(const std::string& key) const {
    if (path_.empty()) return key.empty() ? "<root>" : key;
    return key.empty() ? path_ : path_ + "." + key;
  }

  const ojson* find(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const ojson* v = find(key)) {
      if (!v->is_number()) throw ConfigError(where(key), "expected a number");
      out = v->get<double>();
    }
  }
  void number(const std::string& key, std::optional<double>& out) {
    if (const ojson* v = find(key)) {
      if (v->is_null()) {
        out.reset();
        return;
      }
      if (!v->is_number()) throw ConfigError(where(key), "expected a number or null");
      out = v->get<double>();
    }
  }
  template <class Int>
  void integer(const std::string& key, Int& out) {
    if (const ojson* v = find(key)) out = as_integer<Int>(*v, key);
  }
  void integer(const std::string& key, std::optional<std::size_t>& out) {
    if (const ojson* v = find(key)) {
      if (v->is_null())
        out.reset();
      else
        out = as_integer<std::size_t>(*v, key);
    }
  }
  void text(const std::string& key, std::string& out) {
    if (const ojson* v = find(key)) {
      if (!v->is_string()) throw ConfigError(where(key), "expected a string");
      out = v->get<std::string>();
    }
  }
  void list(const std::string& key, std::vector<double>& out) {
    if (const ojson* v = find(key)) {
      if (!v->is_array()) throw ConfigError(where(key), "expected an array of numbers");
      out.clear();
      for (const auto& e : *v) {
        if (!e.is_number()) throw ConfigError(where(key), "expected an array of numbers");
        out.push_back(e.get<double>());
      }
    }
  }
  template <class Fn>
  void section(const std::string& key, Fn&& fn) {
    if (const ojson* v = find(key)) {
      Reader sub(*v, where(key));
      fn(sub);
      sub.finish();
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) throw ConfigError(where(it.key()), "unknown key");
  }

 private:
  template <class Int>
  Int as_integer(const ojson& v, const std::string& key) const {
    if (v.is_number_unsigned()) return static_cast<Int>(v.get<std::uint64_t>());
    if (v.is_number_integer()) {
      const auto x = v.get<std::int64_t>();
      if (x < 0 && std::is_unsigned_v<Int>) throw ConfigError(where(key), "must be >= 0");
      return static_cast<Int>(x);
    }
    throw ConfigError(where(key), "expected an integer");
  }

  const ojson& j_;
  std::string path_;
  std::set<std::string> used_;
};

ojson opt(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view kind_name(ExperimentKind k) { return info(k).name; }
std::string_view kind_description(ExperimentKind k) { return info(k).description; }

ExperimentKind parse_kind(std::string_view name) {
  for (const auto& i : kKinds)
    if (i.name == name) return i.kind;
  throw ConfigError("kind", "unknown experiment '" + std::string(name) + "'");
}

const std::vector<ExperimentKind>& all_kinds() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> v;
    for (const auto& i : kKinds) v.push_back(i.kind);
    return v;
  }();
  return kinds;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  switch (kind) {
    case ExperimentKind::BaseDynamics:
      c.realizations = 10240;
      break;
    case ExperimentKind::DisorderSweep:
    case ExperimentKind::Strobo:
      c.realizations = 1024;
      break;
    case ExperimentKind::ClassicalRw:
      c.realizations = 10000;
      c.times = {0, 1, 2, 5, 10, 20, 30, 50, 100};
      break;
    case ExperimentKind::Analytic:
      c.realizations = 1;
      c.times = {0, 0.5, 1, 2, 5, 10, 20, 50, 100};
      break;
    case ExperimentKind::Spectra:
    case ExperimentKind::CouplingMap:
    case ExperimentKind::DwaveFeasibility:
      c.realizations = 1;
      break;
  }
  return c;
}

std::vector<double> ExperimentConfig::gamma0_grid() const {
  if (!stars.gamma0_grid.empty()) return stars.gamma0_grid;
  std::vector<double> g;
  for (int i = 1; i <= 50; ++i) g.push_back(0.05 * i);
  return g;
}

void ExperimentConfig::validate() const {
  require(schema_version == 1, "schema_version", "only version 1 is supported");
  require(realizations >= 1, "realizations", "must be >= 1");
  require(chain.length >= 2, "chain.length", "must be >= 2");
  require(std::isfinite(chain.hopping), "chain.hopping", "must be finite");
  require(finite_nonneg(chain.dephasing), "chain.dephasing", "must be >= 0");
  require(origin() < chain.length, "chain.origin", "must lie on the chain");
  require(std::isfinite(visons.rho_v) && visons.rho_v >= 0.0 && visons.rho_v <= 1.0, "visons.rho_v",
          "must lie in [0, 1]");
  require(!times.empty(), "times", "must be non-empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    require(finite_nonneg(times[i]), "times", "entries must be finite and >= 0");
    require(i == 0 || times[i] >= times[i - 1], "times", "must be ascending");
  }
  require(finite_nonneg(disorder.sigma0), "disorder.sigma0", "must be >= 0");
  require(finite_nonneg(disorder.sigma1), "disorder.sigma1", "must be >= 0");
  for (double s : disorder.sigma0_grid) require(finite_nonneg(s), "disorder.sigma0_grid", "entries must be >= 0");
  for (double s : disorder.sigma1_grid) require(finite_nonneg(s), "disorder.sigma1_grid", "entries must be >= 0");
  require(finite_pos(strobo.delta_t), "strobo.delta_t", "must be > 0");
  require(finite_nonneg(classical.sigma), "classical.sigma", "must be >= 0");
  require(finite_pos(classical.temperature), "classical.temperature", "must be > 0");
  require(finite_pos(stars.J), "stars.J", "must be > 0");
  require(std::isfinite(stars.gamma0), "stars.gamma0", "must be finite");
  require(!stars.gamma_g || std::isfinite(*stars.gamma_g), "stars.gamma_g", "must be finite");
  require(!stars.K || std::isfinite(*stars.K), "stars.K", "must be finite");
  require(stars.n_stars == 1 || stars.n_stars == 2, "stars.n_stars", "must be 1 or 2");
  require(!(stars.n_stars == 1 && stars.K), "stars.K", "needs n_stars = 2");
  require(stars.levels >= 1, "stars.levels", "must be >= 1");
  const auto grid = gamma0_grid();
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], "stars.gamma0_grid", "must be strictly ascending");
  require(analytic.cutoff >= 1, "analytic.cutoff", "must be >= 1");
  require(analytic.density_range <= analytic.cutoff, "analytic.density_range", "must be <= cutoff");
  require(finite_pos(dwave.J_dimensionless), "dwave.J_dimensionless", "must be > 0");
  require(finite_nonneg(dwave.K_dimensionless), "dwave.K_dimensionless", "must be >= 0");
  require(finite_pos(dwave.J_physical_ghz), "dwave.J_physical_ghz", "must be > 0");
  require(finite_pos(dwave.temperature_ghz), "dwave.temperature_ghz", "must be > 0");
  require(finite_pos(dwave.protocol_window_ns), "dwave.protocol_window_ns", "must be > 0");
  require(!dwave.control_resolution_ns || finite_pos(*dwave.control_resolution_ns),
          "dwave.control_resolution_ns", "must be > 0 or null");
  require(std::isfinite(dwave.gamma0), "dwave.gamma0", "must be finite");
  require(!dwave.half_gamma || finite_pos(*dwave.half_gamma), "dwave.half_gamma", "must be > 0 or null");
  require(limits.max_chain_length >= 2, "limits.max_chain_length", "must be >= 2");
  require(limits.max_hilbert_dimension >= 1, "limits.max_hilbert_dimension", "must be >= 1");
  if (kind == ExperimentKind::Analytic)
    require(chain.length % 2 == 1, "chain.length", "analytic experiments need an odd length");
}

std::string ExperimentConfig::to_json(int indent) const {
  ojson j;
  j["schema_version"] = schema_version;
  j["kind"] = std::string(kind_name(kind));
  j["seed"] = seed;
  j["realizations"] = realizations;
  j["output"] = output;
  j["chain"] = {{"length", chain.length},
                {"hopping", chain.hopping},
                {"dephasing", chain.dephasing},
                {"origin", chain.origin ? ojson(*chain.origin) : ojson(nullptr)}};
  j["visons"] = {{"rho_v", visons.rho_v}};
  j["times"] = times;
  j["disorder"] = {{"sigma0", disorder.sigma0},
                   {"sigma1", disorder.sigma1},
                   {"sigma0_grid", disorder.sigma0_grid},
                   {"sigma1_grid", disorder.sigma1_grid}};
  j["strobo"] = {{"delta_t", strobo.delta_t}};
  j["classical"] = {{"sigma", classical.sigma}, {"temperature", classical.temperature}};
  j["stars"] = {{"J", stars.J},           {"gamma0", stars.gamma0},
                {"gamma_g", opt(stars.gamma_g)}, {"K", opt(stars.K)},
                {"gamma0_grid", stars.gamma0_grid}, {"levels", stars.levels},
                {"n_stars", stars.n_stars}};
  j["analytic"] = {{"cutoff", analytic.cutoff}, {"density_range", analytic.density_range}};
  j["dwave"] = {{"J_dimensionless", dwave.J_dimensionless},
                {"K_dimensionless", dwave.K_dimensionless},
                {"J_physical_ghz", dwave.J_physical_ghz},
                {"temperature_ghz", dwave.temperature_ghz},
                {"protocol_window_ns", dwave.protocol_window_ns},
                {"control_resolution_ns", opt(dwave.control_resolution_ns)},
                {"gamma0", dwave.gamma0},
                {"half_gamma", opt(dwave.half_gamma)}};
  j["limits"] = {{"max_chain_length", limits.max_chain_length},
                 {"max_hilbert_dimension", limits.max_hilbert_dimension}};
  return j.dump(indent);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("<root>", "expected an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw ConfigError("kind", "required string");
  ExperimentConfig c = defaults(parse_kind(kind_it->get<std::string>()));

  Reader r(j, "");
  r.find("kind");
  r.integer("schema_version", c.schema_version);
  r.integer("seed", c.seed);
  r.integer("realizations", c.realizations);
  r.text("output", c.output);
  r.section("chain", [&](Reader& s) {
    s.integer("length", c.chain.length);
    s.number("hopping", c.chain.hopping);
    s.number("dephasing", c.chain.dephasing);
    s.integer("origin", c.chain.origin);
  });
  r.section("visons", [&](Reader& s) { s.number("rho_v", c.visons.rho_v); });
  r.list("times", c.times);
  r.section("disorder", [&](Reader& s) {
    s.number("sigma0", c.disorder.sigma0);
    s.number("sigma1", c.disorder.sigma1);
    s.list("sigma0_grid", c.disorder.sigma0_grid);
    s.list("sigma1_grid", c.disorder.sigma1_grid);
  });
  r.section("strobo", [&](Reader& s) { s.number("delta_t", c.strobo.delta_t); });
  r.section("classical", [&](Reader& s) {
    s.number("sigma", c.classical.sigma);
    s.number("temperature", c.classical.temperature);
  });
  r.section("stars", [&](Reader& s) {
    s.number("J", c.stars.J);
    s.number("gamma0", c.stars.gamma0);
    s.number("gamma_g", c.stars.gamma_g);
    s.number("K", c.stars.K);
    s.list("gamma0_grid", c.stars.gamma0_grid);
    s.integer("levels", c.stars.levels);
    s.integer("n_stars", c.stars.n_stars);
  });
  r.section("analytic", [&](Reader& s) {
    s.integer("cutoff", c.analytic.cutoff);
    s.integer("density_range", c.analytic.density_range);
  });
  r.section("dwave", [&](Reader& s) {
    s.number("J_dimensionless", c.dwave.J_dimensionless);
    s.number("K_dimensionless", c.dwave.K_dimensionless);
    s.number("J_physical_ghz", c.dwave.J_physical_ghz);
    s.number("temperature_ghz", c.dwave.temperature_ghz);
    s.number("protocol_window_ns", c.dwave.protocol_window_ns);
    s.number("control_resolution_ns", c.dwave.control_resolution_ns);
    s.number("gamma0", c.dwave.gamma0);
    s.number("half_gamma", c.dwave.half_gamma);
  });
  r.section("limits", [&](Reader& s) {
    s.integer("max_chain_length", c.limits.max_chain_length);
    s.integer("max_hilbert_dimension", c.limits.max_hilbert_dimension);
  });
  r.finish();
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("<file>", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.to_json(-1) == b.to_json(-1);
}

}  // namespace semion
