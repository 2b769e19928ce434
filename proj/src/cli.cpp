#include "fracguide/cli.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fracguide/errors.hpp"
#include "fracguide/impedance.hpp"
#include "fracguide/verify.hpp"

namespace fracguide::cli {

namespace {

constexpr std::size_t kMaxAlphaCount = 1'000'000;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(const std::string& flag, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError(flag, "expected a finite number, got '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& flag, const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(flag, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

Complex parse_complex(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(flag, parts[0]), 0.0};
  if (parts.size() != 2) throw ConfigError(flag, "expected 're,im', got '" + text + "'");
  return {parse_real(flag, parts[0]), parse_real(flag, parts[1])};
}

AlphaRange parse_alpha_range(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(flag, "expected 'start:stop:step', got '" + text + "'");
  return {parse_real(flag, parts[0]), parse_real(flag, parts[1]), parse_real(flag, parts[2])};
}

fieldkit::Range parse_range(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(flag, "expected 'min:max:count', got '" + text + "'");
  return {parse_real(flag, parts[0]), parse_real(flag, parts[1]), parse_count(flag, parts[2])};
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Fields: return "fields";
    case Command::Sweep: return "sweep";
    case Command::FieldLines: return "fieldlines";
    case Command::Impedance: return "impedance";
    case Command::Verify: return "verify";
  }
  return "?";
}

}  // namespace

std::vector<double> AlphaRange::values() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ConfigError("--alpha-range", "values must be finite");
  }
  if (!(step > 0.0)) throw ConfigError("--alpha-range", "step must be positive");
  if (stop < start) throw ConfigError("--alpha-range", "stop must not be below start");
  const double span = (stop - start) / step;
  if (span + 1.0 > static_cast<double>(kMaxAlphaCount)) {
    throw ConfigError("--alpha-range", "too many alpha values");
  }
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  if (std::abs(out.back() - stop) <= 1e-9 * step) out.back() = stop;
  return out;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Fractional dual fields and wall impedances of a parallel-plate DB waveguide",
               "fracguide"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  RunConfig cfg;
  double b = 0.0, angle = 0.0, alpha = 0.0, step = 0.0;
  std::string amp_te, amp_tm, alpha_range, point, grid, seeds, format = "csv", component = "both";

  auto* opt_b = app.add_option("--b", b, "Plate separation in meters (with --n, --k)");
  app.add_option("--n", cfg.n, "Mode index n >= 1")->capture_default_str();
  app.add_option("--k", cfg.k, "Wavenumber of the fill, rad/m")->capture_default_str();
  app.add_option("--eta", cfg.eta, "Wave impedance of the fill, ohm")->capture_default_str();
  auto* opt_angle = app.add_option("--angle", angle,
                                   "Propagation angle in radians; b = n pi / (k sin angle). "
                                   "Default pi/6 when --b is absent");
  auto* opt_amp_te = app.add_option("--amp-te", amp_te, "TE amplitude C_n as re,im (default 1,0)");
  auto* opt_amp_tm = app.add_option("--amp-tm", amp_tm, "TM amplitude A_n as re,im (default 1,0)");
  auto* opt_alpha = app.add_option("--alpha", alpha, "Single fractional order");
  auto* opt_range = app.add_option("--alpha-range", alpha_range, "start:stop:step");
  auto* opt_point = app.add_option("--point", point, "hy,bz in radians (default pi/4,pi/4)");
  auto* opt_grid = app.add_option("--grid", grid, "ymin:ymax:ny,zmin:zmax:nz");
  app.add_option("--phase", cfg.phase, "Snapshot phase for field lines, radians")
      ->capture_default_str();
  auto* opt_seeds = app.add_option("--seeds", seeds, "Seed grid ny,nz for field lines (default 8,8)");
  auto* opt_step = app.add_option("--step", step, "Field-line step in meters (default lambda/100)");
  app.add_option("--max-points", cfg.max_points, "Maximum points per field line")
      ->capture_default_str();
  app.add_option("--component", component, "Field lines to trace: E, H or both")
      ->capture_default_str();
  app.add_option("--format", format, "Output format: csv or json")->capture_default_str();
  auto* opt_out = app.add_option("--out", cfg.out, "Output file (default stdout)");

  std::vector<std::pair<CLI::App*, Command>> commands{
      {app.add_subcommand("fields", "Field samples on a (y, z) grid"), Command::Fields},
      {app.add_subcommand("sweep", "Field components at one point versus alpha"), Command::Sweep},
      {app.add_subcommand("fieldlines", "Field lines in the yz-plane"), Command::FieldLines},
      {app.add_subcommand("impedance", "Wall impedances versus alpha"), Command::Impedance},
      {app.add_subcommand("verify", "Run all oracle checks"), Command::Verify},
  };
  for (auto& [sub, command] : commands) {
    sub->footer("Guide, alpha and output options are listed by 'fracguide --help'.");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  if (opt_b->count()) cfg.b = b;
  if (opt_angle->count()) cfg.angle = angle;
  if (opt_amp_te->count()) cfg.amp_te = parse_complex("--amp-te", amp_te);
  if (opt_amp_tm->count()) cfg.amp_tm = parse_complex("--amp-tm", amp_tm);
  if (opt_alpha->count()) cfg.alpha = alpha;
  if (opt_range->count()) cfg.alpha_range = parse_alpha_range("--alpha-range", alpha_range);
  if (opt_point->count()) {
    const auto parts = split(point, ',');
    if (parts.size() != 2) throw ConfigError("--point", "expected 'hy,bz', got '" + point + "'");
    cfg.point = {parse_real("--point", parts[0]), parse_real("--point", parts[1])};
  }
  if (opt_grid->count()) {
    const auto parts = split(grid, ',');
    if (parts.size() != 2) {
      throw ConfigError("--grid", "expected 'ymin:ymax:ny,zmin:zmax:nz', got '" + grid + "'");
    }
    cfg.grid = fieldkit::SampleGrid{parse_range("--grid", parts[0]), parse_range("--grid", parts[1]),
                                    0.0};
  }
  if (opt_seeds->count()) {
    const auto parts = split(seeds, ',');
    if (parts.size() != 2) throw ConfigError("--seeds", "expected 'ny,nz', got '" + seeds + "'");
    cfg.seeds_y = parse_count("--seeds", parts[0]);
    cfg.seeds_z = parse_count("--seeds", parts[1]);
  }
  if (opt_step->count()) cfg.step = step;
  if (opt_out->count() && cfg.out->empty()) throw ConfigError("--out", "path is empty");

  if (component == "E") {
    cfg.lines = LineSelection::E;
  } else if (component == "H") {
    cfg.lines = LineSelection::H;
  } else if (component == "both") {
    cfg.lines = LineSelection::Both;
  } else {
    throw ConfigError("--component", "expected E, H or both, got '" + component + "'");
  }
  if (format == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (format == "json") {
    cfg.format = OutputFormat::Json;
  } else {
    throw ConfigError("--format", "expected csv or json, got '" + format + "'");
  }

  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (cfg.b && cfg.angle) throw ConfigError("--angle", "give either --b or --angle, not both");
  if (cfg.b && !(finite(*cfg.b) && *cfg.b > 0.0)) throw ConfigError("--b", "must be positive");
  if (cfg.angle && !(finite(*cfg.angle) && *cfg.angle > 0.0 && *cfg.angle < kPi / 2.0)) {
    throw ConfigError("--angle", "must lie strictly between 0 and pi/2");
  }
  if (cfg.n < 1) throw ConfigError("--n", "must be a positive integer");
  if (!(finite(cfg.k) && cfg.k > 0.0)) throw ConfigError("--k", "must be positive");
  if (!(finite(cfg.eta) && cfg.eta > 0.0)) throw ConfigError("--eta", "must be positive");
  if (!finite(cfg.amp_te.real()) || !finite(cfg.amp_te.imag())) {
    throw ConfigError("--amp-te", "must be finite");
  }
  if (!finite(cfg.amp_tm.real()) || !finite(cfg.amp_tm.imag())) {
    throw ConfigError("--amp-tm", "must be finite");
  }
  if (cfg.alpha && cfg.alpha_range) {
    throw ConfigError("--alpha", "give either --alpha or --alpha-range, not both");
  }
  if (cfg.alpha && !finite(*cfg.alpha)) throw ConfigError("--alpha", "must be finite");
  if (cfg.alpha_range) (void)cfg.alpha_range->values();
  if (!finite(cfg.point.hy) || !finite(cfg.point.bz)) throw ConfigError("--point", "must be finite");
  if (cfg.grid) {
    for (const fieldkit::Range* r : {&cfg.grid->y, &cfg.grid->z}) {
      if (r->count < 2 || !finite(r->min) || !finite(r->max) || !(r->min < r->max)) {
        throw ConfigError("--grid", "each range needs min < max and count >= 2");
      }
    }
  }
  if (!finite(cfg.phase)) throw ConfigError("--phase", "must be finite");
  if (cfg.seeds_y < 1 || cfg.seeds_z < 1) throw ConfigError("--seeds", "counts must be >= 1");
  if (cfg.step && !(finite(*cfg.step) && *cfg.step > 0.0)) {
    throw ConfigError("--step", "must be positive");
  }
  if (cfg.max_points < 2) throw ConfigError("--max-points", "must be at least 2");
}

guide::GuideConfig make_guide(const RunConfig& cfg) {
  validate(cfg);
  const char* flag = cfg.b ? "--b" : "--angle";
  try {
    const emcore::Medium medium(cfg.k, cfg.eta);
    if (cfg.b) return guide::GuideConfig::create(*cfg.b, cfg.n, medium, cfg.amp_te, cfg.amp_tm);
    return guide::GuideConfig::from_angle(cfg.angle.value_or(kPi / 6.0), cfg.n, medium, cfg.amp_te,
                                          cfg.amp_tm);
  } catch (const EvanescentMode& e) {
    throw ConfigError(flag, e.what());
  } catch (const DomainError& e) {
    throw ConfigError(flag, e.what());
  }
}

std::vector<double> alphas_for(const RunConfig& cfg) {
  if (cfg.alpha) return {*cfg.alpha};
  if (cfg.alpha_range) return cfg.alpha_range->values();
  switch (cfg.command) {
    case Command::Sweep:
    case Command::Impedance: return AlphaRange{0.0, 1.0, 0.05}.values();
    case Command::FieldLines: return {0.0, 0.5, 1.0};
    case Command::Fields:
    case Command::Verify: break;
  }
  return {0.0};
}

namespace {

const std::vector<std::string> kComponentColumns{
    "e_x_re",    "e_x_im",    "e_y_re",    "e_y_im",    "e_z_re",    "e_z_im",
    "etah_x_re", "etah_x_im", "etah_y_re", "etah_y_im", "etah_z_re", "etah_z_im"};

void append_components(std::vector<table::Cell>& row, const FieldSample& s) {
  for (double v : fieldkit::component_table(s)) row.emplace_back(v);
}

void append_complex(std::vector<table::Cell>& row, const std::optional<Complex>& v) {
  if (v) {
    row.emplace_back(v->real());
    row.emplace_back(v->imag());
  } else {
    row.emplace_back(std::monostate{});
    row.emplace_back(std::monostate{});
  }
}

table::Table sweep_table(const RunConfig& cfg, const guide::GuideConfig& g) {
  table::Table t;
  t.columns = {"alpha"};
  t.columns.insert(t.columns.end(), kComponentColumns.begin(), kComponentColumns.end());
  const auto alphas = alphas_for(cfg);
  std::vector<fieldkit::SweepRow> rows;
  try {
    rows = fieldkit::alpha_sweep(g, cfg.point, alphas);
  } catch (const DomainError& e) {
    throw ConfigError("--point", e.what());
  }
  for (const auto& r : rows) {
    std::vector<table::Cell> row{r.alpha};
    append_components(row, r.sample);
    t.add_row(std::move(row));
  }
  return t;
}

table::Table fields_table(const RunConfig& cfg, const guide::GuideConfig& g) {
  fieldkit::SampleGrid grid = cfg.grid.value_or(fieldkit::SampleGrid{
      {0.0, g.b(), 9}, {0.0, fieldkit::guided_wavelength(g), 17}, 0.0});
  if (grid.y.min < 0.0 || grid.y.max > g.b()) {
    throw ConfigError("--grid", "y range must lie within [0, b]");
  }
  table::Table t;
  t.columns = {"alpha", "y", "z"};
  t.columns.insert(t.columns.end(), kComponentColumns.begin(), kComponentColumns.end());
  for (double alpha : alphas_for(cfg)) {
    for (const FieldSample& s : fieldkit::sample_grid(g, alpha, grid)) {
      std::vector<table::Cell> row{alpha, s.point.y, s.point.z};
      append_components(row, s);
      t.add_row(std::move(row));
    }
  }
  return t;
}

table::Table fieldlines_table(const RunConfig& cfg, const guide::GuideConfig& g) {
  fieldkit::TraceOptions opts;
  opts.phase = cfg.phase;
  opts.step = cfg.step.value_or(2.0 * kPi / g.k() / 100.0);
  opts.max_points = cfg.max_points;
  opts.z_min = 0.0;
  opts.z_max = fieldkit::guided_wavelength(g);
  const auto seeds = fieldkit::default_seeds(g, cfg.seeds_y, cfg.seeds_z);

  std::vector<fieldkit::FieldComponent> components;
  if (cfg.lines != LineSelection::H) components.push_back(fieldkit::FieldComponent::E);
  if (cfg.lines != LineSelection::E) components.push_back(fieldkit::FieldComponent::H);

  table::Table t;
  t.columns = {"line_id", "alpha", "component", "y", "z"};
  std::int64_t id = 0;
  for (double alpha : alphas_for(cfg)) {
    for (fieldkit::FieldComponent c : components) {
      const std::string name = c == fieldkit::FieldComponent::E ? "E" : "H";
      for (const fieldkit::FieldLine& line : fieldkit::trace_fieldlines(g, alpha, c, seeds, opts)) {
        for (const Point& p : line.points) t.add_row({id, alpha, name, p.y, p.z});
        ++id;
      }
    }
  }
  return t;
}

table::Table impedance_table(const RunConfig& cfg, const guide::GuideConfig& g) {
  table::Table t;
  t.columns = {"alpha",      "z_xz_re",     "z_xz_im",     "z_zx_re",     "z_zx_im",
               "y_xz_re",    "y_xz_im",     "y_zx_re",     "y_zx_im",     "Z_xz_ohm_re",
               "Z_xz_ohm_im", "Z_zx_ohm_re", "Z_zx_ohm_im", "infinite"};
  for (double alpha : alphas_for(cfg)) {
    const impedance::ImpedancePair z = impedance::wall_impedance_matrix(alpha);
    const impedance::ImpedancePair phys = impedance::wave_impedance(g, alpha, 0.0);
    std::vector<table::Cell> row{alpha};
    append_complex(row, z.xz.impedance);
    append_complex(row, z.zx.impedance);
    append_complex(row, z.xz.admittance);
    append_complex(row, z.zx.admittance);
    append_complex(row, phys.xz.impedance);
    append_complex(row, phys.zx.impedance);
    const bool infinite = z.xz.infinite() || z.zx.infinite();
    row.emplace_back(std::int64_t{infinite ? 1 : 0});
    t.add_row(std::move(row));
  }
  return t;
}

nlohmann::ordered_json config_echo(const RunConfig& cfg, const guide::GuideConfig& g) {
  nlohmann::ordered_json j;
  j["command"] = command_name(cfg.command);
  j["b"] = g.b();
  j["n"] = g.n();
  j["k"] = g.k();
  j["eta"] = g.eta();
  j["h"] = g.h();
  j["beta"] = g.beta();
  j["amp_te"] = {g.amp_te().real(), g.amp_te().imag()};
  j["amp_tm"] = {g.amp_tm().real(), g.amp_tm().imag()};
  j["alphas"] = alphas_for(cfg);
  j["point"] = {cfg.point.hy, cfg.point.bz};
  j["phase"] = cfg.phase;
  return j;
}

}  // namespace

table::Table build_table(const RunConfig& cfg) {
  const guide::GuideConfig g = make_guide(cfg);
  switch (cfg.command) {
    case Command::Fields: return fields_table(cfg, g);
    case Command::Sweep: return sweep_table(cfg, g);
    case Command::FieldLines: return fieldlines_table(cfg, g);
    case Command::Impedance: return impedance_table(cfg, g);
    case Command::Verify: break;
  }
  throw ConfigError("command", "verify does not produce a table");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const guide::GuideConfig g = make_guide(cfg);
  if (cfg.command == Command::Verify) {
    bool all = true;
    std::ostringstream report;
    for (const verify::CheckResult& r : verify::run_verification(g)) {
      all = all && r.passed;
      report << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  max=" << std::scientific
             << std::setprecision(3) << r.worst << "  tol=" << r.tolerance << '\n';
    }
    report << (all ? "all checks passed\n" : "verification FAILED\n");
    if (cfg.out) {
      table::write_file_atomic(*cfg.out, report.str());
    } else {
      out << report.str();
    }
    if (!all) err << "verification failed\n";
    return all ? kExitOk : kExitVerifyFailed;
  }

  const table::Table t = build_table(cfg);
  std::ostringstream buf;
  if (cfg.format == OutputFormat::Csv) {
    table::write_csv(t, buf);
  } else {
    table::write_json(t, config_echo(cfg, g), buf);
  }
  if (cfg.out) {
    table::write_file_atomic(*cfg.out, buf.str());
  } else {
    out << buf.str();
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<RunConfig> cfg = parse_args(args, out);
    if (!cfg) return kExitOk;
    return run(*cfg, out, err);
  } catch (const ConfigError& e) {
    err << "fracguide: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "fracguide: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fracguide::cli
