// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
//   acceptance                  check everything
//   acceptance --update-golden  rewrite the snapshot files, then check

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracguide/cli.hpp"
#include "fracguide/emcore.hpp"
#include "fracguide/fieldkit.hpp"
#include "fracguide/guide.hpp"
#include "fracguide/impedance.hpp"
#include "fracguide/linop.hpp"
#include "oracles.hpp"

using namespace fracguide;
using guide::GuideConfig;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  std::printf("%s %d %s: %s\n", passed ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!passed) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

GuideConfig reference_guide() {
  return GuideConfig::from_angle(kPi / 6.0, 1, emcore::Medium(1.0, 376.730313668));
}

Point random_interior(std::mt19937_64& rng, const GuideConfig& cfg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {cfg.b() * (0.001 + 0.998 * u(rng)), 2.0 * fieldkit::guided_wavelength(cfg) * u(rng)};
}

void operator_axioms() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ComplexMatrix3 identity = ComplexMatrix3::Identity();
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix3 m = oracle::random_diagonalizable(rng);
    const ComplexVec3 v = oracle::random_vector(rng);
    const linop::EigenSystem sys = linop::eigendecompose(m);
    const double a1 = u(rng), a2 = u(rng);
    worst = std::max(worst, oracle::relative(linop::fractional_power(sys, 1.0), m));
    worst = std::max(worst, oracle::relative(linop::fractional_power(sys, 0.0), identity));
    worst = std::max(worst, oracle::relative(linop::apply_fractional(sys, 1.0, v), ComplexVec3(m * v)));
    worst = std::max(worst, oracle::relative(linop::apply_fractional(sys, 0.0, v), v));
    const ComplexVec3 stepwise = linop::fractional_power(sys, a1) * linop::apply_fractional(sys, a2, v);
    worst = std::max(worst, oracle::relative(stepwise, linop::apply_fractional(sys, a1 + a2, v)));
  }
  report(1, "fractional operator axioms", worst < 1e-10, fmt("max rel err %.3e (tol 1e-10)", worst));
}

void curl_rotation() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0, worst_norm = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double k = 0.25 + 4.0 * u(rng);
    const emcore::Medium medium(k, 376.730313668);
    const RealVec3 khat = oracle::random_direction(rng);
    const ComplexVec3 kc = khat.cast<Complex>();
    ComplexVec3 e = oracle::random_vector(rng);
    e -= kc * (kc.transpose() * e)(0);
    const emcore::PlaneWave pw{e, oracle::cross3(kc, e), k * khat};
    const double alpha = u(rng);

    const emcore::PlaneWave got = emcore::fractional_curl(pw, alpha, medium);
    const double theta = alpha * kPi / 2.0;
    const ComplexVec3 want_e = oracle::rodrigues(khat, pw.e0, theta);
    const ComplexVec3 want_h = oracle::rodrigues(khat, pw.eta_h0, theta);
    worst = std::max({worst, oracle::relative(got.e0, want_e), oracle::relative(got.eta_h0, want_h)});
    worst_norm = std::max({worst_norm, std::abs(got.e0.norm() - pw.e0.norm()) / pw.e0.norm(),
                           std::abs(got.eta_h0.norm() - pw.eta_h0.norm()) / pw.eta_h0.norm()});
  }
  report(2, "fractional curl rotation", worst < 1e-12 && worst_norm < 1e-12,
         fmt("max rel err %.3e (tol 1e-12), ", worst) + fmt("norm drift %.3e (tol 1e-12)", worst_norm));
}

void duality_endpoints() {
  const GuideConfig cfg = reference_guide();
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Point p = random_interior(rng, cfg);
    const FieldSample f0 = guide::db_fractional(cfg, 0.0, p);
    const FieldSample f1 = guide::db_fractional(cfg, 1.0, p);
    const FieldSample want = duality_map(f0);
    const double scale = std::hypot(want.e.norm(), want.eta_h.norm());
    worst = std::max(worst, oracle::deviation(f1, want, scale));
  }
  report(3, "duality endpoints", worst < 1e-12, fmt("max rel err %.3e (tol 1e-12)", worst));
}

void db_walls() {
  const GuideConfig cfg = reference_guide();
  std::vector<double> zs;
  for (int i = 0; i < 32; ++i) zs.push_back(fieldkit::guided_wavelength(cfg) * i / 32.0);
  double wall = 0.0;
  for (double alpha : {0.0, 1.0}) {
    const auto r = fieldkit::boundary_residual(cfg, alpha, zs);
    wall = std::max({wall, r.e_normal, r.h_normal});
  }

  // |E_y(y = 0)| = (beta / 2h) |C - i A| |sin(alpha pi)|.
  const double c = cfg.beta() / (2.0 * cfg.h()) * std::abs(cfg.amp_te() - Complex(0.0, 1.0) * cfg.amp_tm());
  double profile = 0.0, best = -1.0, argmax = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double alpha = 0.05 * i;
    const double got = std::abs(guide::db_fractional(cfg, alpha, {0.0, 0.37}).e(1));
    profile = std::max(profile, std::abs(got - c * std::abs(std::sin(alpha * kPi))) / c);
    if (got > best) {
      best = got;
      argmax = alpha;
    }
  }
  const bool peak = std::abs(argmax - 0.5) < 1e-12;
  report(4, "DB wall conditions", wall < 1e-12 && profile < 1e-10 && peak,
         fmt("wall residual %.3e (tol 1e-12), ", wall) + fmt("profile rel err %.3e (tol 1e-10), ", profile) +
             fmt("peak at alpha=%.2f", argmax));
}

void path_equivalence() {
  const GuideConfig cfg = reference_guide();
  const double m = fieldkit::max_field(cfg);
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double closed_sum = 0.0, closed_waves = 0.0, sum_waves = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double alpha = u(rng);
    const Point p = random_interior(rng, cfg);
    const FieldSample closed = guide::db_fractional_closed_form(cfg, alpha, p);
    const FieldSample sum = guide::db_fractional(cfg, alpha, p);
    const FieldSample waves = fieldkit::planewave_path(cfg, alpha, p);
    closed_sum = std::max(closed_sum, oracle::deviation(closed, sum, m));
    closed_waves = std::max(closed_waves, oracle::deviation(closed, waves, m));
    sum_waves = std::max(sum_waves, oracle::deviation(sum, waves, m));
  }
  const double tol = 1e-12;
  report(5, "path equivalence", closed_sum < tol && closed_waves < tol && sum_waves < tol,
         fmt("closed/sum %.3e, ", closed_sum) + fmt("closed/plane-wave %.3e, ", closed_waves) +
             fmt("sum/plane-wave %.3e (tol 1e-12)", sum_waves));
}

void maxwell() {
  const GuideConfig cfg = reference_guide();
  const double lambda = 2.0 * kPi / cfg.k();
  const double d = 1e-4 * lambda;
  double worst = 0.0;
  double sq_coarse[2] = {0.0, 0.0}, sq_fine[2] = {0.0, 0.0};
  for (int j = 1; j <= 5; ++j) {
    for (int i = 0; i < 5; ++i) {
      const Point p{cfg.b() * j / 6.0, fieldkit::guided_wavelength(cfg) * i / 5.0};
      for (int a = 0; a <= 10; ++a) {
        const double alpha = 0.1 * a;
        const auto r = fieldkit::maxwell_residual(cfg, alpha, p, d);
        const auto h = fieldkit::maxwell_residual(cfg, alpha, p, d / 2.0);
        worst = std::max({worst, r.r1, r.r2});
        sq_coarse[0] += r.r1 * r.r1;
        sq_coarse[1] += r.r2 * r.r2;
        sq_fine[0] += h.r1 * h.r1;
        sq_fine[1] += h.r2 * h.r2;
      }
    }
  }
  // Ratio of lattice RMS residuals when the step is halved.
  const double ratio1 = std::sqrt(sq_coarse[0] / sq_fine[0]);
  const double ratio2 = std::sqrt(sq_coarse[1] / sq_fine[1]);
  auto in_band = [](double r) { return r >= 3.5 && r <= 4.5; };
  report(6, "Maxwell residual", worst < 1e-5 && in_band(ratio1) && in_band(ratio2),
         fmt("max residual %.3e (tol 1e-5), ", worst) + fmt("halving ratios r1 %.3f ", ratio1) +
             fmt("r2 %.3f (band [3.5, 4.5])", ratio2));
}

void impedance_values() {
  double endpoint = 0.0;
  for (double alpha : {0.0, 1.0}) {
    const auto z = impedance::wall_impedance_matrix(alpha);
    const bool shape = !z.xz.infinite() && z.zx.infinite() && z.zx.admittance.has_value();
    endpoint = std::max(endpoint, shape ? std::max(std::abs(*z.xz.impedance), std::abs(*z.zx.admittance)) : 1.0);
  }
  const auto mid = impedance::wall_impedance_matrix(0.5);
  const double midpoint = mid.xz.infinite() || mid.zx.infinite()
                              ? 1.0
                              : std::max(std::abs(*mid.xz.impedance - 1.0), std::abs(*mid.zx.impedance - 1.0));

  // Field ratios -E_x/H_z and -E_z/H_x against the formulas. When the
  // impedance itself vanishes the error is measured against eta.
  std::mt19937_64 rng(1007);
  double ratio = 0.0;
  int compared = 0;
  for (int t = 0; t < 4; ++t) {
    const GuideConfig cfg = t == 0 ? reference_guide()
                                   : reference_guide().with_amplitudes(oracle::random_complex(rng),
                                                                    oracle::random_complex(rng));
    const double m = fieldkit::max_field(cfg);
    for (int a = 0; a <= 20; ++a) {
      const double alpha = 0.05 * a;
      for (int j = 0; j <= 20; ++j) {
        const double y = cfg.b() * j / 20.0;
        const FieldSample f = guide::db_fractional(cfg, alpha, {y, 0.0});
        const auto z = impedance::wave_impedance(cfg, alpha, y);
        const std::pair<const impedance::ImpedanceValue*, std::pair<Complex, Complex>> pairs[] = {
            {&z.xz, {-f.e(0), f.eta_h(2)}}, {&z.zx, {-f.e(2), f.eta_h(0)}}};
        for (const auto& [value, nd] : pairs) {
          if (std::abs(nd.second) / m <= 1e-10) continue;
          const Complex want = cfg.eta() * nd.first / nd.second;
          const double err = value->infinite()
                                 ? 1.0
                                 : std::abs(*value->impedance - want) / std::max(std::abs(want), cfg.eta());
          ratio = std::max(ratio, err);
          ++compared;
        }
      }
    }
  }
  report(7, "impedance values", endpoint <= 1e-14 && midpoint < 1e-12 && ratio < 1e-10 && compared > 0,
         fmt("endpoints %.3e (tol 1e-14), ", endpoint) + fmt("midpoint %.3e (tol 1e-12), ", midpoint) +
             fmt("field ratio rel err %.3e (tol 1e-10)", ratio) + " over " + std::to_string(compared) + " ratios");
}

struct Snapshot {
  std::string file;
  std::vector<std::string> args;
};

const std::vector<Snapshot> kSnapshots{
    {"sweep.csv", {"sweep"}},
    {"impedance.csv", {"impedance"}},
    {"fieldlines.csv", {"fieldlines", "--seeds", "3,3", "--max-points", "200"}},
};

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fracguide");
  std::ostringstream out, err;
  if (cli::main_entry(args, out, err) != cli::kExitOk) return "<error> " + err.str();
  return out.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) return "<missing>";
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void golden(bool update) {
  const std::filesystem::path dir(FRACGUIDE_GOLDEN_DIR);
  if (update) {
    std::filesystem::create_directories(dir);
    for (const Snapshot& s : kSnapshots) std::ofstream(dir / s.file, std::ios::binary) << run_cli(s.args);
  }
  bool ok = true;
  std::string detail;
  for (const Snapshot& s : kSnapshots) {
    const std::string first = run_cli(s.args);
    const bool stable = first == run_cli(s.args);
    const bool matches = first == read_file(dir / s.file);
    ok = ok && stable && matches;
    if (!detail.empty()) detail += ", ";
    detail += s.file + (stable ? " stable" : " UNSTABLE") + (matches ? "/matches" : "/DIFFERS");
  }
  report(8, "reference snapshots", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const bool update = argc > 1 && std::string(argv[1]) == "--update-golden";
  operator_axioms();
  curl_rotation();
  duality_endpoints();
  db_walls();
  path_equivalence();
  maxwell();
  impedance_values();
  golden(update);
  return failures == 0 ? 0 : 1;
}
