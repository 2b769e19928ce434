#include "fracguide/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracguide/emcore.hpp"
#include "fracguide/fieldkit.hpp"
#include "fracguide/impedance.hpp"
#include "fracguide/linop.hpp"

namespace fracguide::verify {

namespace {

class Check {
 public:
  Check(std::string name, double tolerance) : result_{std::move(name), 0.0, tolerance, true} {}

  void observe(double error) {
    if (!(error <= result_.tolerance)) result_.passed = false;
    if (std::isnan(error) || error > result_.worst) result_.worst = error;
  }
  void require(bool ok) {
    if (!ok) result_.passed = false;
  }
  CheckResult done() const { return result_; }

 private:
  CheckResult result_;
};

double relative(const ComplexMatrix3& got, const ComplexMatrix3& want) {
  return (got - want).norm() / std::max(want.norm(), 1e-300);
}

double relative(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<double> grid_alphas(double step) {
  const int n = static_cast<int>(std::lround(1.0 / step));
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) out.push_back(i == n ? 1.0 : i * step);
  return out;
}

std::vector<Point> interior_points(const guide::GuideConfig& cfg) {
  std::vector<Point> pts;
  const double lz = fieldkit::guided_wavelength(cfg);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) pts.push_back({cfg.b() * (i + 1) / 6.0, lz * j / 5.0});
  }
  return pts;
}

CheckResult check_linop(const guide::GuideConfig& cfg) {
  Check check("fractional operator: identity, operator, additivity, reconstruction", 1e-10);
  std::mt19937_64 rng(20240501);
  std::normal_distribution<double> normal;
  auto rc = [&] { return Complex(normal(rng), normal(rng)); };

  std::vector<ComplexMatrix3> operators;
  operators.push_back(emcore::cross_operator_matrix(RealVec3(0.0, -cfg.h(), cfg.beta())));
  for (int n = 0; n < 20; ++n) {
    ComplexMatrix3 basis;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) basis(i, j) = rc();
    ComplexVec3 diag(rc(), rc(), rc());
    operators.push_back(basis * diag.asDiagonal() * basis.inverse());
  }
  for (const ComplexMatrix3& m : operators) {
    const linop::EigenSystem sys = linop::eigendecompose(m);
    check.observe(relative(linop::fractional_power(sys, 1.0), m));
    check.observe(relative(linop::fractional_power(sys, 0.0), ComplexMatrix3::Identity()));
    const bool nonsingular = std::all_of(sys.eigenvalues.begin(), sys.eigenvalues.end(),
                                         [](Complex a) { return a != Complex(0.0, 0.0); });
    if (nonsingular) {
      const ComplexMatrix3 lhs =
          linop::fractional_power(sys, 0.3) * linop::fractional_power(sys, 0.45);
      check.observe(relative(lhs, linop::fractional_power(sys, 0.75)));
    }
  }
  return check.done();
}

CheckResult check_fractional_curl(const guide::GuideConfig& cfg) {
  Check check("fractional curl: duality at alpha=1, additivity, norm", 1e-10);
  for (guide::ModeFamily family : {guide::ModeFamily::TE, guide::ModeFamily::TM}) {
    const auto [w1, w2] = guide::planewave_decomposition(cfg, family);
    for (const emcore::PlaneWave& w : {w1, w2}) {
      const double scale = std::hypot(w.e0.norm(), w.eta_h0.norm());
      const emcore::PlaneWave dual = emcore::fractional_curl(w, 1.0, cfg.medium());
      check.observe(std::hypot((dual.e0 - w.eta_h0).norm(), (dual.eta_h0 + w.e0).norm()) / scale);
      const emcore::PlaneWave two_step = emcore::fractional_curl(
          emcore::fractional_curl(w, 0.3, cfg.medium()), 0.45, cfg.medium());
      const emcore::PlaneWave one_step = emcore::fractional_curl(w, 0.75, cfg.medium());
      check.observe(
          std::hypot((two_step.e0 - one_step.e0).norm(), (two_step.eta_h0 - one_step.eta_h0).norm()) /
          scale);
      const emcore::PlaneWave partial = emcore::fractional_curl(w, 0.37, cfg.medium());
      check.observe(std::abs(partial.e0.norm() - w.e0.norm()) / w.e0.norm());
    }
  }
  return check.done();
}

}  // namespace

double field_deviation(const FieldSample& a, const FieldSample& b, double scale) {
  return std::hypot((a.e - b.e).norm(), (a.eta_h - b.eta_h).norm()) / scale;
}

std::vector<CheckResult> run_verification(const guide::GuideConfig& cfg) {
  std::vector<CheckResult> results;
  const double scale = fieldkit::max_field(cfg);
  const auto points = interior_points(cfg);
  const auto alphas = grid_alphas(0.1);

  results.push_back(check_linop(cfg));
  results.push_back(check_fractional_curl(cfg));

  {
    Check check("closed form equals TE-PEC + TM-PMC sum", 1e-12);
    for (double alpha : alphas)
      for (const Point& p : points)
        check.observe(field_deviation(guide::db_fractional_closed_form(cfg, alpha, p),
                                      guide::db_fractional(cfg, alpha, p), scale));
    results.push_back(check.done());
  }
  {
    Check check("plane-wave fractional-curl path at alpha in {0, 1}", 1e-12);
    for (double alpha : {0.0, 1.0})
      for (const Point& p : points)
        check.observe(field_deviation(fieldkit::planewave_path(cfg, alpha, p),
                                      guide::db_fractional(cfg, alpha, p), scale));
    results.push_back(check.done());
  }
  {
    Check check("duality endpoints: alpha=1 is (etaH, -E) of alpha=0", 1e-12);
    for (const Point& p : points)
      check.observe(field_deviation(guide::db_fractional(cfg, 1.0, p),
                                    duality_map(guide::db_fractional(cfg, 0.0, p)), scale));
    results.push_back(check.done());
  }

  std::vector<double> z_samples;
  for (int i = 0; i < 16; ++i) z_samples.push_back(fieldkit::guided_wavelength(cfg) * i / 16.0);
  {
    Check check("DB walls: normal E and etaH vanish at alpha in {0, 1}", 1e-12);
    for (double alpha : {0.0, 1.0}) {
      const fieldkit::WallResidual r = fieldkit::boundary_residual(cfg, alpha, z_samples);
      check.observe(r.e_normal);
      check.observe(r.h_normal);
    }
    results.push_back(check.done());
  }
  {
    // |E_y(y=0)| = (beta / 2h) |C_n - i A_n| |sin(alpha pi)|.
    Check check("wall normal E_y follows |sin(alpha pi)|, peak at alpha=0.5", 1e-10);
    const double c = cfg.beta() / (2.0 * cfg.h()) * std::abs(cfg.amp_te() - Complex(0, 1) * cfg.amp_tm());
    double best = -1.0;
    double best_alpha = -1.0;
    for (double alpha : grid_alphas(0.05)) {
      const double ey = std::abs(guide::db_fractional(cfg, alpha, {0.0, 0.0}).e(1));
      const double expected = c * std::abs(std::sin(alpha * kPi));
      check.observe(c > 0.0 ? std::abs(ey - expected) / c : ey / scale);
      if (ey > best) {
        best = ey;
        best_alpha = alpha;
      }
    }
    if (c > 0.0) check.require(std::abs(best_alpha - 0.5) < 1e-12);
    results.push_back(check.done());
  }
  {
    Check check("finite-difference Maxwell residual (5x5x11 lattice)", 1e-5);
    const double fd = 1e-4 * 2.0 * kPi / cfg.k();
    for (double alpha : alphas)
      for (const Point& p : points) {
        const fieldkit::MaxwellResidual r = fieldkit::maxwell_residual(cfg, alpha, p, fd);
        check.observe(r.r1);
        check.observe(r.r2);
      }
    results.push_back(check.done());
  }
  {
    Check check("finite-difference Helmholtz residual", 1e-5);
    const double fd = 1e-3 * 2.0 * kPi / cfg.k();
    for (double alpha : alphas)
      for (const Point& p : points) check.observe(fieldkit::helmholtz_residual(cfg, alpha, p, fd));
    results.push_back(check.done());
  }
  {
    Check check("wall impedance: z_xz = 0 and z_zx infinite at alpha in {0, 1}", 1e-14);
    for (double alpha : {0.0, 1.0}) {
      const impedance::ImpedancePair z = impedance::wall_impedance_matrix(alpha);
      check.require(z.xz.impedance.has_value() && z.zx.infinite());
      if (z.xz.impedance) check.observe(std::abs(*z.xz.impedance));
      if (z.zx.admittance) check.observe(std::abs(*z.zx.admittance));
    }
    results.push_back(check.done());
  }
  {
    Check check("wall impedance: z_xz = z_zx = 1 at alpha = 0.5", 1e-12);
    const impedance::ImpedancePair mid = impedance::wall_impedance_matrix(0.5);
    check.require(mid.xz.impedance.has_value() && mid.zx.impedance.has_value());
    if (mid.xz.impedance) check.observe(std::abs(*mid.xz.impedance - 1.0));
    if (mid.zx.impedance) check.observe(std::abs(*mid.zx.impedance - 1.0));
    results.push_back(check.done());
  }
  {
    Check check("wave impedance matches field ratios", 1e-10);
    for (double alpha : grid_alphas(0.05)) {
      for (int i = 0; i <= 8; ++i) {
        const double y = cfg.b() * i / 8.0;
        const impedance::ImpedancePair formula = impedance::wave_impedance(cfg, alpha, y);
        const impedance::ImpedancePair ratio = fieldkit::field_ratio_impedance(cfg, alpha, y);
        const FieldSample s = guide::db_fractional(cfg, alpha, {y, 0.0});
        if (std::abs(s.eta_h(2)) / scale > 1e-10 && formula.xz.impedance && ratio.xz.impedance)
          check.observe(relative(*formula.xz.impedance, *ratio.xz.impedance));
        if (std::abs(s.eta_h(0)) / scale > 1e-10 && formula.zx.impedance && ratio.zx.impedance)
          check.observe(relative(*formula.zx.impedance, *ratio.zx.impedance));
      }
    }
    results.push_back(check.done());
  }
  return results;
}

}  // namespace fracguide::verify
