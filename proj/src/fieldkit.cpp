#include "fracguide/fieldkit.hpp"

#include <cmath>

#include "fracguide/emcore.hpp"
#include "fracguide/errors.hpp"

namespace fracguide::fieldkit {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr std::size_t kMaxFieldSamples = 513;

struct Vec2 {
  double y, z;
};

}  // namespace

std::vector<double> Range::values() const {
  if (count < 2) throw DomainError("range needs at least 2 samples");
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw DomainError("range needs finite min < max");
  }
  std::vector<double> out(count);
  const double span = max - min;
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = min + span * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = max;
  return out;
}

std::array<double, 12> component_table(const FieldSample& s) {
  std::array<double, 12> out{};
  for (int i = 0; i < 3; ++i) {
    out[2 * i] = s.e(i).real();
    out[2 * i + 1] = s.e(i).imag();
    out[6 + 2 * i] = s.eta_h(i).real();
    out[6 + 2 * i + 1] = s.eta_h(i).imag();
  }
  return out;
}

std::vector<SweepRow> alpha_sweep(const guide::GuideConfig& cfg, NormalizedPoint point,
                                  std::span<const double> alphas) {
  const Point p{point.hy / cfg.h(), point.bz / cfg.beta()};
  if (!(p.y >= 0.0 && p.y <= cfg.b())) {
    throw DomainError("alpha_sweep: hy places the point outside the guide");
  }
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) rows.push_back({alpha, guide::db_fractional(cfg, alpha, p)});
  return rows;
}

std::vector<FieldSample> sample_grid(const guide::GuideConfig& cfg, double alpha,
                                     const SampleGrid& grid) {
  const auto ys = grid.y.values();
  const auto zs = grid.z.values();
  if (ys.front() < 0.0 || ys.back() > cfg.b()) {
    throw DomainError("sample grid: y range must lie within [0, b]");
  }
  std::vector<FieldSample> out;
  out.reserve(ys.size() * zs.size());
  for (double y : ys) {
    for (double z : zs) out.push_back(guide::db_fractional(cfg, alpha, {y, z}));
  }
  return out;
}

double max_field(const guide::GuideConfig& cfg) {
  double best = 0.0;
  for (std::size_t i = 0; i < kMaxFieldSamples; ++i) {
    const double y = cfg.b() * static_cast<double>(i) / (kMaxFieldSamples - 1);
    best = std::max(best, max_component(guide::db_fractional(cfg, 0.0, {y, 0.0})));
  }
  return best;
}

double guided_wavelength(const guide::GuideConfig& cfg) { return 2.0 * kPi / cfg.beta(); }

std::vector<Point> default_seeds(const guide::GuideConfig& cfg, std::size_t ny, std::size_t nz) {
  std::vector<Point> seeds;
  seeds.reserve(ny * nz);
  const double lz = guided_wavelength(cfg);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nz; ++i) {
      seeds.push_back({cfg.b() * (static_cast<double>(j) + 0.5) / static_cast<double>(ny),
                       lz * (static_cast<double>(i) + 0.5) / static_cast<double>(nz)});
    }
  }
  return seeds;
}

std::vector<FieldLine> trace_fieldlines(const guide::GuideConfig& cfg, double alpha,
                                        FieldComponent component, std::span<const Point> seeds,
                                        const TraceOptions& options) {
  if (!(options.step > 0.0) || !std::isfinite(options.step)) {
    throw DomainError("trace_fieldlines: step must be positive");
  }
  const double floor = 1e-12 * max_field(cfg);
  const Complex snapshot = std::polar(1.0, options.phase);
  const double sign = options.direction < 0 ? -1.0 : 1.0;

  auto inside = [&](Vec2 p) {
    return p.y >= 0.0 && p.y <= cfg.b() && p.z >= options.z_min && p.z <= options.z_max;
  };
  // Unit direction at p, or nothing at a stagnation point.
  auto direction = [&](Vec2 p, bool& stagnant) -> Vec2 {
    const FieldSample s = guide::db_fractional(cfg, alpha, {p.y, p.z});
    const ComplexVec3& f = component == FieldComponent::E ? s.e : s.eta_h;
    const double fy = (f(1) * snapshot).real();
    const double fz = (f(2) * snapshot).real();
    const double mag = std::hypot(fy, fz);
    if (mag < floor) {
      stagnant = true;
      return {0.0, 0.0};
    }
    return {sign * fy / mag, sign * fz / mag};
  };
  auto end_reason = [&](Vec2 p) {
    return (p.y < 0.0 || p.y > cfg.b()) ? LineEnd::Wall : LineEnd::ZBound;
  };

  const double ds = options.step;
  std::vector<FieldLine> lines;
  lines.reserve(seeds.size());
  for (const Point& seed : seeds) {
    FieldLine line;
    line.component = component;
    line.seed = seed;
    Vec2 p{seed.y, seed.z};
    if (!inside(p)) {
      line.end = end_reason(p);
      lines.push_back(std::move(line));
      continue;
    }
    line.points.push_back(seed);
    line.end = LineEnd::MaxPoints;
    while (line.points.size() < options.max_points) {
      bool stagnant = false;
      const Vec2 k1 = direction(p, stagnant);
      Vec2 stage{p.y + 0.5 * ds * k1.y, p.z + 0.5 * ds * k1.z};
      if (stagnant) { line.end = LineEnd::Stagnation; break; }
      if (!inside(stage)) { line.end = end_reason(stage); break; }
      const Vec2 k2 = direction(stage, stagnant);
      stage = {p.y + 0.5 * ds * k2.y, p.z + 0.5 * ds * k2.z};
      if (stagnant) { line.end = LineEnd::Stagnation; break; }
      if (!inside(stage)) { line.end = end_reason(stage); break; }
      const Vec2 k3 = direction(stage, stagnant);
      stage = {p.y + ds * k3.y, p.z + ds * k3.z};
      if (stagnant) { line.end = LineEnd::Stagnation; break; }
      if (!inside(stage)) { line.end = end_reason(stage); break; }
      const Vec2 k4 = direction(stage, stagnant);
      if (stagnant) { line.end = LineEnd::Stagnation; break; }
      const Vec2 next{p.y + ds / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
                      p.z + ds / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
      if (!inside(next)) { line.end = end_reason(next); break; }
      p = next;
      line.points.push_back({p.y, p.z});
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

namespace {

struct Derivatives {
  ComplexVec3 e_y, e_z, h_y, h_z;  // first derivatives of E and eta H
  ComplexVec3 e_yy, e_zz;          // second derivatives of E
  FieldSample centre;
};

Derivatives central_differences(const guide::GuideConfig& cfg, double alpha, Point p, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("finite-difference step must be positive");
  if (p.y - 2.0 * d < 0.0 || p.y + 2.0 * d > cfg.b()) {
    throw DomainError("finite-difference stencil leaves the guide");
  }
  const FieldSample c = guide::db_fractional(cfg, alpha, p);
  const FieldSample yp = guide::db_fractional(cfg, alpha, {p.y + d, p.z});
  const FieldSample ym = guide::db_fractional(cfg, alpha, {p.y - d, p.z});
  const FieldSample zp = guide::db_fractional(cfg, alpha, {p.y, p.z + d});
  const FieldSample zm = guide::db_fractional(cfg, alpha, {p.y, p.z - d});
  Derivatives out;
  out.centre = c;
  out.e_y = (yp.e - ym.e) / (2.0 * d);
  out.e_z = (zp.e - zm.e) / (2.0 * d);
  out.h_y = (yp.eta_h - ym.eta_h) / (2.0 * d);
  out.h_z = (zp.eta_h - zm.eta_h) / (2.0 * d);
  out.e_yy = (yp.e - 2.0 * c.e + ym.e) / (d * d);
  out.e_zz = (zp.e - 2.0 * c.e + zm.e) / (d * d);
  return out;
}

// curl with d/dx = 0.
ComplexVec3 curl_yz(const ComplexVec3& dy, const ComplexVec3& dz) {
  return ComplexVec3(dy(2) - dz(1), dz(0), -dy(0));
}

}  // namespace

MaxwellResidual maxwell_residual(const guide::GuideConfig& cfg, double alpha, Point p,
                                 double fd_step) {
  const Derivatives d = central_differences(cfg, alpha, p, fd_step);
  const double k = cfg.k();
  const double scale = k * max_field(cfg);
  const ComplexVec3 curl_e = curl_yz(d.e_y, d.e_z);
  const ComplexVec3 curl_h = curl_yz(d.h_y, d.h_z);
  return {(curl_e - kI * k * d.centre.eta_h).norm() / scale,
          (curl_h + kI * k * d.centre.e).norm() / scale};
}

double helmholtz_residual(const guide::GuideConfig& cfg, double alpha, Point p, double fd_step) {
  const Derivatives d = central_differences(cfg, alpha, p, fd_step);
  const double k = cfg.k();
  return (d.e_yy + d.e_zz + k * k * d.centre.e).norm() / (k * k * max_field(cfg));
}

WallResidual boundary_residual(const guide::GuideConfig& cfg, double alpha,
                               std::span<const double> z_samples) {
  WallResidual out;
  for (double y : {0.0, cfg.b()}) {
    for (double z : z_samples) {
      const FieldSample s = guide::db_fractional(cfg, alpha, {y, z});
      out.e_normal = std::max(out.e_normal, std::abs(s.e(1)));
      out.h_normal = std::max(out.h_normal, std::abs(s.eta_h(1)));
    }
  }
  const double m = max_field(cfg);
  out.e_normal /= m;
  out.h_normal /= m;
  return out;
}

FieldSample planewave_path(const guide::GuideConfig& cfg, double alpha, Point p) {
  FieldSample total;
  total.point = p;
  for (guide::ModeFamily family : {guide::ModeFamily::TE, guide::ModeFamily::TM}) {
    const auto [w1, w2] = guide::planewave_decomposition(cfg, family);
    total = total + emcore::evaluate(emcore::fractional_curl(w1, alpha, cfg.medium()), p);
    total = total + emcore::evaluate(emcore::fractional_curl(w2, alpha, cfg.medium()), p);
  }
  return total;
}

impedance::ImpedancePair field_ratio_impedance(const guide::GuideConfig& cfg, double alpha,
                                               double y) {
  const FieldSample s = guide::db_fractional(cfg, alpha, {y, 0.0});
  const double reference = max_field(cfg);
  impedance::ImpedancePair out;
  out.xz = impedance::make_ratio(cfg.eta(), -s.e(0), s.eta_h(2), reference);
  out.zx = impedance::make_ratio(cfg.eta(), -s.e(2), s.eta_h(0), reference);
  return out;
}

}  // namespace fracguide::fieldkit
