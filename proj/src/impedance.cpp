#include "fracguide/impedance.hpp"

#include <algorithm>
#include <cmath>

#include "fracguide/angles.hpp"
#include "fracguide/errors.hpp"

namespace fracguide::impedance {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ImpedanceValue make_ratio(Complex scale, Complex numerator, Complex denominator, double reference) {
  ImpedanceValue out;
  if (std::abs(denominator) / reference > kInfiniteThreshold) {
    out.impedance = scale * numerator / denominator;
  }
  if (std::abs(numerator) / reference > kInfiniteThreshold) {
    out.admittance = denominator / (scale * numerator);
  }
  return out;
}

ImpedancePair wave_impedance(const guide::GuideConfig& cfg, double alpha, double y) {
  if (!std::isfinite(alpha)) throw DomainError("wave_impedance: alpha must be finite");
  if (!std::isfinite(y) || y < 0.0 || y > cfg.b()) {
    throw DomainError("wave_impedance: y is outside the guide");
  }
  const SinCos a = quarter_turn_sincos(alpha);
  const SinCos ya = shifted_sincos(cfg.h() * y, alpha);
  const Complex an = cfg.amp_tm();
  const Complex cn = cfg.amp_te();
  const double reference = std::max({std::abs(an), std::abs(cn), 1e-300});
  const double k_h = cfg.k() / cfg.h();

  ImpedancePair out;
  out.xz = make_ratio(cfg.eta() * k_h,
                      an * a.sin * ya.cos + kI * cn * a.cos * ya.sin,
                      cn * a.cos * ya.cos + kI * an * a.sin * ya.sin, reference);
  out.zx = make_ratio(cfg.eta() / k_h,
                      an * a.cos * ya.cos - kI * cn * a.sin * ya.sin,
                      cn * a.sin * ya.cos - kI * an * a.cos * ya.sin, reference);
  return out;
}

ImpedancePair wall_impedance_matrix(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("wall_impedance_matrix: alpha must be finite");
  const SinCos a = quarter_turn_sincos(alpha);
  const double s = a.sin;
  const double c = a.cos;
  ImpedancePair out;
  out.xz = make_ratio(1.0, s * c + kI * c * s, c * c + kI * s * s);
  out.zx = make_ratio(1.0, c * c - kI * s * s, s * c - kI * c * s);
  return out;
}

}  // namespace fracguide::impedance
