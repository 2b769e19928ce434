#include "fracguide/guide.hpp"

#include <cmath>
#include <sstream>

#include "fracguide/angles.hpp"
#include "fracguide/errors.hpp"

namespace fracguide::guide {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_inside(const GuideConfig& cfg, Point p) {
  if (!std::isfinite(p.y) || !std::isfinite(p.z) || p.y < 0.0 || p.y > cfg.b()) {
    std::ostringstream msg;
    msg << "point (y=" << p.y << ", z=" << p.z << ") is outside the guide [0, " << cfg.b() << "]";
    throw DomainError(msg.str());
  }
}

void require_finite(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
}

// Quantities shared by the fractional closed forms at (alpha, p).
struct FractionalTerms {
  double ca, sa;    // cos, sin of alpha pi/2
  double cya, sya;  // cos, sin of h y + alpha pi/2
  double beta_k, h_k;
  Complex prefactor;  // (k/h) exp(i (beta z + alpha pi/2))
};

FractionalTerms fractional_terms(const GuideConfig& cfg, double alpha, Point p) {
  require_finite(alpha);
  require_inside(cfg, p);
  const SinCos a = quarter_turn_sincos(alpha);
  const SinCos ya = shifted_sincos(cfg.h() * p.y, alpha);
  const Complex phase = std::polar(1.0, cfg.beta() * p.z) * quarter_turn_phase(alpha);
  return {a.cos, a.sin, ya.cos, ya.sin, cfg.beta() / cfg.k(), cfg.h() / cfg.k(),
          (cfg.k() / cfg.h()) * phase};
}

}  // namespace

ModeParams mode_params(double b, int n, double k) {
  if (!std::isfinite(b) || b <= 0.0) throw DomainError("plate separation b must be positive");
  if (n < 1) throw DomainError("mode index n must be a positive integer");
  if (!std::isfinite(k) || k <= 0.0) throw DomainError("wavenumber k must be positive");
  const double h = n * kPi / b;
  if (h >= k) {
    std::ostringstream msg;
    msg << "mode n=" << n << " is not propagating: h=" << h << " >= k=" << k;
    throw EvanescentMode(msg.str());
  }
  return {h, std::sqrt((k - h) * (k + h))};
}

GuideConfig::GuideConfig(double b, int n, emcore::Medium medium, Complex amp_te, Complex amp_tm)
    : b_(b),
      n_(n),
      medium_(medium),
      amp_te_(amp_te),
      amp_tm_(amp_tm),
      params_(mode_params(b, n, medium.k())) {
  if (!std::isfinite(amp_te.real()) || !std::isfinite(amp_te.imag()) ||
      !std::isfinite(amp_tm.real()) || !std::isfinite(amp_tm.imag())) {
    throw DomainError("modal amplitudes must be finite");
  }
}

GuideConfig GuideConfig::create(double b, int n, emcore::Medium medium, Complex amp_te,
                                Complex amp_tm) {
  return GuideConfig(b, n, medium, amp_te, amp_tm);
}

GuideConfig GuideConfig::from_angle(double angle, int n, emcore::Medium medium, Complex amp_te,
                                    Complex amp_tm) {
  if (!std::isfinite(angle) || angle <= 0.0 || angle >= kPi / 2.0) {
    throw DomainError("propagation angle must lie strictly between 0 and pi/2");
  }
  if (n < 1) throw DomainError("mode index n must be a positive integer");
  const double h = medium.k() * std::sin(angle);
  return GuideConfig(n * kPi / h, n, medium, amp_te, amp_tm);
}

GuideConfig GuideConfig::with_amplitudes(Complex amp_te, Complex amp_tm) const {
  return GuideConfig(b_, n_, medium_, amp_te, amp_tm);
}

ModeParams mode_params(const GuideConfig& cfg) { return {cfg.h(), cfg.beta()}; }

FieldSample te_pec_canonical(const GuideConfig& cfg, Point p) {
  require_inside(cfg, p);
  const double h = cfg.h();
  const Complex c = cfg.amp_te();
  const Complex z = std::polar(1.0, cfg.beta() * p.z);
  const double s = std::sin(h * p.y);
  const double co = std::cos(h * p.y);
  FieldSample out;
  out.point = p;
  out.e << (kI * cfg.k() / h) * (-c * s) * z, 0.0, 0.0;
  out.eta_h << 0.0, (kI * cfg.beta() / h) * (-c * s) * z, c * co * z;
  return out;
}

FieldSample tm_pmc_canonical(const GuideConfig& cfg, Point p) {
  require_inside(cfg, p);
  const double h = cfg.h();
  const double k = cfg.k();
  const Complex a = cfg.amp_tm();
  const Complex pre = a * (k / h) * std::polar(1.0, cfg.beta() * p.z);
  const double s = std::sin(h * p.y);
  const double co = std::cos(h * p.y);
  FieldSample out;
  out.point = p;
  out.e << 0.0, pre * (-kI * (cfg.beta() / k) * s), pre * ((h / k) * co);
  out.eta_h << pre * (kI * s), 0.0, 0.0;
  return out;
}

std::pair<emcore::PlaneWave, emcore::PlaneWave> planewave_decomposition(const GuideConfig& cfg,
                                                                         ModeFamily family) {
  const double h = cfg.h();
  const double k = cfg.k();
  const double beta = cfg.beta();

  // TE-PEC waves with amplitude C; the TM-PMC waves are their duals with A.
  const Complex amp = family == ModeFamily::TE ? cfg.amp_te() : cfg.amp_tm();
  emcore::PlaneWave w1, w2;
  w1.kvec = RealVec3(0.0, -h, beta);
  w1.e0 = ComplexVec3(amp / 2.0 * (k / h), 0.0, 0.0);
  w1.eta_h0 = ComplexVec3(0.0, amp / 2.0 * (beta / h), amp / 2.0);
  w2.kvec = RealVec3(0.0, h, beta);
  w2.e0 = ComplexVec3(-amp / 2.0 * (k / h), 0.0, 0.0);
  w2.eta_h0 = ComplexVec3(0.0, -amp / 2.0 * (beta / h), amp / 2.0);

  if (family == ModeFamily::TM) {
    for (emcore::PlaneWave* w : {&w1, &w2}) {
      const ComplexVec3 e = w->e0;
      w->e0 = w->eta_h0;
      w->eta_h0 = -e;
    }
  }
  return {w1, w2};
}

FieldSample te_pec_fractional(const GuideConfig& cfg, double alpha, Point p) {
  const FractionalTerms t = fractional_terms(cfg, alpha, p);
  const Complex pre = cfg.amp_te() * t.prefactor;
  FieldSample out;
  out.point = p;
  out.e << pre * (-kI * t.ca * t.sya),
           pre * (t.beta_k * t.sa * t.cya),
           pre * (-kI * t.h_k * t.sa * t.sya);
  out.eta_h << pre * (-t.sa * t.cya),
               pre * (-kI * t.beta_k * t.ca * t.sya),
               pre * (t.h_k * t.ca * t.cya);
  return out;
}

FieldSample tm_pmc_fractional(const GuideConfig& cfg, double alpha, Point p) {
  const FractionalTerms t = fractional_terms(cfg, alpha, p);
  const Complex pre = cfg.amp_tm() * t.prefactor;
  FieldSample out;
  out.point = p;
  out.e << pre * (-t.sa * t.cya),
           pre * (-kI * t.beta_k * t.ca * t.sya),
           pre * (t.h_k * t.ca * t.cya);
  out.eta_h << pre * (kI * t.ca * t.sya),
               pre * (-t.beta_k * t.sa * t.cya),
               pre * (kI * t.h_k * t.sa * t.sya);
  return out;
}

FieldSample db_fractional(const GuideConfig& cfg, double alpha, Point p) {
  return te_pec_fractional(cfg, alpha, p) + tm_pmc_fractional(cfg, alpha, p);
}

FieldSample db_fractional_closed_form(const GuideConfig& cfg, double alpha, Point p) {
  const FractionalTerms t = fractional_terms(cfg, alpha, p);
  const Complex a = cfg.amp_tm();
  const Complex c = cfg.amp_te();
  FieldSample out;
  out.point = p;
  out.e << t.prefactor * -(a * t.sa * t.cya + kI * c * t.ca * t.sya),
           t.prefactor * t.beta_k * (c * t.sa * t.cya - kI * a * t.ca * t.sya),
           t.prefactor * t.h_k * (a * t.ca * t.cya - kI * c * t.sa * t.sya);
  out.eta_h << t.prefactor * -(c * t.sa * t.cya - kI * a * t.ca * t.sya),
               t.prefactor * -t.beta_k * (a * t.sa * t.cya + kI * c * t.ca * t.sya),
               t.prefactor * t.h_k * (c * t.ca * t.cya + kI * a * t.sa * t.sya);
  return out;
}

}  // namespace fracguide::guide
