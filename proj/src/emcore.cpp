#include "fracguide/emcore.hpp"

#include <cmath>

#include "fracguide/angles.hpp"
#include "fracguide/errors.hpp"

namespace fracguide::emcore {

Medium::Medium(double k, double eta) : k_(k), eta_(eta) {
  if (!std::isfinite(k) || k <= 0.0) throw DomainError("Medium: wavenumber k must be positive");
  if (!std::isfinite(eta) || eta <= 0.0) throw DomainError("Medium: impedance eta must be positive");
}

void check_plane_wave(const PlaneWave& pw, const Medium& medium) {
  const double k = medium.k();
  if (!pw.kvec.allFinite() || !pw.e0.allFinite() || !pw.eta_h0.allFinite()) {
    throw DomainError("plane wave has non-finite components");
  }
  if (std::abs(pw.kvec.norm() - k) > kPlaneWaveTolerance * k) {
    throw DomainError("plane wave: |kvec| differs from the medium wavenumber");
  }
  const ComplexVec3 khat = pw.kvec.cast<Complex>() / k;
  const double scale = std::max(pw.e0.norm(), pw.eta_h0.norm());
  if (std::abs(khat.dot(pw.e0)) > kPlaneWaveTolerance * scale ||
      std::abs(khat.dot(pw.eta_h0)) > kPlaneWaveTolerance * scale) {
    throw DomainError("plane wave: amplitudes are not transverse to kvec");
  }
  const ComplexVec3 lhs = Complex(0.0, 1.0) * cross(pw.kvec, pw.e0);
  const ComplexVec3 rhs = Complex(0.0, k) * pw.eta_h0;
  if ((lhs - rhs).norm() > kPlaneWaveTolerance * k * scale) {
    throw DomainError("plane wave: E and eta H do not satisfy the curl equation");
  }
}

ComplexMatrix3 cross_operator_matrix(const RealVec3& kvec) {
  if (!kvec.allFinite()) throw DomainError("cross_operator_matrix: non-finite wavevector");
  if (kvec.norm() == 0.0) throw ZeroWavevector("cross_operator_matrix: wavevector is zero");
  const Complex i(0.0, 1.0);
  ComplexMatrix3 m;
  // clang-format off
  m << 0.0,           -i * kvec.z(),  i * kvec.y(),
       i * kvec.z(),   0.0,          -i * kvec.x(),
      -i * kvec.y(),   i * kvec.x(),  0.0;
  // clang-format on
  return m;
}

PlaneWave fractional_curl(const PlaneWave& pw, double alpha, const Medium& medium) {
  if (!std::isfinite(alpha)) throw DomainError("fractional_curl: alpha must be finite");
  check_plane_wave(pw, medium);
  const linop::EigenSystem sys = linop::eigendecompose(cross_operator_matrix(pw.kvec));
  // (i k)^{-alpha} on the principal branch.
  const Complex norm = std::pow(medium.k(), -alpha) * std::conj(quarter_turn_phase(alpha));
  PlaneWave out;
  out.kvec = pw.kvec;
  out.e0 = norm * linop::apply_fractional(sys, alpha, pw.e0);
  out.eta_h0 = norm * linop::apply_fractional(sys, alpha, pw.eta_h0);
  return out;
}

FieldSample evaluate(const PlaneWave& pw, Point p) {
  const Complex phase = std::polar(1.0, pw.kvec.y() * p.y + pw.kvec.z() * p.z);
  return FieldSample{pw.e0 * phase, pw.eta_h0 * phase, p};
}

}  // namespace fracguide::emcore
