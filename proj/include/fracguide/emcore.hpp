#pragma once

// Plane waves in a lossless homogeneous medium and the fractional curl acting
// on them. Time dependence is exp(-i omega t), so for a plane wave
// exp(i k.r):  curl E = i k eta H,  curl (eta H) = -i k E.

#include "fracguide/linop.hpp"
#include "fracguide/types.hpp"

namespace fracguide::emcore {

/// Dielectric fill: wavenumber k (rad/m) and wave impedance eta (ohm).
class Medium {
 public:
  Medium(double k, double eta);

  double k() const noexcept { return k_; }
  double eta() const noexcept { return eta_; }

 private:
  double k_;
  double eta_;
};

/// Amplitudes of E and eta*H for a field proportional to exp(i kvec.r).
struct PlaneWave {
  ComplexVec3 e0 = ComplexVec3::Zero();
  ComplexVec3 eta_h0 = ComplexVec3::Zero();
  RealVec3 kvec = RealVec3::Zero();
};

inline constexpr double kPlaneWaveTolerance = 1e-12;

/// Throws DomainError unless |kvec| = k, both amplitudes are transverse to
/// kvec, and i kvec x e0 = i k eta_h0 (all relative to 1e-12).
void check_plane_wave(const PlaneWave& pw, const Medium& medium);

/// The matrix of v -> i kvec x v. Throws ZeroWavevector for kvec = 0.
ComplexMatrix3 cross_operator_matrix(const RealVec3& kvec);

/// (i k)^{-alpha} (i kvec x)^alpha applied to both amplitudes through the
/// eigendecomposition of the cross operator. kvec is unchanged.
PlaneWave fractional_curl(const PlaneWave& pw, double alpha, const Medium& medium);

/// E and eta*H of the plane wave at r = (0, y, z).
FieldSample evaluate(const PlaneWave& pw, Point p);

}  // namespace fracguide::emcore
