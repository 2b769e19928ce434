#pragma once

#include <algorithm>
#include <complex>

#include <Eigen/Dense>

namespace fracguide {

using Complex = std::complex<double>;
using ComplexVec3 = Eigen::Vector3cd;
using ComplexMatrix3 = Eigen::Matrix3cd;
using RealVec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// A point in the yz cross-section of the guide, in meters.
struct Point {
  double y = 0.0;
  double z = 0.0;
};

/// E and eta*H phasors at a point. x-dependence is absent, so `point` is (y, z).
struct FieldSample {
  ComplexVec3 e = ComplexVec3::Zero();
  ComplexVec3 eta_h = ComplexVec3::Zero();
  Point point;
};

/// Bilinear cross product of a real and a complex vector. Eigen's
/// vectorized complex cross conjugates an operand on some builds.
inline ComplexVec3 cross(const RealVec3& a, const ComplexVec3& b) {
  return ComplexVec3(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
                     a.x() * b.y() - a.y() * b.x());
}

/// Electromagnetic duality: (E, eta H) -> (eta H, -E).
inline FieldSample duality_map(const FieldSample& s) {
  return FieldSample{s.eta_h, -s.e, s.point};
}

inline FieldSample operator+(const FieldSample& a, const FieldSample& b) {
  return FieldSample{a.e + b.e, a.eta_h + b.eta_h, a.point};
}

/// Largest |component| over E and eta*H.
inline double max_component(const FieldSample& s) {
  return std::max(s.e.cwiseAbs().maxCoeff(), s.eta_h.cwiseAbs().maxCoeff());
}

}  // namespace fracguide
