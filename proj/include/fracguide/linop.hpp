#pragma once

// Fractional powers of diagonalizable operators on C^3.
//
// An operator L with eigenpairs (a_m, A_m) is raised to a real power alpha by
// keeping the eigenvectors and replacing each eigenvalue with (a_m)^alpha.
// A vector v is expanded as v = sum g_m A_m, so
//
//   L^alpha v = sum_m g_m (a_m)^alpha A_m.
//
// Powers use the principal branch, a^alpha = exp(alpha (ln|a| + i Arg a)),
// Arg in (-pi, pi]. 0^0 = 1 and 0^alpha = 0 for alpha != 0.

#include <array>

#include "fracguide/types.hpp"

namespace fracguide::linop {

/// Eigenbasis condition numbers at or above this are treated as defective.
inline constexpr double kMaxBasisCondition = 1e8;

/// Relative size (against ||L||_F) below which a computed eigenvalue, or its
/// imaginary part, is rounded to exactly zero.
inline constexpr double kEigenvalueSnap = 1e-13;

struct EigenSystem {
  /// Ordered by descending real part, then descending imaginary part.
  std::array<Complex, 3> eigenvalues{};
  /// Column m is the unit eigenvector for eigenvalues[m]. Its largest
  /// component is made real and positive.
  ComplexMatrix3 eigenvectors = ComplexMatrix3::Identity();
  /// Maps a vector to its expansion coefficients g_m.
  ComplexMatrix3 inverse_basis = ComplexMatrix3::Identity();
  /// 2-norm condition number of `eigenvectors`.
  double basis_condition = 1.0;
};

/// Throws DefectiveOperator when no well-conditioned eigenbasis exists and
/// DomainError on non-finite input.
EigenSystem eigendecompose(const ComplexMatrix3& m);

Complex principal_power(Complex a, double alpha);

ComplexVec3 expansion_coefficients(const EigenSystem& sys, const ComplexVec3& v);

ComplexMatrix3 fractional_power(const EigenSystem& sys, double alpha);

ComplexVec3 apply_fractional(const EigenSystem& sys, double alpha, const ComplexVec3& v);

}  // namespace fracguide::linop
