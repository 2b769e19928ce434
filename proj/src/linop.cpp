#include "fracguide/linop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fracguide/errors.hpp"

namespace fracguide::linop {

namespace {

Complex snap(Complex a, double tol) {
  double re = a.real();
  double im = a.imag();
  if (std::abs(im) <= tol) im = 0.0;
  if (std::abs(re) <= tol) re = 0.0;
  if (std::abs(Complex(re, im)) <= tol) return {0.0, 0.0};
  return {re, im};
}

// Rotate the eigenvector so its largest component is real positive. Fixes
// the arbitrary phase returned by the solver.
Eigen::Vector3cd canonical_phase(Eigen::Vector3cd v) {
  v.normalize();
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  const Complex p = v(pivot);
  return v * (std::abs(p) / p);
}

}  // namespace

EigenSystem eigendecompose(const ComplexMatrix3& m) {
  if (!m.allFinite()) throw DomainError("eigendecompose: matrix has non-finite entries");

  Eigen::ComplexEigenSolver<ComplexMatrix3> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw DefectiveOperator("eigendecompose: eigen solver did not converge");
  }

  const double scale = m.norm();
  const double tol = kEigenvalueSnap * scale;
  std::array<Complex, 3> values{};
  for (int i = 0; i < 3; ++i) values[i] = snap(solver.eigenvalues()(i), tol);

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Complex va = values[a];
    const Complex vb = values[b];
    if (std::abs(va.real() - vb.real()) > tol) return va.real() > vb.real();
    if (std::abs(va.imag() - vb.imag()) > tol) return va.imag() > vb.imag();
    return false;
  });

  EigenSystem sys;
  for (int col = 0; col < 3; ++col) {
    sys.eigenvalues[col] = values[order[col]];
    sys.eigenvectors.col(col) = canonical_phase(solver.eigenvectors().col(order[col]));
  }

  const auto sv = Eigen::JacobiSVD<ComplexMatrix3>(sys.eigenvectors).singularValues();
  sys.basis_condition = sv(2) > 0.0 ? sv(0) / sv(2) : std::numeric_limits<double>::infinity();
  if (!(sys.basis_condition < kMaxBasisCondition)) {
    std::ostringstream msg;
    msg << "eigendecompose: eigenbasis is incomplete (condition " << sys.basis_condition << ")";
    throw DefectiveOperator(msg.str());
  }
  sys.inverse_basis = sys.eigenvectors.fullPivLu().inverse();
  return sys;
}

Complex principal_power(Complex a, double alpha) {
  if (alpha == 0.0) return {1.0, 0.0};
  if (a == Complex(0.0, 0.0)) return {0.0, 0.0};
  // std::arg(-x - 0i) is -pi; the principal branch wants +pi on the cut.
  const double arg = (a.imag() == 0.0 && a.real() < 0.0) ? kPi : std::arg(a);
  return std::exp(alpha * Complex(std::log(std::abs(a)), arg));
}

ComplexVec3 expansion_coefficients(const EigenSystem& sys, const ComplexVec3& v) {
  return sys.inverse_basis * v;
}

ComplexMatrix3 fractional_power(const EigenSystem& sys, double alpha) {
  ComplexVec3 powers;
  for (int m = 0; m < 3; ++m) powers(m) = principal_power(sys.eigenvalues[m], alpha);
  return sys.eigenvectors * powers.asDiagonal() * sys.inverse_basis;
}

ComplexVec3 apply_fractional(const EigenSystem& sys, double alpha, const ComplexVec3& v) {
  const ComplexVec3 g = expansion_coefficients(sys, v);
  ComplexVec3 out = ComplexVec3::Zero();
  for (int m = 0; m < 3; ++m) {
    out += g(m) * principal_power(sys.eigenvalues[m], alpha) * sys.eigenvectors.col(m);
  }
  return out;
}

}  // namespace fracguide::linop
