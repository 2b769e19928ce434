#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "fracguide/emcore.hpp"
#include "fracguide/errors.hpp"
#include "fracguide/linop.hpp"
#include "oracles.hpp"

using namespace fracguide;
using linop::apply_fractional;
using linop::eigendecompose;
using linop::fractional_power;

namespace {

void check_invariants(const ComplexMatrix3& m, const linop::EigenSystem& sys) {
  CHECK(sys.basis_condition < linop::kMaxBasisCondition);
  for (int j = 0; j < 3; ++j) {
    const ComplexVec3 v = sys.eigenvectors.col(j);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    const ComplexVec3 lhs = m * v;
    const ComplexVec3 rhs = sys.eigenvalues[j] * v;
    CHECK((lhs - rhs).norm() <= 1e-10 * std::max(m.norm(), 1.0));
  }
}

}  // namespace

TEST_CASE("identity has eigenvalue 1 three times") {
  const ComplexMatrix3 id = ComplexMatrix3::Identity();
  const auto sys = eigendecompose(id);
  for (Complex a : sys.eigenvalues) CHECK(std::abs(a - 1.0) < 1e-15);
  check_invariants(id, sys);
}

TEST_CASE("diagonal operator keeps the standard basis and sorts eigenvalues") {
  ComplexMatrix3 m = ComplexMatrix3::Zero();
  m(0, 0) = 2.0;
  m(1, 1) = Complex(0.0, 3.0);
  m(2, 2) = -1.0;
  const auto sys = eigendecompose(m);
  CHECK(sys.eigenvalues[0] == Complex(2.0, 0.0));
  CHECK(sys.eigenvalues[1] == Complex(0.0, 3.0));
  CHECK(sys.eigenvalues[2] == Complex(-1.0, 0.0));
  CHECK((sys.eigenvectors - ComplexMatrix3::Identity()).norm() < 1e-15);
  check_invariants(m, sys);
}

TEST_CASE("cross operator about z has eigenvalues +k, 0, -k on the circular basis") {
  const double k = 2.5;
  const ComplexMatrix3 m = emcore::cross_operator_matrix(RealVec3(0.0, 0.0, k));
  const auto sys = eigendecompose(m);
  CHECK(std::abs(sys.eigenvalues[0] - k) < 1e-14);
  CHECK(sys.eigenvalues[1] == Complex(0.0, 0.0));
  CHECK(std::abs(sys.eigenvalues[2] + k) < 1e-14);
  CHECK(sys.eigenvalues[2].imag() == 0.0);
  CHECK(oracle::alignment(sys.eigenvectors.col(0), oracle::circular(+1)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(oracle::alignment(sys.eigenvectors.col(1), ComplexVec3(0, 0, 1)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(oracle::alignment(sys.eigenvectors.col(2), oracle::circular(-1)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  check_invariants(m, sys);
}

TEST_CASE("eigenvector phase is canonical") {
  std::mt19937_64 rng(7);
  const ComplexMatrix3 m = oracle::random_diagonalizable(rng);
  const auto sys = eigendecompose(m);
  for (int j = 0; j < 3; ++j) {
    Eigen::Index pivot = 0;
    sys.eigenvectors.col(j).cwiseAbs().maxCoeff(&pivot);
    CHECK(sys.eigenvectors(pivot, j).imag() == doctest::Approx(0.0));
    CHECK(sys.eigenvectors(pivot, j).real() > 0.0);
  }
}

TEST_CASE("defective operator is rejected") {
  ComplexMatrix3 jordan = ComplexMatrix3::Zero();
  jordan(0, 0) = 1.0;
  jordan(0, 1) = 1.0;
  jordan(1, 1) = 1.0;
  jordan(2, 2) = 2.0;
  CHECK_THROWS_AS(eigendecompose(jordan), DefectiveOperator);

  ComplexMatrix3 nilpotent = ComplexMatrix3::Zero();
  nilpotent(0, 1) = 1.0;
  CHECK_THROWS_AS(eigendecompose(nilpotent), DefectiveOperator);
}

TEST_CASE("non-finite matrix is rejected") {
  ComplexMatrix3 m = ComplexMatrix3::Identity();
  m(1, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eigendecompose(m), DomainError);
}

TEST_CASE("principal power branch") {
  using linop::principal_power;
  CHECK(std::abs(principal_power(-1.0, 0.5) - Complex(0.0, 1.0)) < 1e-15);
  // -1 with a negative-zero imaginary part still sits at Arg = +pi.
  CHECK(std::abs(principal_power(Complex(-1.0, -0.0), 0.5) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(principal_power(0.0, 0.0) == Complex(1.0, 0.0));
  CHECK(principal_power(0.0, 0.5) == Complex(0.0, 0.0));
  CHECK(principal_power(Complex(3.0, 4.0), 0.0) == Complex(1.0, 0.0));
  for (double alpha : {0.1, 0.5, 0.9, 1.7}) {
    CHECK(std::abs(principal_power(Complex(0.0, 1.0), alpha) -
                   std::polar(1.0, alpha * oracle::kPi / 2.0)) < 1e-15);
  }
  CHECK(std::abs(principal_power(4.0, 0.5) - 2.0) < 1e-15);
}

TEST_CASE("fractional power of diag(4,1,1) at 1/2 is diag(2,1,1)") {
  ComplexMatrix3 m = ComplexMatrix3::Identity();
  m(0, 0) = 4.0;
  const auto sys = eigendecompose(m);
  ComplexMatrix3 want = ComplexMatrix3::Identity();
  want(0, 0) = 2.0;
  CHECK((fractional_power(sys, 0.5) - want).norm() < 1e-14);
}

TEST_CASE("alpha = 0 gives the identity, alpha = 1 the operator") {
  std::mt19937_64 rng(11);
  // Normal operator: unitary similarity keeps the basis perfectly conditioned.
  const Eigen::HouseholderQR<ComplexMatrix3> qr(oracle::random_matrix(rng));
  const ComplexMatrix3 q = qr.householderQ();
  const ComplexVec3 d(Complex(1.5, 0.2), Complex(-0.7, 1.1), Complex(0.3, -2.0));
  const ComplexMatrix3 normal_op = q * d.asDiagonal() * q.adjoint();
  const auto sys = eigendecompose(normal_op);
  CHECK(oracle::relative(fractional_power(sys, 0.0), ComplexMatrix3::Identity()) < 1e-12);
  CHECK(oracle::relative(fractional_power(sys, 1.0), normal_op) < 1e-12);

  const ComplexMatrix3 cross = emcore::cross_operator_matrix(RealVec3(0.3, -1.2, 0.8));
  const auto cross_sys = eigendecompose(cross);
  CHECK((fractional_power(cross_sys, 0.0) - ComplexMatrix3::Identity()).norm() < 1e-12);
  CHECK((fractional_power(cross_sys, 1.0) - cross).norm() < 1e-12 * cross.norm());
}

TEST_CASE("square root of the z cross operator rotates x by 45 degrees") {
  // x = (e+ + e-)/sqrt2; e+ gets k^a, e- gets (-k)^a = k^a e^{i a pi}.
  // Dividing by (ik)^a leaves e^{-i pi/4} e+ + e^{i pi/4} e-, i.e. (x + y)/sqrt2.
  const double k = 3.0;
  const auto sys = eigendecompose(emcore::cross_operator_matrix(RealVec3(0.0, 0.0, k)));
  const ComplexVec3 x(1.0, 0.0, 0.0);
  const ComplexVec3 got = fractional_power(sys, 0.5) * x / std::sqrt(Complex(0.0, k));
  const ComplexVec3 want = ComplexVec3(1.0, 1.0, 0.0) / std::sqrt(2.0);
  CHECK((got - want).norm() < 1e-14);
}

TEST_CASE("apply_fractional matches the matrix power and is additive in alpha") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix3 m = oracle::random_diagonalizable(rng);
    const auto sys = eigendecompose(m);
    const ComplexVec3 v = oracle::random_vector(rng);
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 1.3}) {
      const ComplexVec3 direct = apply_fractional(sys, alpha, v);
      CHECK(oracle::relative(direct, fractional_power(sys, alpha) * v) < 1e-12);
    }
    CHECK(oracle::relative(apply_fractional(sys, 0.0, v), v) < 1e-12);
    const ComplexVec3 twice = apply_fractional(sys, 0.45, apply_fractional(sys, 0.3, v));
    CHECK(oracle::relative(twice, apply_fractional(sys, 0.75, v)) < 1e-12);
  }
}

TEST_CASE("property: fractional operator axioms on random diagonalizable matrices") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix3 m = oracle::random_diagonalizable(rng);
    const auto sys = eigendecompose(m);
    check_invariants(m, sys);
    const ComplexVec3 v = oracle::random_vector(rng);
    CHECK(oracle::relative(apply_fractional(sys, 1.0, v), m * v) < 1e-10);
    CHECK(oracle::relative(apply_fractional(sys, 0.0, v), v) < 1e-10);
    const double a1 = unit(rng);
    const double a2 = unit(rng);
    const ComplexMatrix3 product = fractional_power(sys, a1) * fractional_power(sys, a2);
    CHECK(oracle::relative(product, fractional_power(sys, a1 + a2)) < 1e-10);
    CHECK(oracle::relative(fractional_power(sys, a2) * fractional_power(sys, a1), product) < 1e-10);
    CHECK(oracle::relative(fractional_power(sys, 1.0), m) < 1e-10);
  }
}

TEST_CASE("zero eigenvalue: 0^alpha is 0 for alpha > 0") {
  ComplexMatrix3 m = ComplexMatrix3::Zero();
  m(0, 0) = 2.0;
  m(1, 1) = -3.0;
  const auto sys = eigendecompose(m);
  CHECK(sys.eigenvalues[1] == Complex(0.0, 0.0));
  const ComplexMatrix3 half = fractional_power(sys, 0.5);
  CHECK(half(2, 2) == Complex(0.0, 0.0));
  CHECK(fractional_power(sys, 0.0)(2, 2) == Complex(1.0, 0.0));
}
