#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "equimap/matrix.hpp"

using namespace equimap;

TEST_CASE("construction validates finiteness and field tags") {
  RMatrix a(2, 2);
  a << 1, 2, 3, 4;
  Mat m = Mat::real(a);
  CHECK(m.field() == Field::Real);
  CHECK(m.values()(1, 0) == Complex(3.0, 0.0));

  a(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Mat::real(a), SpecError);

  CMatrix c(1, 1);
  c << Complex(0.0, 1.0);
  CHECK_THROWS_AS(Mat(c, Field::Real), SpecError);
  CHECK(Mat::complex(c).field() == Field::Complex);
}

TEST_CASE("field join on arithmetic") {
  Mat r = Mat::identity(2, Field::Real);
  Mat c = Mat::identity(2, Field::Complex);
  CHECK((r * r).field() == Field::Real);
  CHECK((r * c).field() == Field::Complex);
  CHECK((r + r).field() == Field::Real);
}

TEST_CASE("inverse and determinant") {
  RMatrix a(2, 2);
  a << 2, 1, 1, 1;
  Mat m = Mat::real(a);
  CHECK(std::abs(m.det() - 1.0) < 1e-14);
  CHECK(((m * m.inverse()).values() - CMatrix::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("kron follows the vec identity") {
  Rng rng(7);
  std::normal_distribution<double> g;
  RMatrix a(3, 3), b(3, 3), x(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = g(rng);
      b(i, j) = g(rng);
      x(i, j) = g(rng);
    }
  // vec(A X B) = (B^T kron A) vec(X)
  CMatrix lhs = vec(CMatrix((a * x * b).cast<Complex>()));
  CMatrix rhs = kron(CMatrix(b.transpose().cast<Complex>()),
                     CMatrix(a.cast<Complex>())) *
                vec(CMatrix(x.cast<Complex>()));
  CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("expm reaches 1e-12 against an eigendecomposition oracle") {
  Rng rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    a *= 10.0 / a.norm();
    Eigen::ComplexEigenSolver<CMatrix> es(a);
    CMatrix oracle = es.eigenvectors() *
                     es.eigenvalues().array().exp().matrix().asDiagonal() *
                     es.eigenvectors().inverse();
    CHECK((expm(a) - oracle).norm() < 1e-12 * oracle.norm() + 1e-12);
  }
}

TEST_CASE("expm of a rotation generator is the rotation") {
  RMatrix j(2, 2);
  j << 0, -1, 1, 0;
  Mat r = expm(Mat::real(j) * 0.5);
  CHECK(std::abs(r.values()(0, 0).real() - std::cos(0.5)) < 1e-15);
  CHECK(std::abs(r.values()(1, 0).real() - std::sin(0.5)) < 1e-15);
  CHECK(r.field() == Field::Real);
}

TEST_CASE("int_pow handles negative exponents") {
  CHECK(std::abs(int_pow(Complex(2.0, 0.0), -2) - Complex(0.25, 0.0)) <
        1e-15);
  CHECK(std::abs(int_pow(Complex(0.0, 1.0), 3) - Complex(0.0, -1.0)) < 1e-15);
}
