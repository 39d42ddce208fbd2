#pragma once

#include <Eigen/Dense>

#include "equimap/common.hpp"

namespace equimap {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Dense matrix over R or C. Storage is always complex; the field tag records
/// which scalars are admissible. Invariants: all entries finite, and for
/// Field::Real every imaginary part is exactly zero.
class Mat {
 public:
  Mat() : field_(Field::Real) {}
  Mat(CMatrix values, Field field);

  static Mat real(const RMatrix& v) { return Mat(v.cast<Complex>(), Field::Real); }
  static Mat complex(CMatrix v) { return Mat(std::move(v), Field::Complex); }
  static Mat identity(Eigen::Index n, Field f = Field::Real);
  static Mat zero(Eigen::Index r, Eigen::Index c, Field f = Field::Real);

  const CMatrix& values() const { return m_; }
  RMatrix real_values() const;  // throws SpecError unless field is Real
  Field field() const { return field_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  bool is_square() const { return m_.rows() == m_.cols(); }

  Mat transpose() const { return Mat(m_.transpose(), field_); }
  Mat adjoint() const { return Mat(m_.adjoint(), field_); }
  Mat conjugate() const { return Mat(m_.conjugate(), field_); }
  Mat inverse() const;
  Complex det() const;
  Complex trace() const { return m_.trace(); }
  double norm() const { return m_.norm(); }

  Mat operator+(const Mat& o) const { return Mat(m_ + o.m_, join(field_, o.field_)); }
  Mat operator-(const Mat& o) const { return Mat(m_ - o.m_, join(field_, o.field_)); }
  Mat operator*(const Mat& o) const { return Mat(m_ * o.m_, join(field_, o.field_)); }
  Mat operator*(double s) const { return Mat(m_ * s, field_); }
  Mat operator*(Complex s) const {
    return Mat(m_ * s, s.imag() == 0.0 ? field_ : Field::Complex);
  }
  Mat operator-() const { return Mat(-m_, field_); }

 private:
  CMatrix m_;
  Field field_;
};

inline Mat operator*(double s, const Mat& m) { return m * s; }

/// Kronecker product with the convention (A otimes B)[(i*rB+p),(j*cB+q)] =
/// A(i,j) B(p,q), so that vec(A X B) = (B^T otimes A) vec(X) for column-major
/// vec.
Mat kron(const Mat& a, const Mat& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Matrix exponential, scaling-and-squaring with Pade approximant.
/// Accuracy better than 1e-12 in Frobenius norm for ||A|| <= 10.
Mat expm(const Mat& a);
CMatrix expm(const CMatrix& a);

/// Integer power of a complex scalar (exact repeated multiplication,
/// negative exponents via 1/z).
Complex int_pow(Complex z, int p);

/// vec/unvec, column-major.
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace equimap
