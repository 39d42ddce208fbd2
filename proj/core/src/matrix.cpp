#include "equimap/matrix.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace equimap {

Mat::Mat(CMatrix values, Field field) : m_(std::move(values)), field_(field) {
  if (!m_.allFinite()) throw SpecError("matrix has non-finite entries");
  if (field_ == Field::Real && m_.size() > 0 &&
      m_.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw SpecError("real-tagged matrix has nonzero imaginary part");
  }
}

Mat Mat::identity(Eigen::Index n, Field f) {
  return Mat(CMatrix::Identity(n, n), f);
}

Mat Mat::zero(Eigen::Index r, Eigen::Index c, Field f) {
  return Mat(CMatrix::Zero(r, c), f);
}

RMatrix Mat::real_values() const {
  if (field_ != Field::Real) throw SpecError("matrix is not real-valued");
  return m_.real();
}

Mat Mat::inverse() const {
  if (!is_square()) throw SpecError("inverse of non-square matrix");
  Eigen::PartialPivLU<CMatrix> lu(m_);
  return Mat(lu.inverse(), field_);
}

Complex Mat::det() const {
  if (!is_square()) throw SpecError("determinant of non-square matrix");
  return m_.determinant();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  return Mat(kron(a.values(), b.values()), join(a.field(), b.field()));
}

CMatrix expm(const CMatrix& a) { return a.exp(); }

Mat expm(const Mat& a) {
  if (!a.is_square()) throw SpecError("expm of non-square matrix");
  return Mat(a.values().exp(), a.field());
}

Complex int_pow(Complex z, int p) {
  if (p < 0) return int_pow(1.0 / z, -p);
  Complex out(1.0, 0.0);
  for (int i = 0; i < p; ++i) out *= z;
  return out;
}

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw SpecError("unvec: size mismatch");
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

}  // namespace equimap
