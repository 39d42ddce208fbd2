#include "equimap/fixed_space.hpp"

#include <Eigen/SVD>

namespace equimap {

namespace {

// Columns of V spanning the nullspace of A at relative tolerance tol.
CMatrix svd_nullspace(const CMatrix& a, double tol) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * smax) ++rank;
  Eigen::Index n = a.cols();
  return svd.matrixV().rightCols(n - rank);
}

double stacked_norm(const CMatrix& a) { return a.norm(); }

}  // namespace

CMatrix canonical_rref(const CMatrix& rows, double tol) {
  CMatrix r = rows;
  Eigen::Index nrows = r.rows(), ncols = r.cols();
  double scale = r.size() > 0 ? r.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return CMatrix(0, ncols);
  // Pivot threshold separates genuine entries from SVD noise (~1e-14).
  double thresh = std::max(tol, 1e-9) * scale;
  Eigen::Index lead = 0;
  for (Eigen::Index c = 0; c < ncols && lead < nrows; ++c) {
    Eigen::Index piv = lead;
    double best = std::abs(r(lead, c));
    for (Eigen::Index i = lead + 1; i < nrows; ++i) {
      if (std::abs(r(i, c)) > best) {
        best = std::abs(r(i, c));
        piv = i;
      }
    }
    if (best <= thresh) continue;
    r.row(lead).swap(r.row(piv));
    r.row(lead) /= r(lead, c);
    for (Eigen::Index i = 0; i < nrows; ++i) {
      if (i != lead && r(i, c) != Complex(0.0, 0.0))
        r.row(i) -= r(i, c) * r.row(lead);
    }
    ++lead;
  }
  return r.topRows(lead);
}

CMatrix canonical_orthonormal(const CMatrix& rows, double tol) {
  CMatrix r = canonical_rref(rows, tol);
  // Modified Gram-Schmidt in pivot order, two passes.
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < i; ++j)
        r.row(i) -= (r.row(j).conjugate() * r.row(i).transpose())(0) * r.row(j);
    double n = r.row(i).norm();
    if (n == 0.0) throw NumericalError("canonical_orthonormal: rank collapse");
    r.row(i) /= n;
    // Phase fix: first significant coordinate real-positive.
    for (Eigen::Index c = 0; c < r.cols(); ++c) {
      if (std::abs(r(i, c)) > 1e-9) {
        r.row(i) *= std::conj(r(i, c)) / std::abs(r(i, c));
        break;
      }
    }
  }
  return r;
}

CMatrix leading_one_scaled(const CMatrix& rows) {
  CMatrix r = rows;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    double scale = r.row(i).cwiseAbs().maxCoeff();
    for (Eigen::Index c = 0; c < r.cols(); ++c) {
      if (std::abs(r(i, c)) > 1e-9 * scale) {
        r.row(i) /= r(i, c);
        break;
      }
    }
  }
  return r;
}

FixedSpaceResult algebra_fixed_space(const Representation& rep,
                                     const std::vector<Mat>& gens,
                                     double tol) {
  if (tol <= 0.0) throw SpecError("algebra_fixed_space: tol must be positive");
  FixedSpaceResult out;
  out.rank_tolerance_used = tol;
  if (gens.empty()) {
    out.basis = Mat::identity(rep.dim, rep.field);
    out.full_space_fallback = true;
    return out;
  }
  CMatrix stacked(static_cast<Eigen::Index>(gens.size()) * rep.dim, rep.dim);
  for (size_t j = 0; j < gens.size(); ++j) {
    Mat action = rep.algebra_eval(gens[j]);
    if (action.rows() != rep.dim || action.cols() != rep.dim)
      throw SpecError("algebra_fixed_space: action shape mismatch");
    stacked.middleRows(static_cast<Eigen::Index>(j) * rep.dim, rep.dim) =
        action.values();
  }
  CMatrix null = svd_nullspace(stacked, tol);
  CMatrix basis_rows = canonical_orthonormal(null.transpose(), tol);
  out.basis = Mat(basis_rows.transpose(), rep.field);
  double res = 0.0;
  for (Eigen::Index i = 0; i < out.basis.cols(); ++i)
    res = std::max(res, (stacked * out.basis.values().col(i)).norm());
  out.residual = res;
  if (stacked_norm(stacked) > 0.0 &&
      res > 10.0 * tol * stacked_norm(stacked) && out.basis.cols() > 0) {
    throw NumericalError("algebra_fixed_space: nullspace residual too large");
  }
  return out;
}

FixedSpaceResult discrete_refine(const FixedSpaceResult& result,
                                 const Representation& rep,
                                 const std::vector<Mat>& reps_of_components,
                                 double tol) {
  if (reps_of_components.empty()) return result;
  const CMatrix& n = result.basis.values();
  if (n.cols() == 0) return result;
  CMatrix stacked(static_cast<Eigen::Index>(reps_of_components.size()) *
                      rep.dim,
                  n.cols());
  for (size_t j = 0; j < reps_of_components.size(); ++j) {
    Mat image = rep.group_eval(reps_of_components[j]);
    stacked.middleRows(static_cast<Eigen::Index>(j) * rep.dim, rep.dim) =
        (image.values() - CMatrix::Identity(rep.dim, rep.dim)) * n;
  }
  CMatrix coeff = svd_nullspace(stacked, tol);
  CMatrix refined = n * coeff;  // dim x q
  FixedSpaceResult out;
  out.rank_tolerance_used = tol;
  if (refined.cols() == 0) {
    out.basis = Mat(CMatrix(rep.dim, 0), rep.field);
    out.residual = result.residual;
    return out;
  }
  CMatrix rows = canonical_orthonormal(refined.transpose(), tol);
  out.basis = Mat(rows.transpose(), rep.field);
  double res = result.residual;
  for (const Mat& h : reps_of_components) {
    CMatrix d = rep.group_eval(h).values() - CMatrix::Identity(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < out.basis.cols(); ++i)
      res = std::max(res, (d * out.basis.values().col(i)).norm());
  }
  out.residual = res;
  return out;
}

}  // namespace equimap
