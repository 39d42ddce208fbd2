#include "equimap/kernels.hpp"

#include <cmath>

namespace equimap {

namespace {

long long binomial(int n, int k) {
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

EquivariantBasis build_basis(const HomogeneousSpace& space,
                             const Representation& rep, double tol) {
  if (!same_group(rep.group, space.group))
    throw SpecError("build_basis: representation is not over '" +
                    space.group.name + "'");
  if (space.projective) {
    Mat minus_id = Mat(-CMatrix::Identity(space.group.ambient_size,
                                          space.group.ambient_size),
                       space.group.field);
    Mat image = rep.group_eval(minus_id);
    if ((image.values() - CMatrix::Identity(rep.dim, rep.dim)).norm() > 1e-9)
      throw SpecError(
          "build_basis: representation is not even; the geometry is a "
          "projective coset lift and needs rho(-Id) = Id");
  }

  FixedSpaceResult stab = algebra_fixed_space(
      rep, space.stabilizer_generators, tol);
  FixedSpaceResult full =
      algebra_fixed_space(rep, space.group.algebra_generators, tol);
  if (!space.group.component_reps.empty())
    full = discrete_refine(full, rep, space.group.component_reps, tol);

  const CMatrix& vh = stab.basis.values();   // dim x m
  const CMatrix& vg = full.basis.values();   // dim x m'
  Eigen::Index m = vh.cols(), mp = vg.cols();
  if (mp > m)
    throw NumericalError("build_basis: V^G larger than V^H (rank tolerance)");

  CMatrix rows(m, rep.dim);
  rows.topRows(mp) = vg.transpose();
  if (m > mp) {
    CMatrix rem = vh - vg * (vg.adjoint() * vh);  // project off V^G
    CMatrix rem_rows = canonical_orthonormal(rem.transpose(), tol);
    if (rem_rows.rows() != m - mp)
      throw NumericalError("build_basis: rank mismatch splitting V^G from V^H");
    rows.bottomRows(m - mp) = rem_rows;
  }
  rows = leading_one_scaled(rows);

  EquivariantBasis out;
  out.space = space;
  out.rep = rep;
  out.invariant_vectors = Mat(rows.transpose(), rep.field);
  out.full_group_invariant_count = static_cast<int>(mp);

  double res = 0.0;
  for (const Mat& h : space.stabilizer_generators) {
    CMatrix action = rep.algebra_eval(h).values();
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto v = out.invariant_vectors.values().col(i);
      res = std::max(res, (action * v).norm() / v.norm());
    }
  }
  out.residual = res;
  if (res > 1e-9)
    throw NumericalError("build_basis: invariance residual " +
                         std::to_string(res));
  return out;
}

CVector evaluate_vector(const EquivariantBasis& basis, const Point& x, int i) {
  if (i < 0 || i >= basis.invariant_vectors.cols())
    throw SpecError("evaluate: basis index out of range");
  Point p = basis.space.normalize_point(x);
  Mat f = basis.space.section(p);
  return basis.rep.group_eval(f).values() *
         basis.invariant_vectors.values().col(i);
}

Mat evaluate(const EquivariantBasis& basis, const Point& x, int i) {
  CVector v = evaluate_vector(basis, x, i);
  if (basis.rep.endomorphism_valued)
    return Mat(unvec(v, basis.rep.endo_rows, basis.rep.endo_cols),
               basis.rep.field);
  return Mat(v, basis.rep.field);
}

double check_equivariance(const EquivariantBasis& basis, int point_samples,
                          int group_samples, uint64_t seed) {
  Rng rng(seed);
  Eigen::Index m = basis.invariant_vectors.cols();
  double worst = 0.0;
  for (int s = 0; s < point_samples; ++s) {
    Point p = basis.space.sample_point(rng);
    std::vector<CVector> at_p;
    for (Eigen::Index i = 0; i < m; ++i)
      at_p.push_back(evaluate_vector(basis, p, static_cast<int>(i)));
    for (int t = 0; t < group_samples; ++t) {
      Mat g = random_group_element(basis.space.group, rng);
      Point q = basis.space.apply(g, p);
      try {
        q = basis.space.normalize_point(q);
      } catch (const SpecError&) {
        continue;  // moved into the excluded set; domain-restricted map
      }
      CMatrix rho_g = basis.rep.group_eval(g).values();
      for (Eigen::Index i = 0; i < m; ++i) {
        CVector lhs = evaluate_vector(basis, q, static_cast<int>(i));
        worst = std::max(worst, (lhs - rho_g * at_p[i]).norm());
      }
    }
  }
  return worst;
}

RadialProfileSet::RadialProfileSet(
    std::vector<std::function<double(double)>> profiles, int full_group_count)
    : profiles_(std::move(profiles)), full_group_count_(full_group_count) {
  for (size_t i = 0; i < profiles_.size(); ++i) {
    double at0 = profiles_[i](0.0);
    if (!std::isfinite(at0))
      throw SpecError("radial profile " + std::to_string(i) +
                      " is not finite at 0");
    if (static_cast<int>(i) >= full_group_count_ && std::abs(at0) > 1e-12)
      throw SpecError("radial profile " + std::to_string(i) +
                      " must vanish at 0 (only the first " +
                      std::to_string(full_group_count_) +
                      " profiles may not)");
    // Cauchy probe for continuity at the origin.
    if (std::abs(profiles_[i](1e-8) - at0) > 1e-6)
      throw SpecError("radial profile " + std::to_string(i) +
                      " fails the continuity probe at 0");
  }
}

std::function<Mat(const RVector&)> rd_kernel(const EquivariantBasis& basis,
                                             const RadialProfileSet& profiles) {
  if (basis.space.id.rfind("sphere", 0) != 0)
    throw SpecError("rd_kernel: basis must live on a sphere catalog entry");
  if (profiles.size() != basis.invariant_vectors.cols())
    throw SpecError("rd_kernel: one profile per invariant vector required");
  if (profiles.full_group_count() != basis.full_group_invariant_count)
    throw SpecError("rd_kernel: profile set was validated against a "
                    "different m'");
  return [basis, profiles](const RVector& x) {
    double r = x.norm();
    CMatrix rho_f;
    if (r == 0.0) {
      rho_f = CMatrix::Identity(basis.rep.dim, basis.rep.dim);
    } else {
      rho_f = basis.rep.group_eval(sphere_section(x)).values();
    }
    CVector acc = CVector::Zero(basis.rep.dim);
    for (Eigen::Index i = 0; i < basis.invariant_vectors.cols(); ++i) {
      double c = profiles(static_cast<int>(i), r);
      if (c != 0.0)
        acc += c * (rho_f * basis.invariant_vectors.values().col(i));
    }
    if (basis.rep.endomorphism_valued)
      return Mat(unvec(acc, basis.rep.endo_rows, basis.rep.endo_cols),
                 basis.rep.field);
    return Mat(acc, basis.rep.field);
  };
}

double check_kernel_constraint(const std::function<Mat(const RVector&)>& k,
                               const Representation& rep_in,
                               const Representation& rep_out,
                               const LieGroupSpec& group, int samples,
                               uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.5);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Mat g = random_group_element(group, rng);
    RVector v(group.ambient_size);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = gauss(rng);
    RVector gv = g.real_values() * v;
    CMatrix lhs = k(gv).values();
    CMatrix rhs = (1.0 / g.det()) * rep_out.group_eval(g).values() *
                  k(v).values() * rep_in.group_eval(g).inverse().values();
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

CVector spherical_harmonic_coefficients(int m, Complex z) {
  if (m < 0) throw SpecError("spherical_harmonic_coefficients: m >= 0");
  CVector out = CVector::Zero(2 * m + 1);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      out(i + j) += static_cast<double>(binomial(m, i)) *
                    static_cast<double>(binomial(m, j)) * sign * int_pow(z, i) *
                    int_pow(std::conj(z), m - j);
    }
  }
  out /= std::pow(1.0 + std::norm(z), m);
  return out;
}

}  // namespace equimap
