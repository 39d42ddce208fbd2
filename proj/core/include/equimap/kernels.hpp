#pragma once

#include "equimap/fixed_space.hpp"
#include "equimap/spaces.hpp"

namespace equimap {

/// Basis of the equivariant maps x -> rho(f(x)) v_i. invariant_vectors holds
/// the v_i as columns, full-group invariants first, each scaled so its first
/// nonzero coordinate is exactly 1 (this reproduces the catalog's reference
/// bases entry-for-entry).
struct EquivariantBasis {
  HomogeneousSpace space;
  Representation rep;
  Mat invariant_vectors;              // dim x m
  int full_group_invariant_count = 0;  // m'
  double residual = 0.0;
};

/// Computes V^H for the stabilizer, V^G for the full group, and orders the
/// basis with V^G first. Representations over projective coset lifts must be
/// even (rho(-Id) = Id), asserted here.
EquivariantBasis build_basis(const HomogeneousSpace& space,
                             const Representation& rep, double tol = 1e-10);

/// rho(f(x)) v_i as a flat vector.
CVector evaluate_vector(const EquivariantBasis& basis, const Point& x, int i);

/// rho(f(x)) v_i, reshaped to a matrix when the representation is
/// endomorphism-valued.
Mat evaluate(const EquivariantBasis& basis, const Point& x, int i);

/// Max over samples of ||K_i(g x) - rho(g) K_i(x)||, with g = exp(sum t_j A_j),
/// t_j uniform in [-1, 1] over the full group's generators. Moved points that
/// leave the section's domain (excluded sets) are resampled.
double check_equivariance(const EquivariantBasis& basis, int point_samples,
                          int group_samples, uint64_t seed);

/// Radial profiles c_i on [0, inf); construction enforces c_i(0) = 0 for
/// i >= full_group_count (0-indexed) and probes continuity at 0.
class RadialProfileSet {
 public:
  RadialProfileSet(std::vector<std::function<double(double)>> profiles,
                   int full_group_count);
  double operator()(int i, double r) const { return profiles_[i](r); }
  int size() const { return static_cast<int>(profiles_.size()); }
  int full_group_count() const { return full_group_count_; }

 private:
  std::vector<std::function<double(double)>> profiles_;
  int full_group_count_;
};

/// x -> sum_i c_i(|x|) rho(f(x)) v_i on R^d, with f(0) = Id; continuous at the
/// origin by the profile constraint. The basis must live on the sphere
/// catalog entry of dimension d-1.
std::function<Mat(const RVector&)> rd_kernel(const EquivariantBasis& basis,
                                             const RadialProfileSet& profiles);

/// Max over samples of ||K(g v) - det(g)^-1 rho_out(g) K(v) rho_in(g)^-1||.
double check_kernel_constraint(const std::function<Mat(const RVector&)>& k,
                               const Representation& rep_in,
                               const Representation& rep_out,
                               const LieGroupSpec& group, int samples,
                               uint64_t seed);

/// Coefficients of x^(2m-l) y^l, l = 0..2m, in the degree-m orbit kernel of
/// the Riemann sphere at Z: (1+|Z|^2)^-m sum_{i+j=l} C(m,i) C(m,j) (-1)^i
/// Z^i conj(Z)^(m-j). These span the degree-m spherical harmonics.
CVector spherical_harmonic_coefficients(int m, Complex z);

}  // namespace equimap
