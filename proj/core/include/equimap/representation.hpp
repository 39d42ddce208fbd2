#pragma once

#include <functional>

#include "equimap/group.hpp"

namespace equimap {

/// A finite-dimensional representation of a LieGroupSpec. group_eval maps a
/// group element (ambient matrix) to an invertible dim x dim matrix;
/// algebra_eval is its derivative at the identity and is R-linear in the
/// generator span.
struct Representation {
  int dim = 0;
  Field field = Field::Real;
  std::string provenance = "custom";
  LieGroupSpec group;
  std::function<Mat(const Mat&)> group_eval;
  std::function<Mat(const Mat&)> algebra_eval;

  // Set when vectors of the representation are flattened endomorphisms
  // (column-major); evaluate() reshapes to endo_rows x endo_cols.
  bool endomorphism_valued = false;
  Eigen::Index endo_rows = 0;
  Eigen::Index endo_cols = 0;
};

Representation trivial_rep(const LieGroupSpec& group);
Representation defining_rep(const LieGroupSpec& group);

/// g -> rho(g)^-T, A -> -drho(A)^T.
Representation dual_rep(const Representation& rep);

/// Kronecker-product action; groups must match.
Representation tensor_rep(const Representation& a, const Representation& b);

/// Block-diagonal sum; groups must match.
Representation direct_sum_rep(const Representation& a, const Representation& b);

/// g -> det(g)^power rho(g), A -> drho(A) + power tr(A) Id.
Representation det_twist(const Representation& rep, int power);

/// Conjugation action on End(V), flattened column-major:
/// m -> rho(g) m rho(g)^-1, algebra m -> [drho(A), m].
Representation endo_conjugation_rep(const Representation& rep);

/// Action on Hom(V_in, V_out) (dim_out x dim_in matrices, column-major):
/// m -> det(g)^-1 rho_out(g) m rho_in(g)^-1.
Representation hom_rep_with_det_twist(const Representation& rep_in,
                                      const Representation& rep_out);

/// Polynomial representation of a 2x2 matrix group on the degree-n binary
/// forms, monomial basis x^(n-k) y^k, k = 0..n, with action
/// (g.p)(x,y) = p(g^-1 (x,y)).
Representation polynomial_rep_2x2(const LieGroupSpec& group, int n);

/// polynomial_rep_2x2 on SU(2).
Representation su2_polynomial_rep(int n);

/// V_n of SU(2) (n even) expressed as a representation of the 3x3 SO(3)
/// group via the double-cover lift.
Representation so3_polynomial_rep(int n);

/// Real form of a complex representation, dim doubled; each entry a+bi
/// becomes the 2x2 block ((a, b), (-b, a)).
Representation realify(const Representation& rep);

/// SO(3) -> SU(2) lift (quaternion extraction); result is one of the two
/// preimages. g must be a rotation matrix.
CMatrix su2_lift(const RMatrix& rotation);

/// Entrywise block substitution a+bi -> ((a, b), (-b, a)).
CMatrix blockify(const CMatrix& c);

}  // namespace equimap
