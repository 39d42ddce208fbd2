#pragma once

#include <vector>

#include "equimap/representation.hpp"

namespace equimap {

/// Orthonormal canonical basis of the fixed subspace. Columns of `basis` are
/// the vectors; Gram matrix is the identity to 1e-12. The canonical form is
/// reduced row echelon of the span, Gram-Schmidt in pivot order, then each
/// vector's first nonzero coordinate made real-positive.
struct FixedSpaceResult {
  Mat basis;  // dim x m
  double rank_tolerance_used = 0.0;
  double residual = 0.0;
  bool full_space_fallback = false;  // empty generator list was given
};

/// Joint nullspace of {algebra_eval(h)} over the rep's own field, via SVD of
/// the stacked action matrix. Singular values below tol * sigma_max count as
/// zero. Empty generator list returns the full space, flagged.
FixedSpaceResult algebra_fixed_space(const Representation& rep,
                                     const std::vector<Mat>& stabilizer_generators,
                                     double tol = 1e-10);

/// Intersects the span with the joint fixed space of (rho(h) - Id) for each
/// finite representative h. The connected-stabilizer computation above does
/// not see non-identity components; this refinement is the disconnected-case
/// extension.
FixedSpaceResult discrete_refine(const FixedSpaceResult& result,
                                 const Representation& rep,
                                 const std::vector<Mat>& reps_of_components,
                                 double tol = 1e-10);

// Canonicalization helpers shared with the kernels layer. Rows of the input
// span the subspace.
CMatrix canonical_rref(const CMatrix& rows, double tol);
CMatrix canonical_orthonormal(const CMatrix& rows, double tol);
CMatrix leading_one_scaled(const CMatrix& rows);

}  // namespace equimap
