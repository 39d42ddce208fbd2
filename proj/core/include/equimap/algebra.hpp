#pragma once

#include "equimap/kernels.hpp"

namespace equimap {

/// Bilinear product on flattened vectors (e.g. matrix multiplication after
/// column-major reshape).
using BilinearProduct =
    std::function<CVector(const CVector&, const CVector&)>;

/// Matrix multiplication of rows x cols endomorphisms, on column-major
/// flattened vectors.
BilinearProduct matrix_product_on_vec(Eigen::Index rows);

/// c[i][j][k] with v_i . v_j = sum_k c[i][j][k] v_k, plus the worst
/// least-squares defect of expanding the products in the span.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<CVector>> c;  // c[i][j] is the coefficient vector
  double residual = 0.0;
};

/// Least-squares expansion of all pairwise products; throws NumericalError
/// when the span is not closed under the product (residual > tol).
StructureConstants structure_constants(const Mat& vectors,
                                       const BilinearProduct& product,
                                       double tol = 1e-9);

/// Structure constants of {K_i(x)} under the pointwise product compared with
/// those of {v_i}; returns the max absolute deviation. Requires the group to
/// act by algebra automorphisms (sampled assertion).
double pointwise_structure_match(const EquivariantBasis& basis,
                                 const BilinearProduct& product,
                                 const Point& x, double tol = 1e-9,
                                 uint64_t seed = 17);

struct NilpotentCertificate {
  bool pass = false;
  std::vector<double> power_norms;  // ||E^1||, ..., ||E^(n+1)||
  int independent_rank = 0;         // rank of {Id, E, ..., E^n}
};

/// Verifies E^(n+1) = 0 within tol and that {Id, E, ..., E^n} has rank n+1.
NilpotentCertificate cyclic_nilpotent_certificate(const Mat& e_image, int n,
                                                  double tol = 1e-9);

enum class DivisionType { R, C, H };

const char* division_type_name(DivisionType t);

struct AlgebraBlock {
  DivisionType type = DivisionType::R;
  int multiplicity = 0;        // r, c or h; block dim is r^2, 2c^2, 4h^2
  std::vector<Mat> witnesses;  // unit; plus J (C) or I, J (H)
  double residual = 0.0;       // defect of the defining relations
};

struct ClassificationReport {
  std::vector<AlgebraBlock> blocks;
  double residual = 0.0;
};

/// Wedderburn decomposition of a unital semisimple real matrix algebra:
/// central idempotents from a random central element's eigenprojectors, block
/// division type from the restricted center dimension and the signature of
/// the regular trace form. Throws NumericalError when a radical is detected
/// (trace form degenerate) or the input is not closed/unital.
ClassificationReport classify_commutant(const std::vector<Mat>& algebra_basis,
                                        double tol = 1e-8, uint64_t seed = 1);

/// Basis of N_g(h)/h: solves [A, B] in span(h) for all generators B over
/// A in span(g), then removes the span(h) component. With empty h this is
/// the full input algebra. Generators must be real-linear independent;
/// h must close under brackets within tol.
std::vector<Mat> invariant_vector_fields(const std::vector<Mat>& g_gens,
                                         const std::vector<Mat>& h_gens,
                                         double tol = 1e-9);

}  // namespace equimap
