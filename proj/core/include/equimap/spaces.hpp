#pragma once

#include <optional>

#include "equimap/haar.hpp"

namespace equimap {

/// A point of a catalog geometry, as the real coordinate tuple of its model
/// (sphere/euclidean: ambient coordinates; h2: (x, y); h3: (t, x, y, z);
/// riemann-sphere: (Re Z, Im Z) or the infinity flag; c2-punctured:
/// (Re x, Im x, Re y, Im y); so11: (t, x)).
struct Point {
  RVector coords;
  bool at_infinity = false;
};

Point make_point(std::initializer_list<double> coords);

/// A homogeneous space record: group, base point, stabilizer generators,
/// section f with f(x) . x0 = x, and the group action on points.
struct HomogeneousSpace {
  std::string id;
  LieGroupSpec group;
  Point base_point;
  std::vector<Mat> stabilizer_generators;
  std::function<Mat(const Point&)> section;
  std::function<Point(const Mat&, const Point&)> apply;
  /// Re-projects onto the constraint set when within 1e-9, else throws
  /// SpecError. Returned points are exactly on the model.
  std::function<Point(const Point&)> normalize_point;
  std::function<Point(Rng&)> sample_point;
  bool projective = false;  // coset lift of PSL/PSU: reps must be even
  bool section_identity_at_base = true;
  std::string excluded_set;
  std::optional<HaarChart> stabilizer_haar;
};

// Closed-form sections.
/// Gram-Schmidt section of S^n: orthogonal, det 1, first column x/|x|,
/// f(lambda x) = f(x); recursive diag(f_{n-2}, 1, 1) on x_n = x_{n+1} = 0.
Mat sphere_section(const RVector& x);
/// Affine (n+1)x(n+1) translation block.
Mat euclidean_section(const RVector& x);
/// ((sqrt y, x/sqrt y), (0, 1/sqrt y)) in SL(2,R); f(tau) . i = tau.
Mat h2_section(Complex tau);
/// Hermitian positive square root of the Weyl matrix of p, det 1.
Mat h3_section(double t, double x, double y, double z);
/// Hermitian 2x2 Weyl matrix ((t+z, x-iy), (x+iy, t-z)).
Mat weyl_matrix(double t, double x, double y, double z);
/// SU(2) coset representative moving 0 to Z; the lift with real-nonnegative
/// top-left entry, and ((0,-1),(1,0)) at infinity.
Mat riemann_sphere_section(Complex z, bool at_infinity = false);
/// ((x, -y/r^2), (y, x/r^2)), r^2 = x^2 + y^2 != 0, in SL(2,C).
Mat c2_section(Complex x, Complex y);
/// Appendix-style SO(1,1) section: (1/sqrt(-Q))((t,x),(x,t)) for Q < 0,
/// (1/sqrt(Q))((x,t),(t,x)) for Q > 0; domain error on the cone Q = 0.
Mat so11_section(double t, double x);

// Catalog factories and lookup by identifier ("sphere(2)", "euclidean(3)",
// "h2", "h3", "riemann-sphere", "c2-punctured", "so11"). Bare "sphere" and
// "euclidean" default to dimension 2.
HomogeneousSpace sphere_space(int n);
HomogeneousSpace euclidean_space(int n);
HomogeneousSpace h2_space();
HomogeneousSpace h3_space();
HomogeneousSpace riemann_sphere_space();
HomogeneousSpace c2_punctured_space();
HomogeneousSpace so11_space();

std::vector<HomogeneousSpace> catalog();
HomogeneousSpace find_space(const std::string& id);

}  // namespace equimap
