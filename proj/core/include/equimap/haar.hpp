#pragma once

#include <vector>

#include "equimap/representation.hpp"

namespace equimap {

/// One quadrature axis of a subgroup chart. Periodic axes are integrated
/// with the rectangle rule (exact for trigonometric polynomials below the
/// node count); non-periodic axes use Gauss-Legendre.
struct HaarAxis {
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = true;
};

/// Surjective parametrization of a compact subgroup over a box, with the
/// normalized Haar density relative to the plain product measure on the box.
struct HaarChart {
  std::vector<HaarAxis> axes;
  std::function<Mat(const std::vector<double>&)> element;
  std::function<double(const std::vector<double>&)> weight;
};

/// Charts used by the catalog.
HaarChart trivial_chart(Eigen::Index ambient, Field field);
/// theta in [0, 2pi) -> exp(theta * generator).
HaarChart circle_chart(const Mat& generator);
/// ZYZ Euler angles on SO(3) lifted through the given algebra basis
/// {about-z, about-y} of the subgroup; density sin(beta)/(8 pi^2).
HaarChart euler_so3_chart(const Mat& gen_z, const Mat& gen_y);

/// Rank of the numerically averaged projector P = avg rho(h(theta)).
/// Throws NumericalError when ||P^2 - P|| > 10 * tol (bad chart or too few
/// points). points_per_axis must be >= 8.
int haar_projector_rank(const Representation& rep, const HaarChart& chart,
                        int points_per_axis, double tol = 1e-8);

}  // namespace equimap
