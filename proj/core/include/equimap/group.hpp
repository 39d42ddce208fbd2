#pragma once

#include <vector>

#include "equimap/matrix.hpp"

namespace equimap {

/// A matrix group given by Lie-algebra generators (real span) plus optional
/// finite representatives of non-identity components.
struct LieGroupSpec {
  std::string name;
  Eigen::Index ambient_size = 0;
  Field field = Field::Real;
  std::vector<Mat> algebra_generators;
  std::vector<Mat> component_reps;
};

/// Validates shapes and invertibility of component representatives.
LieGroupSpec make_group(std::string name, Eigen::Index ambient_size,
                        Field field, std::vector<Mat> generators,
                        std::vector<Mat> component_reps = {});

bool same_group(const LieGroupSpec& a, const LieGroupSpec& b);

// Catalog of named groups.
LieGroupSpec so_group(int n);    // SO(n), n(n-1)/2 rotation generators
LieGroupSpec se_group(int n);    // SE(n) as (n+1)x(n+1) affine matrices
LieGroupSpec sl2r_group();       // SL(2,R): H, E, F
LieGroupSpec su2_group();        // SU(2): iH, E-F, i(E+F)
LieGroupSpec sl2c_group();       // SL(2,C) as real group: H,E,F,iH,iE,iF
LieGroupSpec so11_group();       // SO+(1,1): single boost generator

/// exp(sum_j t_j A_j) with t_j uniform in [-scale, scale].
Mat random_group_element(const LieGroupSpec& g, Rng& rng, double scale = 1.0);

/// Random real combination of the generators.
Mat random_algebra_element(const LieGroupSpec& g, Rng& rng, double scale = 1.0);

/// Basis of a named matrix Lie algebra embedded in the given ambient size
/// ("so2", "so3", "so4", "sl2r", "su2", "sl2c", "se2", "se3", "so11", "none").
/// "so(k)" with ambient n > k is embedded in the trailing k coordinates.
std::vector<Mat> named_algebra(const std::string& name,
                               Eigen::Index ambient_size = 0);

}  // namespace equimap
