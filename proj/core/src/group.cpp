#include "equimap/group.hpp"

namespace equimap {

namespace {

// Skew generator rotating e_a toward e_b inside an n x n ambient.
RMatrix rotation_generator(int n, int a, int b) {
  RMatrix m = RMatrix::Zero(n, n);
  m(a, b) = -1.0;
  m(b, a) = 1.0;
  return m;
}

const Complex kI(0.0, 1.0);

}  // namespace

LieGroupSpec make_group(std::string name, Eigen::Index ambient_size,
                        Field field, std::vector<Mat> generators,
                        std::vector<Mat> component_reps) {
  for (const Mat& g : generators) {
    if (g.rows() != ambient_size || g.cols() != ambient_size)
      throw SpecError("group '" + name + "': generator shape mismatch");
  }
  for (const Mat& c : component_reps) {
    if (c.rows() != ambient_size || c.cols() != ambient_size)
      throw SpecError("group '" + name + "': component rep shape mismatch");
    if (std::abs(c.det()) < 1e-12)
      throw SpecError("group '" + name + "': component rep not invertible");
  }
  return LieGroupSpec{std::move(name), ambient_size, field,
                      std::move(generators), std::move(component_reps)};
}

bool same_group(const LieGroupSpec& a, const LieGroupSpec& b) {
  return a.name == b.name && a.ambient_size == b.ambient_size;
}

LieGroupSpec so_group(int n) {
  std::vector<Mat> gens;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      gens.push_back(Mat::real(rotation_generator(n, a, b)));
  return make_group("so(" + std::to_string(n) + ")", n, Field::Real,
                    std::move(gens));
}

LieGroupSpec se_group(int n) {
  std::vector<Mat> gens;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      gens.push_back(Mat::real(rotation_generator(n + 1, a, b)));
  for (int i = 0; i < n; ++i) {
    RMatrix t = RMatrix::Zero(n + 1, n + 1);
    t(i, n) = 1.0;
    gens.push_back(Mat::real(t));
  }
  return make_group("se(" + std::to_string(n) + ")", n + 1, Field::Real,
                    std::move(gens));
}

LieGroupSpec sl2r_group() {
  RMatrix h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  return make_group("sl(2,R)", 2, Field::Real,
                    {Mat::real(h), Mat::real(e), Mat::real(f)});
}

LieGroupSpec su2_group() {
  CMatrix u1(2, 2), u2(2, 2), u3(2, 2);
  u1 << kI, 0, 0, -kI;
  u2 << 0, 1, -1, 0;
  u3 << 0, kI, kI, 0;
  return make_group("su(2)", 2, Field::Complex,
                    {Mat::complex(u1), Mat::complex(u2), Mat::complex(u3)});
}

LieGroupSpec sl2c_group() {
  CMatrix h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  std::vector<Mat> gens;
  for (const CMatrix& m : {h, e, f}) gens.push_back(Mat::complex(m));
  for (const CMatrix& m : {h, e, f}) gens.push_back(Mat::complex(kI * m));
  return make_group("sl(2,C)", 2, Field::Complex, std::move(gens));
}

LieGroupSpec so11_group() {
  RMatrix k(2, 2);
  k << 0, 1, 1, 0;
  return make_group("so+(1,1)", 2, Field::Real, {Mat::real(k)});
}

Mat random_algebra_element(const LieGroupSpec& g, Rng& rng, double scale) {
  if (g.algebra_generators.empty())
    return Mat::zero(g.ambient_size, g.ambient_size, g.field);
  std::uniform_real_distribution<double> u(-scale, scale);
  Mat acc = Mat::zero(g.ambient_size, g.ambient_size, g.field);
  for (const Mat& gen : g.algebra_generators) acc = acc + gen * u(rng);
  return acc;
}

Mat random_group_element(const LieGroupSpec& g, Rng& rng, double scale) {
  return expm(random_algebra_element(g, rng, scale));
}

std::vector<Mat> named_algebra(const std::string& name,
                               Eigen::Index ambient_size) {
  auto trailing_so = [&](int k) {
    Eigen::Index n = ambient_size == 0 ? k : ambient_size;
    if (n < k) throw SpecError("ambient too small for " + name);
    std::vector<Mat> gens;
    int off = static_cast<int>(n) - k;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        gens.push_back(Mat::real(
            rotation_generator(static_cast<int>(n), off + a, off + b)));
    return gens;
  };
  if (name == "none") return {};
  if (name == "so2") return trailing_so(2);
  if (name == "so3") return trailing_so(3);
  if (name == "so4") return trailing_so(4);
  if (name == "sl2r") return sl2r_group().algebra_generators;
  if (name == "su2") return su2_group().algebra_generators;
  if (name == "sl2c") return sl2c_group().algebra_generators;
  if (name == "se2") return se_group(2).algebra_generators;
  if (name == "se3") return se_group(3).algebra_generators;
  if (name == "so11") return so11_group().algebra_generators;
  throw SpecError("unknown algebra name: " + name);
}

}  // namespace equimap
