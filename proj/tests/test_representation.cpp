#include <doctest.h>

#include "equimap/representation.hpp"

using namespace equimap;

namespace {

// Independent substitution oracle: expands p((x,y) -> A (x,y)) for the
// monomial x^(n-k) y^k by naive bivariate polynomial multiplication.
CVector substitute_monomial(int n, int k, const CMatrix& a) {
  // polynomials as coefficient vectors over x^(d-l) y^l
  std::vector<CVector> factors;
  CVector lin1(2), lin2(2);
  lin1 << a(0, 0), a(0, 1);  // a00 x + a01 y
  lin2 << a(1, 0), a(1, 1);
  CVector acc(1);
  acc << Complex(1.0, 0.0);
  auto mul = [](const CVector& p, const CVector& q) {
    CVector out = CVector::Zero(p.size() + q.size() - 1);
    for (Eigen::Index i = 0; i < p.size(); ++i)
      for (Eigen::Index j = 0; j < q.size(); ++j) out(i + j) += p(i) * q(j);
    return out;
  };
  for (int i = 0; i < n - k; ++i) acc = mul(acc, lin1);
  for (int i = 0; i < k; ++i) acc = mul(acc, lin2);
  CVector out = CVector::Zero(n + 1);
  out.head(acc.size()) = acc;
  return out;
}

void check_homomorphism(const Representation& rep, uint64_t seed,
                        double tol = 1e-9) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    Mat a = random_algebra_element(rep.group, rng, u(rng));
    Mat b = random_algebra_element(rep.group, rng, u(rng));
    Mat ga = expm(a), gb = expm(b);
    CMatrix lhs = (rep.group_eval(ga) * rep.group_eval(gb)).values();
    CMatrix rhs = rep.group_eval(ga * gb).values();
    CHECK((lhs - rhs).norm() < tol * std::max(1.0, rhs.norm()));
  }
  Mat id = Mat::identity(rep.group.ambient_size, rep.group.field);
  CHECK((rep.group_eval(id).values() - CMatrix::Identity(rep.dim, rep.dim))
            .norm() < 1e-12);
}

void check_derivative(const Representation& rep, uint64_t seed,
                      double tol = 1e-6) {
  Rng rng(seed);
  const double h = 1e-5;
  for (int trial = 0; trial < 8; ++trial) {
    Mat a = random_algebra_element(rep.group, rng);
    CMatrix plus = rep.group_eval(expm(a * h)).values();
    CMatrix minus = rep.group_eval(expm(a * -h)).values();
    CMatrix fd = (plus - minus) / (2.0 * h);
    CHECK((fd - rep.algebra_eval(a).values()).norm() <
          tol * std::max(1.0, fd.norm()));
  }
}

}  // namespace

TEST_CASE("defining rep is the identity embedding") {
  for (const LieGroupSpec& g :
       {so_group(3), sl2c_group(), se_group(2), so11_group()}) {
    Representation rep = defining_rep(g);
    CHECK(rep.dim == g.ambient_size);
    check_homomorphism(rep, 11);
    check_derivative(rep, 12);
  }
  CHECK(defining_rep(sl2c_group()).field == Field::Complex);
  CHECK(defining_rep(so_group(4)).dim == 4);
}

TEST_CASE("dual, tensor, det_twist dimensions and fields") {
  Representation d3 = defining_rep(so_group(3));
  Representation t = trivial_rep(so_group(3));
  CHECK(tensor_rep(defining_rep(so_group(3)), dual_rep(d3)).dim == 9);
  CHECK(dual_rep(t).dim == 1);
  // dual of the 1-dim trivial rep is trivial
  Rng rng1(1);
  Mat g = expm(random_algebra_element(so_group(3), rng1));
  CHECK((dual_rep(t).group_eval(g).values() - CMatrix::Identity(1, 1)).norm() <
        1e-14);
  Representation two = polynomial_rep_2x2(sl2r_group(), 1);
  Representation three = polynomial_rep_2x2(sl2r_group(), 2);
  CHECK(tensor_rep(two, three).dim == 6);
  CHECK(tensor_rep(two, three).field == Field::Real);
  CHECK_THROWS_AS(tensor_rep(defining_rep(so_group(3)), two), SpecError);
}

TEST_CASE("constructed reps satisfy homomorphism and derivative properties") {
  Representation endo = endo_conjugation_rep(defining_rep(sl2r_group()));
  check_homomorphism(endo, 21);
  check_derivative(endo, 22);

  Representation dual3 = dual_rep(defining_rep(so_group(3)));
  check_homomorphism(dual3, 23);
  check_derivative(dual3, 24);

  Representation tens =
      tensor_rep(defining_rep(sl2r_group()), dual_rep(defining_rep(sl2r_group())));
  check_homomorphism(tens, 25);
  check_derivative(tens, 26);

  Representation poly = su2_polynomial_rep(3);
  check_homomorphism(poly, 27);
  check_derivative(poly, 28);

  Representation rl = realify(defining_rep(su2_group()));
  check_homomorphism(rl, 29);
  check_derivative(rl, 30);

  Representation so3poly = so3_polynomial_rep(4);
  check_homomorphism(so3poly, 31);
  check_derivative(so3poly, 32);

  Representation hom = hom_rep_with_det_twist(defining_rep(so_group(3)),
                                              defining_rep(so_group(3)));
  check_homomorphism(hom, 33);
  check_derivative(hom, 34);
}

TEST_CASE("endo conjugation basics") {
  Representation rep = endo_conjugation_rep(defining_rep(sl2r_group()));
  CHECK(rep.dim == 4);
  CHECK(rep.endomorphism_valued);
  Mat id2 = Mat::identity(2);
  CHECK((rep.group_eval(id2).values() - CMatrix::Identity(4, 4)).norm() <
        1e-14);
  // algebra action kills the identity endomorphism: [A, Id] = 0
  Rng rng(5);
  Mat a = random_algebra_element(sl2r_group(), rng);
  CVector id_flat = vec(CMatrix::Identity(2, 2));
  CHECK((rep.algebra_eval(a).values() * id_flat).norm() < 1e-14);
}

TEST_CASE("det_twist(defining SO(3), -1) equals defining on group elements") {
  Representation twisted = det_twist(defining_rep(so_group(3)), -1);
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    Mat g = random_group_element(so_group(3), rng);
    CHECK((twisted.group_eval(g).values() - g.values()).norm() < 1e-12);
  }
}

TEST_CASE("det_twist on a group with nonunit determinant") {
  // one-parameter scaling group exp(t Id), det = e^{2t}
  LieGroupSpec scaling =
      make_group("scaling", 2, Field::Real, {Mat::identity(2)});
  Representation tw = det_twist(defining_rep(scaling), 2);
  Mat g = expm(Mat::identity(2) * 0.3);
  double det = std::exp(0.6);
  CHECK((tw.group_eval(g).values() - det * det * g.values()).norm() < 1e-12);
  check_derivative(tw, 41);
}

TEST_CASE("su2 polynomial rep against the substitution oracle") {
  CHECK(su2_polynomial_rep(0).dim == 1);
  Rng rng0(2);
  Mat g0 = expm(random_algebra_element(su2_group(), rng0));
  CHECK((su2_polynomial_rep(0).group_eval(g0).values() -
         CMatrix::Identity(1, 1))
            .norm() < 1e-14);

  // n = 1, g = ((0,-1),(1,0)): substitution by g^{-1} sends x -> y, y -> -x.
  CMatrix g(2, 2);
  g << 0, -1, 1, 0;
  Representation v1 = su2_polynomial_rep(1);
  CMatrix img = v1.group_eval(Mat::complex(g)).values();
  CMatrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK((img - expected).norm() < 1e-14);

  // random group elements vs the oracle, n = 3
  Representation v3 = su2_polynomial_rep(3);
  Rng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    Mat gg = random_group_element(su2_group(), rng);
    CMatrix a = gg.inverse().values();
    CMatrix m = v3.group_eval(gg).values();
    for (int k = 0; k <= 3; ++k)
      CHECK((m.col(k) - substitute_monomial(3, k, a)).norm() < 1e-12);
  }

  // n = 2: -Id acts trivially, so V_2 descends to SO(3)
  CMatrix minus = -CMatrix::Identity(2, 2);
  CHECK((su2_polynomial_rep(2).group_eval(Mat::complex(minus)).values() -
         CMatrix::Identity(3, 3))
            .norm() < 1e-14);
}

TEST_CASE("realify reproduces the 4x4 rotation blocks on the torus") {
  Representation u = realify(defining_rep(su2_group()));
  CHECK(u.dim == 4);
  CHECK(u.field == Field::Real);
  double theta = 0.7;
  CMatrix g(2, 2);
  g << std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta);
  RMatrix got = u.group_eval(Mat::complex(g)).real_values();
  double a = std::cos(theta), b = std::sin(theta);
  RMatrix want(4, 4);
  want << a, b, 0, 0, -b, a, 0, 0, 0, 0, a, -b, 0, 0, b, a;
  CHECK((got - want).norm() < 1e-14);

  // unitary inputs stay orthogonal after realification
  Rng rng(13);
  for (int i = 0; i < 8; ++i) {
    Mat gg = random_group_element(su2_group(), rng);
    RMatrix r = u.group_eval(gg).real_values();
    CHECK((r.transpose() * r - RMatrix::Identity(4, 4)).norm() < 1e-12);
  }

  Representation triv_c = det_twist(trivial_rep(su2_group()), 0);
  // realify of a complex trivial rep: 2-dim identity matrices
  Representation rt = realify(Representation{
      1, Field::Complex, "custom", su2_group(),
      [](const Mat&) { return Mat::identity(1, Field::Complex); },
      [](const Mat&) { return Mat::zero(1, 1, Field::Complex); }});
  Mat gg = random_group_element(su2_group(), rng);
  CHECK((rt.group_eval(gg).values() - CMatrix::Identity(2, 2)).norm() < 1e-14);
  CHECK_THROWS_AS(realify(defining_rep(so_group(3))), SpecError);
  (void)triv_c;
}

TEST_CASE("so3 lift round-trips rotations") {
  Rng rng(19);
  Representation v4 = so3_polynomial_rep(4);
  CHECK(v4.dim == 5);
  // lift is a 2:1 section: blockified check through the quaternion action
  for (int i = 0; i < 20; ++i) {
    Mat r = random_group_element(so_group(3), rng, 2.5);
    CMatrix g = su2_lift(r.real_values());
    CHECK(std::abs(std::abs(g.determinant()) - 1.0) < 1e-12);
    // conjugation action of the lift on su(2) reproduces the rotation
    CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    std::vector<CMatrix> sigma = {sx, sy, sz};
    RMatrix recovered(3, 3);
    for (int b = 0; b < 3; ++b) {
      CMatrix gs = g * sigma[b] * g.adjoint();
      for (int a = 0; a < 3; ++a)
        recovered(a, b) = 0.5 * (sigma[a] * gs).trace().real();
    }
    CHECK((recovered - r.real_values()).norm() < 1e-12);
  }
  CHECK_THROWS_AS(so3_polynomial_rep(3), SpecError);
}

TEST_CASE("direct sum blocks") {
  Representation s = direct_sum_rep(su2_polynomial_rep(1), su2_polynomial_rep(1));
  CHECK(s.dim == 4);
  check_homomorphism(s, 55);
}
