#include <doctest.h>

#include "equimap/spaces.hpp"

using namespace equimap;

TEST_CASE("sphere section: f_1 closed form") {
  RVector x(2);
  x << 0.6, -0.8;
  RMatrix f = sphere_section(x).real_values();
  RMatrix want(2, 2);
  want << 0.6, 0.8, -0.8, 0.6;
  CHECK((f - want).norm() < 1e-15);
}

TEST_CASE("sphere section: orthogonal, det 1, first column x/r, n = 1..6") {
  Rng rng(42);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      RVector x(n + 1);
      for (int i = 0; i <= n; ++i) x(i) = g(rng);
      RMatrix f = sphere_section(x).real_values();
      CHECK((f.transpose() * f - RMatrix::Identity(n + 1, n + 1)).norm() <
            1e-12);
      CHECK(std::abs(f.determinant() - 1.0) < 1e-12);
      CHECK((f.col(0) * x.norm() - x).norm() < 1e-12 * x.norm());
    }
  }
}

TEST_CASE("sphere section: scale invariance is bit-exact for powers of two") {
  Rng rng(43);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      RVector x(n + 1);
      for (int i = 0; i <= n; ++i) x(i) = g(rng);
      RMatrix f = sphere_section(x).real_values();
      for (double lambda : {0.5, 2.0, 10.0}) {
        RMatrix fl = sphere_section(RVector(lambda * x)).real_values();
        if (lambda == 10.0) {
          CHECK((fl - f).norm() < 1e-14);
        } else {
          CHECK((fl - f).cwiseAbs().maxCoeff() == 0.0);
        }
      }
    }
  }
}

TEST_CASE("sphere section: axis points and the degenerate recursion") {
  RVector e1(4);
  e1 << 2.5, 0, 0, 0;
  CHECK((sphere_section(e1).real_values() - RMatrix::Identity(4, 4)).norm() ==
        0.0);

  RVector m1(3);
  m1 << -1, 0, 0;
  RMatrix want = RMatrix::Identity(3, 3);
  want(0, 0) = -1;
  want(1, 1) = -1;
  CHECK((sphere_section(m1).real_values() - want).norm() == 0.0);

  // n = 2 at (0,0,r): frozen from evaluating the closed form
  RVector z(3);
  z << 0, 0, 1;
  RMatrix fz = sphere_section(z).real_values();
  RMatrix wantz(3, 3);
  wantz << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  CHECK((fz - wantz).norm() < 1e-15);

  // degenerate n = 4 branch: diag(f_2, 1, 1)
  RVector d(5);
  d << 0.3, -0.4, 1.2, 0.0, 0.0;
  RMatrix fd = sphere_section(d).real_values();
  CHECK((fd.bottomRightCorner(2, 2) - RMatrix::Identity(2, 2)).norm() == 0.0);
  RVector head(3);
  head << 0.3, -0.4, 1.2;
  CHECK((fd.topLeftCorner(3, 3) - sphere_section(head).real_values()).norm() ==
        0.0);
  CHECK(std::abs(fd.determinant() - 1.0) < 1e-12);

  CHECK_THROWS_AS(sphere_section(RVector::Zero(3)), SpecError);
}

TEST_CASE("euclidean section") {
  RVector zero = RVector::Zero(2);
  CHECK((euclidean_section(zero).real_values() - RMatrix::Identity(3, 3))
            .norm() == 0.0);
  RVector x(2);
  x << 1, 2;
  RMatrix f = euclidean_section(x).real_values();
  CHECK(f(0, 2) == 1.0);
  CHECK(f(1, 2) == 2.0);
  // composition acts by translation addition
  RVector y(2);
  y << -3, 0.5;
  RMatrix fy = euclidean_section(y).real_values();
  RVector origin3(3);
  origin3 << 0, 0, 1;
  RVector moved = f * (fy * origin3);
  CHECK(std::abs(moved(0) - (x(0) + y(0))) < 1e-15);
  CHECK(std::abs(moved(1) - (x(1) + y(1))) < 1e-15);
}

TEST_CASE("h2 section: golden form and Moebius check") {
  CHECK((h2_section(Complex(0, 1)).real_values() - RMatrix::Identity(2, 2))
            .norm() == 0.0);
  Rng rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    double x = 2.0 * g(rng), y = std::exp(g(rng));
    RMatrix f = h2_section(Complex(x, y)).real_values();
    RMatrix want(2, 2);
    want << std::sqrt(y), x / std::sqrt(y), 0.0, 1.0 / std::sqrt(y);
    CHECK((f - want).norm() == 0.0);
    CHECK(std::abs(f.determinant() - 1.0) < 1e-14);
    // Moebius action recovers tau from i
    Complex i(0, 1);
    Complex tau = (f(0, 0) * i + f(0, 1)) / (f(1, 0) * i + f(1, 1));
    CHECK(std::abs(tau - Complex(x, y)) < 1e-13 * std::abs(Complex(x, y)));
  }
  CHECK_THROWS_AS(h2_section(Complex(1, 0)), SpecError);
  CHECK_THROWS_AS(h2_section(Complex(0, -2)), SpecError);
}

TEST_CASE("h3 section: base point, gg* = weyl(p), eigenvalues") {
  CHECK((h3_section(1, 0, 0, 0).values() - CMatrix::Identity(2, 2)).norm() <
        1e-15);
  Rng rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    double x = g(rng), y = g(rng), z = g(rng);
    double t = std::sqrt(1.0 + x * x + y * y + z * z);
    Mat gm = h3_section(t, x, y, z);
    Mat a = weyl_matrix(t, x, y, z);
    CHECK(std::abs(gm.det() - Complex(1, 0)) < 1e-10);
    CHECK((gm.values() * gm.values().adjoint() - a.values()).norm() < 1e-10);
    CHECK(std::abs(a.det() - Complex(1, 0)) < 1e-12);
    // hermitian positive
    CHECK((gm.values() - gm.values().adjoint()).norm() < 1e-14);
    // Weyl matrix eigenvalues t +- sqrt(t^2 - 1)
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a.values());
    double s = std::sqrt(t * t - 1.0);
    CHECK(std::abs(es.eigenvalues()(1) - (t + s)) < 1e-12);
    CHECK(std::abs(es.eigenvalues()(0) - (t - s)) < 1e-12);
  }
  CHECK_THROWS_AS(h3_section(2, 0, 0, 0), SpecError);
}

TEST_CASE("riemann sphere section: goldens and sign convention") {
  CHECK((riemann_sphere_section(Complex(0, 0)).values() -
         CMatrix::Identity(2, 2))
            .norm() == 0.0);
  CMatrix inf = riemann_sphere_section(0.0, true).values();
  CMatrix want_inf(2, 2);
  want_inf << 0, -1, 1, 0;
  CHECK((inf - want_inf).norm() == 0.0);

  CMatrix one = riemann_sphere_section(Complex(1, 0)).values();
  CMatrix want_one(2, 2);
  double s = 1.0 / std::sqrt(2.0);
  want_one << s, s, -s, s;
  CHECK((one - want_one).norm() < 1e-15);

  Rng rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    Complex z(2.0 * g(rng), 2.0 * g(rng));
    CMatrix f = riemann_sphere_section(z).values();
    CHECK((f.adjoint() * f - CMatrix::Identity(2, 2)).norm() < 1e-14);
    CHECK(std::abs(f.determinant() - Complex(1, 0)) < 1e-14);
    CHECK(f(0, 0).real() >= 0.0);
    CHECK(std::abs(f(0, 1) / f(1, 1) - z) < 1e-13 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("c2 section") {
  CHECK((c2_section(Complex(1, 0), Complex(0, 0)).values() -
         CMatrix::Identity(2, 2))
            .norm() == 0.0);
  Rng rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    Complex x(g(rng), g(rng)), y(g(rng), g(rng));
    if (std::abs(x * x + y * y) < 0.1) continue;
    CMatrix f = c2_section(x, y).values();
    CHECK(std::abs(f.determinant() - Complex(1, 0)) < 1e-13);
    CHECK(std::abs(f(0, 0) - x) == 0.0);
    CHECK(std::abs(f(1, 0) - y) == 0.0);
  }
  CHECK_THROWS_AS(c2_section(Complex(1, 0), Complex(0, 1)), SpecError);
}

TEST_CASE("so11 section: branches and the excluded cone") {
  CHECK((so11_section(1, 0).real_values() - RMatrix::Identity(2, 2)).norm() ==
        0.0);
  CHECK((so11_section(0, 1).real_values() - RMatrix::Identity(2, 2)).norm() ==
        0.0);
  for (double th : {-1.5, -0.3, 0.4, 2.0}) {
    RMatrix f = so11_section(std::cosh(th), std::sinh(th)).real_values();
    CHECK(std::abs(f(0, 0) - std::cosh(th)) < 1e-14 * std::cosh(th));
    CHECK(std::abs(f(0, 1) - std::sinh(th)) < 1e-14 * std::cosh(th));
    CHECK(std::abs(f(1, 0) - std::sinh(th)) < 1e-14 * std::cosh(th));
    // preserves Q
    RMatrix eta(2, 2);
    eta << -1, 0, 0, 1;
    CHECK((f.transpose() * eta * f - eta).norm() < 1e-13);
  }
  // Q > 0 branch formula, again Q-preserving
  RMatrix f = so11_section(0.3, 1.7).real_values();
  RMatrix eta(2, 2);
  eta << -1, 0, 0, 1;
  CHECK((f.transpose() * eta * f - eta).norm() < 1e-13);
  CHECK_THROWS_AS(so11_section(1.0, 1.0), SpecError);
  CHECK_THROWS_AS(so11_section(-2.0, 2.0), SpecError);
}

TEST_CASE("catalog: section property f(x) x0 = x on random points") {
  Rng rng(2024);
  for (const HomogeneousSpace& space : catalog()) {
    CAPTURE(space.id);
    for (int trial = 0; trial < 1000; ++trial) {
      Point p = space.sample_point(rng);
      Mat f = space.section(p);
      Point moved = space.apply(f, space.base_point);
      CHECK(moved.at_infinity == p.at_infinity);
      if (!p.at_infinity)
        CHECK((moved.coords - p.coords).norm() <
              1e-10 * std::max(1.0, p.coords.norm()));
    }
  }
}

TEST_CASE("catalog: section at the base point is the identity") {
  for (const HomogeneousSpace& space : catalog()) {
    CAPTURE(space.id);
    if (!space.section_identity_at_base) continue;
    Mat f = space.section(space.base_point);
    CHECK((f.values() - CMatrix::Identity(f.rows(), f.cols())).norm() <
          1e-12);
  }
}

TEST_CASE("catalog: stabilizer generators fix the base point") {
  Rng rng(88);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const HomogeneousSpace& space : catalog()) {
    CAPTURE(space.id);
    for (const Mat& h : space.stabilizer_generators) {
      for (int trial = 0; trial < 12; ++trial) {
        Mat g = expm(h * u(rng));
        Point moved = space.apply(g, space.base_point);
        CHECK(!moved.at_infinity);
        CHECK((moved.coords - space.base_point.coords).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("find_space parses identifiers") {
  CHECK(find_space("sphere").id == "sphere(2)");
  CHECK(find_space("sphere(4)").group.ambient_size == 5);
  CHECK(find_space("euclidean(3)").group.name == "se(3)");
  CHECK(find_space("riemann-sphere").projective);
  CHECK_THROWS_AS(find_space("torus"), SpecError);
  CHECK_THROWS_AS(find_space("sphere(x)"), SpecError);
}

TEST_CASE("point validation re-projects or rejects") {
  HomogeneousSpace sph = sphere_space(2);
  Point near = make_point({1.0 + 5e-10, 0.0, 0.0});
  Point fixed = sph.normalize_point(near);
  CHECK(std::abs(fixed.coords.norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(sph.normalize_point(make_point({1.1, 0.0, 0.0})), SpecError);

  HomogeneousSpace h3 = h3_space();
  Point offp = make_point({std::sqrt(1.0 + 0.25) + 1e-10, 0.5, 0.0, 0.0});
  Point onp = h3.normalize_point(offp);
  double q = -onp.coords(0) * onp.coords(0) + onp.coords.tail(3).squaredNorm();
  CHECK(std::abs(q + 1.0) < 1e-14);
  CHECK_THROWS_AS(h3.normalize_point(make_point({2.0, 0.0, 0.0, 0.0})),
                  SpecError);
}
