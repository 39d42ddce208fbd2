#include "equimap/spaces.hpp"

#include <cmath>

namespace equimap {

namespace {

const Complex kI(0.0, 1.0);

RMatrix rot_gen(int n, int a, int b) {
  RMatrix m = RMatrix::Zero(n, n);
  m(a, b) = -1.0;
  m(b, a) = 1.0;
  return m;
}

Complex point_as_complex(const Point& p) {
  return Complex(p.coords(0), p.coords(1));
}

}  // namespace

Point make_point(std::initializer_list<double> coords) {
  Point p;
  p.coords = RVector(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p.coords(i++) = c;
  return p;
}

Mat sphere_section(const RVector& x) {
  Eigen::Index n = x.size() - 1;
  if (n < 1) throw SpecError("sphere_section: need at least 2 coordinates");
  if (x.norm() == 0.0) throw SpecError("sphere_section: x = 0 is excluded");
  if (n == 1) {
    double r = std::hypot(x(0), x(1));
    RMatrix f(2, 2);
    f << x(0) / r, -x(1) / r, x(1) / r, x(0) / r;
    return Mat::real(f);
  }
  if (x(n - 1) == 0.0 && x(n) == 0.0) {
    // Degenerate set x_n = x_{n+1} = 0: recursive diag(f_{n-2}, 1, 1),
    // bottoming out at the explicit f_2 values on the axis.
    if (n == 2) {
      if (x(0) > 0.0) return Mat::identity(3);
      RMatrix f = RMatrix::Identity(3, 3);
      f(0, 0) = -1.0;
      f(1, 1) = -1.0;
      return Mat::real(f);
    }
    Mat sub = sphere_section(x.head(n - 1));
    RMatrix f = RMatrix::Identity(n + 1, n + 1);
    f.topLeftCorner(n - 1, n - 1) = sub.real_values();
    return Mat::real(f);
  }
  // r(k) = sqrt(sum_{i >= k} x_i^2); r(n-1) > 0 on this branch.
  RVector r(n + 1);
  double acc = 0.0;
  for (Eigen::Index k = n; k >= 0; --k) {
    acc += x(k) * x(k);
    r(k) = std::sqrt(acc);
  }
  RMatrix f = RMatrix::Zero(n + 1, n + 1);
  f.col(0) = x / r(0);
  for (Eigen::Index c = 1; c < n; ++c) {
    f(c - 1, c) = r(c) / r(c - 1);
    for (Eigen::Index i = c; i <= n; ++i)
      f(i, c) = -x(c - 1) * x(i) / (r(c - 1) * r(c));
  }
  // Last column carries the (-1)^n factor that makes det = +1.
  double s = (n % 2 == 0) ? 1.0 : -1.0;
  f(n - 1, n) = s * x(n) / r(n - 1);
  f(n, n) = -s * x(n - 1) / r(n - 1);
  return Mat::real(f);
}

Mat euclidean_section(const RVector& x) {
  Eigen::Index n = x.size();
  RMatrix f = RMatrix::Identity(n + 1, n + 1);
  f.block(0, n, n, 1) = x;
  return Mat::real(f);
}

Mat h2_section(Complex tau) {
  if (!(tau.imag() > 0.0))
    throw SpecError("h2_section: point must have positive imaginary part");
  double x = tau.real(), y = tau.imag();
  double sy = std::sqrt(y);
  RMatrix f(2, 2);
  f << sy, x / sy, 0.0, 1.0 / sy;
  return Mat::real(f);
}

Mat weyl_matrix(double t, double x, double y, double z) {
  CMatrix a(2, 2);
  a << Complex(t + z, 0.0), Complex(x, -y), Complex(x, y), Complex(t - z, 0.0);
  return Mat::complex(a);
}

Mat h3_section(double t, double x, double y, double z) {
  double q = -t * t + x * x + y * y + z * z;
  if (std::abs(q + 1.0) > 1e-9 || t < 1.0 - 1e-12)
    throw SpecError("h3_section: point not on the hyperboloid sheet t >= 1");
  double s = 1.0 / (std::sqrt(2.0) * std::sqrt(t + 1.0));
  CMatrix g(2, 2);
  g << Complex(t + 1.0 + z, 0.0), Complex(x, -y), Complex(x, y),
      Complex(t + 1.0 - z, 0.0);
  return Mat::complex(s * g);
}

Mat riemann_sphere_section(Complex z, bool at_infinity) {
  CMatrix f(2, 2);
  if (at_infinity) {
    f << 0.0, -1.0, 1.0, 0.0;
    return Mat::complex(f);
  }
  double s = 1.0 / std::sqrt(1.0 + std::norm(z));
  f << s, s * z, -s * std::conj(z), s;
  return Mat::complex(f);
}

Mat c2_section(Complex x, Complex y) {
  Complex r2 = x * x + y * y;
  if (std::abs(r2) < 1e-12)
    throw SpecError(
        "c2_section: point on the excluded complex cone x^2 + y^2 = 0");
  CMatrix f(2, 2);
  f << x, -y / r2, y, x / r2;
  return Mat::complex(f);
}

Mat so11_section(double t, double x) {
  double q = -t * t + x * x;
  if (q == 0.0)
    throw SpecError(
        "so11_section: point on the excluded light cone Q(t,x) = 0");
  RMatrix f(2, 2);
  if (q < 0.0) {
    double s = 1.0 / std::sqrt(-q);
    f << t * s, x * s, x * s, t * s;
  } else {
    double s = 1.0 / std::sqrt(q);
    f << x * s, t * s, t * s, x * s;
  }
  return Mat::real(f);
}

HomogeneousSpace sphere_space(int n) {
  if (n < 1) throw SpecError("sphere_space: n must be >= 1");
  HomogeneousSpace s;
  s.id = "sphere(" + std::to_string(n) + ")";
  s.group = so_group(n + 1);
  s.base_point.coords = RVector::Zero(n + 1);
  s.base_point.coords(0) = 1.0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      s.stabilizer_generators.push_back(Mat::real(rot_gen(n + 1, a, b)));
  s.section = [](const Point& p) { return sphere_section(p.coords); };
  s.apply = [](const Mat& g, const Point& p) {
    return Point{g.real_values() * p.coords, false};
  };
  s.normalize_point = [n](const Point& p) {
    if (p.coords.size() != n + 1)
      throw SpecError("sphere point needs " + std::to_string(n + 1) +
                      " coordinates");
    double r = p.coords.norm();
    if (std::abs(r - 1.0) > 1e-9)
      throw SpecError("point not on the unit sphere");
    return Point{p.coords / r, false};
  };
  s.sample_point = [n](Rng& rng) {
    std::normal_distribution<double> g;
    RVector x(n + 1);
    do {
      for (Eigen::Index i = 0; i <= n; ++i) x(i) = g(rng);
    } while (x.norm() < 1e-3);
    return Point{x / x.norm(), false};
  };
  if (n == 2) {
    s.stabilizer_haar = circle_chart(s.stabilizer_generators[0]);
  } else if (n == 3) {
    // Axis-2/axis-3 rotations inside the trailing so(3) block.
    s.stabilizer_haar = euler_so3_chart(Mat::real(rot_gen(4, 1, 2)),
                                        Mat::real(rot_gen(4, 1, 3)));
  }
  return s;
}

HomogeneousSpace euclidean_space(int n) {
  if (n < 1) throw SpecError("euclidean_space: n must be >= 1");
  HomogeneousSpace s;
  s.id = "euclidean(" + std::to_string(n) + ")";
  s.group = se_group(n);
  s.base_point.coords = RVector::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      s.stabilizer_generators.push_back(Mat::real(rot_gen(n + 1, a, b)));
  s.section = [](const Point& p) { return euclidean_section(p.coords); };
  s.apply = [n](const Mat& g, const Point& p) {
    RMatrix m = g.real_values();
    RVector out =
        m.topLeftCorner(n, n) * p.coords + m.block(0, n, n, 1).col(0);
    return Point{out, false};
  };
  s.normalize_point = [n](const Point& p) {
    if (p.coords.size() != n)
      throw SpecError("euclidean point needs " + std::to_string(n) +
                      " coordinates");
    return p;
  };
  s.sample_point = [n](Rng& rng) {
    std::normal_distribution<double> g(0.0, 2.0);
    RVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = g(rng);
    return Point{x, false};
  };
  if (n == 2) {
    s.stabilizer_haar = circle_chart(s.stabilizer_generators[0]);
  } else if (n == 3) {
    s.stabilizer_haar = euler_so3_chart(Mat::real(rot_gen(4, 0, 1)),
                                        Mat::real(rot_gen(4, 0, 2)));
  }
  return s;
}

HomogeneousSpace h2_space() {
  HomogeneousSpace s;
  s.id = "h2";
  s.group = sl2r_group();
  s.base_point = make_point({0.0, 1.0});  // tau = i
  RMatrix j(2, 2);
  j << 0, -1, 1, 0;
  s.stabilizer_generators = {Mat::real(j)};
  s.section = [](const Point& p) { return h2_section(point_as_complex(p)); };
  s.apply = [](const Mat& g, const Point& p) {
    const RMatrix m = g.real_values();
    Complex tau = point_as_complex(p);
    Complex out = (m(0, 0) * tau + m(0, 1)) / (m(1, 0) * tau + m(1, 1));
    return make_point({out.real(), out.imag()});
  };
  s.normalize_point = [](const Point& p) {
    if (p.coords.size() != 2) throw SpecError("h2 point needs (x, y)");
    if (!(p.coords(1) > 0.0))
      throw SpecError("h2 point must have positive imaginary part");
    return p;
  };
  s.sample_point = [](Rng& rng) {
    std::normal_distribution<double> g;
    return make_point({1.5 * g(rng), std::exp(0.7 * g(rng))});
  };
  s.stabilizer_haar = circle_chart(s.stabilizer_generators[0]);
  return s;
}

HomogeneousSpace h3_space() {
  HomogeneousSpace s;
  s.id = "h3";
  s.group = sl2c_group();
  s.projective = true;  // PSL(2,C); representations must be even
  s.base_point = make_point({1.0, 0.0, 0.0, 0.0});
  CMatrix u1(2, 2), u2(2, 2), u3(2, 2);
  u1 << kI, 0, 0, -kI;
  u2 << 0, 1, -1, 0;
  u3 << 0, kI, kI, 0;
  s.stabilizer_generators = {Mat::complex(u1), Mat::complex(u2),
                             Mat::complex(u3)};
  s.section = [](const Point& p) {
    return h3_section(p.coords(0), p.coords(1), p.coords(2), p.coords(3));
  };
  s.apply = [](const Mat& g, const Point& p) {
    Mat a = weyl_matrix(p.coords(0), p.coords(1), p.coords(2), p.coords(3));
    CMatrix b = g.values() * a.values() * g.values().adjoint();
    double t = 0.5 * (b(0, 0).real() + b(1, 1).real());
    double z = 0.5 * (b(0, 0).real() - b(1, 1).real());
    return make_point({t, b(1, 0).real(), b(1, 0).imag(), z});
  };
  s.normalize_point = [](const Point& p) {
    if (p.coords.size() != 4) throw SpecError("h3 point needs (t, x, y, z)");
    double t = p.coords(0);
    double t_true = std::sqrt(1.0 + p.coords.tail(3).squaredNorm());
    if (std::abs(t - t_true) > 1e-9 * std::max(1.0, std::abs(t)) || t < 0.0)
      throw SpecError("point not on the hyperboloid sheet t >= 1");
    Point out = p;
    out.coords(0) = t_true;
    return out;
  };
  s.sample_point = [](Rng& rng) {
    std::normal_distribution<double> g;
    double x = g(rng), y = g(rng), z = g(rng);
    return make_point({std::sqrt(1.0 + x * x + y * y + z * z), x, y, z});
  };
  s.stabilizer_haar =
      euler_so3_chart(Mat::complex(0.5 * u1), Mat::complex(0.5 * u2));
  return s;
}

HomogeneousSpace riemann_sphere_space() {
  HomogeneousSpace s;
  s.id = "riemann-sphere";
  s.group = su2_group();
  s.projective = true;  // PSU(2)
  s.base_point = make_point({0.0, 0.0});
  CMatrix u1(2, 2);
  u1 << kI, 0, 0, -kI;
  s.stabilizer_generators = {Mat::complex(u1)};
  s.section = [](const Point& p) {
    if (p.at_infinity) return riemann_sphere_section(0.0, true);
    return riemann_sphere_section(point_as_complex(p));
  };
  s.apply = [](const Mat& g, const Point& p) {
    const CMatrix& m = g.values();
    if (p.at_infinity) {
      if (std::abs(m(1, 0)) == 0.0) return Point{RVector(2), true};
      Complex out = m(0, 0) / m(1, 0);
      return make_point({out.real(), out.imag()});
    }
    Complex z = point_as_complex(p);
    Complex den = m(1, 0) * z + m(1, 1);
    if (std::abs(den) == 0.0) return Point{RVector(2), true};
    Complex out = (m(0, 0) * z + m(0, 1)) / den;
    return make_point({out.real(), out.imag()});
  };
  s.normalize_point = [](const Point& p) {
    if (p.at_infinity) return p;
    if (p.coords.size() != 2)
      throw SpecError("riemann-sphere point needs (Re Z, Im Z) or infinity");
    return p;
  };
  s.sample_point = [](Rng& rng) {
    std::normal_distribution<double> g;
    return make_point({g(rng), g(rng)});
  };
  s.stabilizer_haar = circle_chart(s.stabilizer_generators[0]);
  return s;
}

HomogeneousSpace c2_punctured_space() {
  HomogeneousSpace s;
  s.id = "c2-punctured";
  s.group = sl2c_group();
  s.base_point = make_point({1.0, 0.0, 0.0, 0.0});
  CMatrix e(2, 2);
  e << 0, 1, 0, 0;
  s.stabilizer_generators = {Mat::complex(e)};
  s.section = [](const Point& p) {
    return c2_section(Complex(p.coords(0), p.coords(1)),
                      Complex(p.coords(2), p.coords(3)));
  };
  s.apply = [](const Mat& g, const Point& p) {
    CVector v(2);
    v << Complex(p.coords(0), p.coords(1)), Complex(p.coords(2), p.coords(3));
    CVector out = g.values() * v;
    return make_point(
        {out(0).real(), out(0).imag(), out(1).real(), out(1).imag()});
  };
  s.normalize_point = [](const Point& p) {
    if (p.coords.size() != 4)
      throw SpecError("c2-punctured point needs (Re x, Im x, Re y, Im y)");
    Complex x(p.coords(0), p.coords(1)), y(p.coords(2), p.coords(3));
    if (std::abs(x * x + y * y) < 1e-12)
      throw SpecError("point on the excluded complex cone x^2 + y^2 = 0");
    return p;
  };
  s.sample_point = [](Rng& rng) {
    std::normal_distribution<double> g;
    while (true) {
      Complex x(g(rng), g(rng)), y(g(rng), g(rng));
      if (std::abs(x * x + y * y) > 0.3)
        return make_point({x.real(), x.imag(), y.real(), y.imag()});
    }
  };
  s.excluded_set = "complex cone x^2 + y^2 = 0";
  return s;
}

HomogeneousSpace so11_space() {
  HomogeneousSpace s;
  s.id = "so11";
  s.group = so11_group();
  s.base_point = make_point({1.0, 0.0});
  s.stabilizer_generators = {};  // trivial stabilizer on the branch
  s.section = [](const Point& p) {
    return so11_section(p.coords(0), p.coords(1));
  };
  s.apply = [](const Mat& g, const Point& p) {
    return Point{g.real_values() * p.coords, false};
  };
  s.normalize_point = [](const Point& p) {
    if (p.coords.size() != 2) throw SpecError("so11 point needs (t, x)");
    double q = -p.coords(0) * p.coords(0) + p.coords(1) * p.coords(1);
    if (q >= 0.0 || std::abs(std::sqrt(-q) - 1.0) > 1e-9 || p.coords(0) <= 0.0)
      throw SpecError(
          "point not on the unit upper hyperbola branch Q = -1, t > 0");
    return Point{p.coords / std::sqrt(-q), false};
  };
  s.sample_point = [](Rng& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double th = u(rng);
    return make_point({std::cosh(th), std::sinh(th)});
  };
  s.excluded_set = "light cone t^2 = x^2";
  s.stabilizer_haar = trivial_chart(2, Field::Real);
  return s;
}

std::vector<HomogeneousSpace> catalog() {
  return {sphere_space(2),  sphere_space(3), euclidean_space(2),
          euclidean_space(3), h2_space(),      h3_space(),
          riemann_sphere_space(), c2_punctured_space(), so11_space()};
}

HomogeneousSpace find_space(const std::string& id) {
  auto parse_dim = [](const std::string& s, const std::string& prefix,
                      int def) -> std::optional<int> {
    if (s == prefix) return def;
    if (s.rfind(prefix + "(", 0) == 0 && s.back() == ')') {
      std::string num = s.substr(prefix.size() + 1,
                                 s.size() - prefix.size() - 2);
      try {
        size_t used = 0;
        int n = std::stoi(num, &used);
        if (used == num.size()) return n;
      } catch (const std::exception&) {
      }
      throw SpecError("bad dimension in geometry id: " + s);
    }
    return std::nullopt;
  };
  if (auto n = parse_dim(id, "sphere", 2)) return sphere_space(*n);
  if (auto n = parse_dim(id, "euclidean", 2)) return euclidean_space(*n);
  if (id == "h2") return h2_space();
  if (id == "h3") return h3_space();
  if (id == "riemann-sphere") return riemann_sphere_space();
  if (id == "c2-punctured") return c2_punctured_space();
  if (id == "so11") return so11_space();
  throw SpecError("unknown geometry: " + id);
}

}  // namespace equimap
