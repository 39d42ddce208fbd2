#include "equimap/representation.hpp"

#include <cmath>

namespace equimap {

namespace {

void require_same_group(const Representation& a, const Representation& b,
                        const char* what) {
  if (!same_group(a.group, b.group))
    throw SpecError(std::string(what) + ": representations of different groups");
}

long long binomial(int n, int k) {
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

Representation trivial_rep(const LieGroupSpec& group) {
  Representation r;
  r.dim = 1;
  r.field = Field::Real;
  r.provenance = "trivial";
  r.group = group;
  r.group_eval = [](const Mat&) { return Mat::identity(1); };
  r.algebra_eval = [](const Mat&) { return Mat::zero(1, 1); };
  return r;
}

Representation defining_rep(const LieGroupSpec& group) {
  Representation r;
  r.dim = static_cast<int>(group.ambient_size);
  r.field = group.field;
  r.provenance = "defining";
  r.group = group;
  r.group_eval = [](const Mat& g) { return g; };
  r.algebra_eval = [](const Mat& a) { return a; };
  return r;
}

Representation dual_rep(const Representation& rep) {
  Representation r = rep;
  r.provenance = "dual";
  r.endomorphism_valued = false;
  r.group_eval = [ge = rep.group_eval](const Mat& g) {
    return ge(g).inverse().transpose();
  };
  r.algebra_eval = [ae = rep.algebra_eval](const Mat& a) {
    return -ae(a).transpose();
  };
  return r;
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  require_same_group(a, b, "tensor_rep");
  Representation r;
  r.dim = a.dim * b.dim;
  r.field = join(a.field, b.field);
  r.provenance = "tensor";
  r.group = a.group;
  r.group_eval = [ga = a.group_eval, gb = b.group_eval](const Mat& g) {
    return kron(ga(g), gb(g));
  };
  r.algebra_eval = [aa = a.algebra_eval, ab = b.algebra_eval, da = a.dim,
                    db = b.dim, f = r.field](const Mat& x) {
    return kron(aa(x), Mat::identity(db, f)) +
           kron(Mat::identity(da, f), ab(x));
  };
  return r;
}

Representation direct_sum_rep(const Representation& a,
                              const Representation& b) {
  require_same_group(a, b, "direct_sum_rep");
  Representation r;
  r.dim = a.dim + b.dim;
  r.field = join(a.field, b.field);
  r.provenance = "sum";
  r.group = a.group;
  auto block = [da = a.dim, db = b.dim, f = r.field](const Mat& x,
                                                     const Mat& y) {
    CMatrix m = CMatrix::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = x.values();
    m.bottomRightCorner(db, db) = y.values();
    return Mat(m, f);
  };
  r.group_eval = [ga = a.group_eval, gb = b.group_eval, block](const Mat& g) {
    return block(ga(g), gb(g));
  };
  r.algebra_eval = [aa = a.algebra_eval, ab = b.algebra_eval,
                    block](const Mat& x) { return block(aa(x), ab(x)); };
  return r;
}

Representation det_twist(const Representation& rep, int power) {
  Representation r = rep;
  r.provenance = "det_twist";
  r.field = join(rep.field, rep.group.field);
  r.group_eval = [ge = rep.group_eval, power](const Mat& g) {
    Mat m = ge(g);
    Complex s = int_pow(g.det(), power);
    Field f = s.imag() == 0.0 ? m.field() : Field::Complex;
    return Mat(m.values() * s, f);
  };
  r.algebra_eval = [ae = rep.algebra_eval, power, d = rep.dim](const Mat& a) {
    Mat m = ae(a);
    Complex s = static_cast<double>(power) * a.trace();
    Field f = s.imag() == 0.0 ? m.field() : Field::Complex;
    return Mat(m.values() + s * CMatrix::Identity(d, d), f);
  };
  return r;
}

Representation endo_conjugation_rep(const Representation& rep) {
  Representation r;
  int d = rep.dim;
  r.dim = d * d;
  r.field = rep.field;
  r.provenance = "endo_conj";
  r.group = rep.group;
  r.endomorphism_valued = true;
  r.endo_rows = d;
  r.endo_cols = d;
  r.group_eval = [ge = rep.group_eval](const Mat& g) {
    Mat x = ge(g);
    return kron(x.inverse().transpose(), x);
  };
  r.algebra_eval = [ae = rep.algebra_eval, d](const Mat& a) {
    Mat x = ae(a);
    Mat id = Mat::identity(d, x.field());
    return kron(id, x) - kron(x.transpose(), id);
  };
  return r;
}

Representation hom_rep_with_det_twist(const Representation& rep_in,
                                      const Representation& rep_out) {
  require_same_group(rep_in, rep_out, "hom_rep_with_det_twist");
  Representation r;
  r.dim = rep_in.dim * rep_out.dim;
  r.field = join(join(rep_in.field, rep_out.field), rep_in.group.field);
  r.provenance = "hom_det_twist";
  r.group = rep_in.group;
  r.endomorphism_valued = true;
  r.endo_rows = rep_out.dim;
  r.endo_cols = rep_in.dim;
  r.group_eval = [gi = rep_in.group_eval, go = rep_out.group_eval,
                  f = r.field](const Mat& g) {
    Mat m = kron(gi(g).inverse().transpose(), go(g));
    Complex s = 1.0 / g.det();
    return Mat(m.values() * s,
               s.imag() == 0.0 ? join(m.field(), Field::Real) : Field::Complex);
  };
  r.algebra_eval = [ai = rep_in.algebra_eval, ao = rep_out.algebra_eval,
                    di = rep_in.dim, dout = rep_out.dim](const Mat& a) {
    Mat xi = ai(a), xo = ao(a);
    Field f = join(xi.field(), xo.field());
    Mat m = kron(Mat::identity(di, f), xo) -
            kron(xi.transpose(), Mat::identity(dout, f));
    Complex s = a.trace();
    f = s.imag() == 0.0 ? f : Field::Complex;
    return Mat(m.values() - s * CMatrix::Identity(m.rows(), m.rows()), f);
  };
  return r;
}

Representation polynomial_rep_2x2(const LieGroupSpec& group, int n) {
  if (group.ambient_size != 2)
    throw SpecError("polynomial_rep_2x2 requires a 2x2 matrix group");
  if (n < 0) throw SpecError("polynomial_rep_2x2: n must be >= 0");
  Representation r;
  r.dim = n + 1;
  r.field = group.field;
  r.provenance = "su2_poly(" + std::to_string(n) + ")";
  r.group = group;

  // Substitution by A: basis monomial x^(n-k) y^k maps to
  // (A00 x + A01 y)^(n-k) (A10 x + A11 y)^k, expanded in the same basis.
  auto substitution = [n](const CMatrix& A) {
    CMatrix out = CMatrix::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i <= n - k; ++i) {
        for (int j = 0; j <= k; ++j) {
          Complex c = static_cast<double>(binomial(n - k, i)) *
                      static_cast<double>(binomial(k, j)) *
                      int_pow(A(0, 0), n - k - i) * int_pow(A(0, 1), i) *
                      int_pow(A(1, 0), k - j) * int_pow(A(1, 1), j);
          out(i + j, k) += c;
        }
      }
    }
    return out;
  };

  r.group_eval = [substitution, f = r.field](const Mat& g) {
    return Mat(substitution(g.inverse().values()), f);
  };
  r.algebra_eval = [n, f = r.field](const Mat& a) {
    const CMatrix& A = a.values();
    CMatrix out = CMatrix::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
      double alpha = n - k, beta = k;
      out(k, k) -= alpha * A(0, 0) + beta * A(1, 1);
      if (k + 1 <= n) out(k + 1, k) -= alpha * A(0, 1);
      if (k - 1 >= 0) out(k - 1, k) -= beta * A(1, 0);
    }
    return Mat(out, f);
  };
  return r;
}

Representation su2_polynomial_rep(int n) {
  return polynomial_rep_2x2(su2_group(), n);
}

CMatrix su2_lift(const RMatrix& rot) {
  // Quaternion extraction, Shepperd branching on the largest component.
  double t = rot.trace();
  double w, x, y, z;
  if (t > 0.0) {
    double s = std::sqrt(t + 1.0) * 2.0;
    w = 0.25 * s;
    x = (rot(2, 1) - rot(1, 2)) / s;
    y = (rot(0, 2) - rot(2, 0)) / s;
    z = (rot(1, 0) - rot(0, 1)) / s;
  } else if (rot(0, 0) > rot(1, 1) && rot(0, 0) > rot(2, 2)) {
    double s = std::sqrt(1.0 + rot(0, 0) - rot(1, 1) - rot(2, 2)) * 2.0;
    w = (rot(2, 1) - rot(1, 2)) / s;
    x = 0.25 * s;
    y = (rot(0, 1) + rot(1, 0)) / s;
    z = (rot(0, 2) + rot(2, 0)) / s;
  } else if (rot(1, 1) > rot(2, 2)) {
    double s = std::sqrt(1.0 + rot(1, 1) - rot(0, 0) - rot(2, 2)) * 2.0;
    w = (rot(0, 2) - rot(2, 0)) / s;
    x = (rot(0, 1) + rot(1, 0)) / s;
    y = 0.25 * s;
    z = (rot(1, 2) + rot(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + rot(2, 2) - rot(0, 0) - rot(1, 1)) * 2.0;
    w = (rot(1, 0) - rot(0, 1)) / s;
    x = (rot(0, 2) + rot(2, 0)) / s;
    y = (rot(1, 2) + rot(2, 1)) / s;
    z = 0.25 * s;
  }
  // g = w Id - i (x sx + y sy + z sz)
  CMatrix g(2, 2);
  g << Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z);
  return g;
}

Representation so3_polynomial_rep(int n) {
  if (n < 0 || n % 2 != 0)
    throw SpecError("so3_polynomial_rep: n must be even and >= 0");
  Representation base = su2_polynomial_rep(n);
  Representation r;
  r.dim = n + 1;
  r.field = Field::Complex;
  r.provenance = "so3_poly(" + std::to_string(n) + ")";
  r.group = so_group(3);
  r.group_eval = [ge = base.group_eval](const Mat& g) {
    return ge(Mat::complex(su2_lift(g.real_values())));
  };
  r.algebra_eval = [ae = base.algebra_eval](const Mat& a) {
    const CMatrix& L = a.values();
    // so(3) -> su(2): coefficients about the three axes.
    Complex cx = L(2, 1), cy = L(0, 2), cz = L(1, 0);
    CMatrix X(2, 2);
    const Complex i(0.0, 1.0);
    X << -0.5 * i * cz, -0.5 * i * cx - 0.5 * cy,
        -0.5 * i * cx + 0.5 * cy, 0.5 * i * cz;
    return ae(Mat::complex(X));
  };
  return r;
}

CMatrix blockify(const CMatrix& c) {
  CMatrix out = CMatrix::Zero(2 * c.rows(), 2 * c.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      double a = c(i, j).real(), b = c(i, j).imag();
      out(2 * i, 2 * j) = a;
      out(2 * i, 2 * j + 1) = b;
      out(2 * i + 1, 2 * j) = -b;
      out(2 * i + 1, 2 * j + 1) = a;
    }
  }
  return out;
}

Representation realify(const Representation& rep) {
  if (rep.field != Field::Complex)
    throw SpecError("realify requires a complex representation");
  Representation r;
  r.dim = 2 * rep.dim;
  r.field = Field::Real;
  r.provenance = "realified";
  r.group = rep.group;
  r.group_eval = [ge = rep.group_eval](const Mat& g) {
    return Mat(blockify(ge(g).values()), Field::Real);
  };
  r.algebra_eval = [ae = rep.algebra_eval](const Mat& a) {
    return Mat(blockify(ae(a).values()), Field::Real);
  };
  return r;
}

}  // namespace equimap
