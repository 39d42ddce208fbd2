#include "equimap/haar.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace equimap {

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum = hi - lo
};

// Golub-Welsch: Gauss-Legendre nodes/weights on [lo, hi].
Rule gauss_legendre(int n, double lo, double hi) {
  RMatrix jacobi = RMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> es(jacobi);
  Rule r;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(mid + half * es.eigenvalues()(i));
    double v0 = es.eigenvectors()(0, i);
    r.weights.push_back(2.0 * v0 * v0 * half);
  }
  return r;
}

Rule rectangle(int n, double lo, double hi) {
  Rule r;
  double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(lo + (i + 0.5) * h);
    r.weights.push_back(h);
  }
  return r;
}

}  // namespace

HaarChart trivial_chart(Eigen::Index ambient, Field field) {
  HaarChart c;
  c.axes = {HaarAxis{0.0, 1.0, true}};
  c.element = [ambient, field](const std::vector<double>&) {
    return Mat::identity(ambient, field);
  };
  c.weight = [](const std::vector<double>&) { return 1.0; };
  return c;
}

HaarChart circle_chart(const Mat& generator) {
  HaarChart c;
  c.axes = {HaarAxis{0.0, 2.0 * std::numbers::pi, true}};
  c.element = [generator](const std::vector<double>& t) {
    return expm(generator * t[0]);
  };
  c.weight = [](const std::vector<double>&) {
    return 1.0 / (2.0 * std::numbers::pi);
  };
  return c;
}

HaarChart euler_so3_chart(const Mat& gen_z, const Mat& gen_y) {
  const double pi = std::numbers::pi;
  HaarChart c;
  c.axes = {HaarAxis{0.0, 2.0 * pi, true}, HaarAxis{0.0, pi, false},
            HaarAxis{0.0, 2.0 * pi, true}};
  c.element = [gen_z, gen_y](const std::vector<double>& t) {
    return expm(gen_z * t[0]) * expm(gen_y * t[1]) * expm(gen_z * t[2]);
  };
  c.weight = [pi](const std::vector<double>& t) {
    return std::sin(t[1]) / (8.0 * pi * pi);
  };
  return c;
}

int haar_projector_rank(const Representation& rep, const HaarChart& chart,
                        int points_per_axis, double tol) {
  if (points_per_axis < 8)
    throw SpecError("haar_projector_rank: need >= 8 points per axis");
  if (chart.axes.empty()) throw SpecError("haar_projector_rank: empty chart");

  std::vector<Rule> rules;
  for (const HaarAxis& ax : chart.axes)
    rules.push_back(ax.periodic ? rectangle(points_per_axis, ax.lo, ax.hi)
                                : gauss_legendre(points_per_axis, ax.lo, ax.hi));

  CMatrix p = CMatrix::Zero(rep.dim, rep.dim);
  size_t ndim = chart.axes.size();
  std::vector<size_t> idx(ndim, 0);
  std::vector<double> theta(ndim);
  while (true) {
    double w = 1.0;
    for (size_t d = 0; d < ndim; ++d) {
      theta[d] = rules[d].nodes[idx[d]];
      w *= rules[d].weights[idx[d]];
    }
    w *= chart.weight(theta);
    if (w != 0.0) p += w * rep.group_eval(chart.element(theta)).values();
    size_t d = 0;
    for (; d < ndim; ++d) {
      if (++idx[d] < rules[d].nodes.size()) break;
      idx[d] = 0;
    }
    if (d == ndim) break;
  }

  double defect = (p * p - p).norm();
  if (defect > 10.0 * tol)
    throw NumericalError(
        "haar_projector_rank: average not idempotent (||P^2-P|| = " +
        std::to_string(defect) + "); bad parametrization or too few points");

  // Idempotency makes the spectrum bimodal near {0,1}, so the threshold is
  // uncritical; tol is the spec'd cut.
  Eigen::JacobiSVD<CMatrix> svd(p);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return rank;
}

}  // namespace equimap
