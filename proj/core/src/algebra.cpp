#include "equimap/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace equimap {

namespace {

RMatrix real_nullspace(const RMatrix& a, double tol) {
  Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * smax) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

Eigen::Index svd_rank(const RMatrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<RMatrix> svd(a);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(smax, 1.0)) ++rank;
  return rank;
}

// Real embedding of a complex matrix as a flat vector (Re block, Im block).
RVector embed(const CMatrix& m) {
  Eigen::Index n = m.size();
  RVector out(2 * n);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out(j * m.rows() + i) = m(i, j).real();
      out(n + j * m.rows() + i) = m(i, j).imag();
    }
  }
  return out;
}

CMatrix unembed(const RVector& v, Eigen::Index rows, Eigen::Index cols) {
  Eigen::Index n = rows * cols;
  CMatrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      out(i, j) = Complex(v(j * rows + i), v(n + j * rows + i));
  return out;
}

}  // namespace

BilinearProduct matrix_product_on_vec(Eigen::Index rows) {
  return [rows](const CVector& a, const CVector& b) {
    return vec(unvec(a, rows, rows) * unvec(b, rows, rows));
  };
}

StructureConstants structure_constants(const Mat& vectors,
                                       const BilinearProduct& product,
                                       double tol) {
  Eigen::Index m = vectors.cols();
  if (m == 0) throw SpecError("structure_constants: empty basis");
  const CMatrix& b = vectors.values();
  Eigen::ColPivHouseholderQR<CMatrix> qr(b);
  if (qr.rank() < m)
    throw SpecError("structure_constants: vectors not linearly independent");
  StructureConstants out;
  out.dim = static_cast<int>(m);
  out.c.assign(m, std::vector<CVector>(m));
  double scale = b.norm();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      CVector p = product(b.col(i), b.col(j));
      CVector coeff = qr.solve(p);
      out.c[i][j] = coeff;
      out.residual = std::max(out.residual, (b * coeff - p).norm());
    }
  }
  if (out.residual > tol * std::max(1.0, scale * scale))
    throw NumericalError(
        "structure_constants: products leave the span (residual " +
        std::to_string(out.residual) + "); not an H-stable subalgebra");
  return out;
}

double pointwise_structure_match(const EquivariantBasis& basis,
                                 const BilinearProduct& product,
                                 const Point& x, double tol, uint64_t seed) {
  // The transported product is only defined when the group acts by algebra
  // automorphisms; sample the defect before trusting structure constants.
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::Index dim = basis.rep.dim;
  for (int s = 0; s < 8; ++s) {
    Mat g = random_group_element(basis.space.group, rng);
    CMatrix rho = basis.rep.group_eval(g).values();
    CVector u(dim), v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      u(i) = Complex(gauss(rng), gauss(rng));
      v(i) = Complex(gauss(rng), gauss(rng));
    }
    CVector lhs = rho * product(u, v);
    CVector rhs = product(rho * u, rho * v);
    if ((lhs - rhs).norm() > 1e-7 * (1.0 + lhs.norm()))
      throw NumericalError(
          "pointwise_structure_match: group does not act by algebra "
          "automorphisms");
  }

  StructureConstants ref = structure_constants(basis.invariant_vectors,
                                               product, tol);
  Eigen::Index m = basis.invariant_vectors.cols();
  CMatrix evaluated(dim, m);
  for (Eigen::Index i = 0; i < m; ++i)
    evaluated.col(i) = evaluate_vector(basis, x, static_cast<int>(i));
  StructureConstants at_x = structure_constants(
      Mat(evaluated, basis.rep.field), product, std::max(tol, 1e-8) * 100);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      worst = std::max(worst,
                       (ref.c[i][j] - at_x.c[i][j]).cwiseAbs().maxCoeff());
  return worst;
}

NilpotentCertificate cyclic_nilpotent_certificate(const Mat& e_image, int n,
                                                  double tol) {
  if (!e_image.is_square())
    throw SpecError("cyclic_nilpotent_certificate: matrix must be square");
  NilpotentCertificate out;
  Eigen::Index d = e_image.rows();
  CMatrix acc = CMatrix::Identity(d, d);
  CMatrix powers(d * d, n + 1);
  for (int k = 0; k <= n + 1; ++k) {
    if (k <= n) powers.col(k) = vec(acc);
    acc = acc * e_image.values();
    if (k + 1 <= n + 1) out.power_norms.push_back(acc.norm());
  }
  double scale = std::max(1.0, std::pow(e_image.norm(), n + 1));
  bool nilpotent = out.power_norms.back() <= tol * scale;
  Eigen::JacobiSVD<CMatrix> svd(powers);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * std::max(1.0, svd.singularValues()(0)))
      ++rank;
  out.independent_rank = static_cast<int>(rank);
  out.pass = nilpotent && rank == n + 1;
  return out;
}

const char* division_type_name(DivisionType t) {
  switch (t) {
    case DivisionType::R: return "R";
    case DivisionType::C: return "C";
    default: return "H";
  }
}

namespace {

struct RegularAlgebra {
  Eigen::Index k = 0;
  RMatrix basis_flat;           // N^2 x k, columns vec(b_i), real
  std::vector<RMatrix> left;    // L_i, k x k
  std::vector<RMatrix> right;   // R_i
  RVector unit;                 // coefficients of Id
  Eigen::Index ambient = 0;

  RMatrix left_of(const RVector& coeff) const {
    RMatrix out = RMatrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) out += coeff(i) * left[i];
    return out;
  }
  RVector mult(const RVector& a, const RVector& b) const {
    return left_of(a) * b;
  }
  Mat element(const RVector& coeff) const {
    RVector flat = basis_flat * coeff;
    return Mat::real(Eigen::Map<const RMatrix>(flat.data(), ambient, ambient));
  }
};

RegularAlgebra regular_algebra(const std::vector<Mat>& basis, double tol) {
  if (basis.empty()) throw SpecError("classify_commutant: empty basis");
  RegularAlgebra alg;
  alg.k = static_cast<Eigen::Index>(basis.size());
  alg.ambient = basis[0].rows();
  alg.basis_flat.resize(alg.ambient * alg.ambient, alg.k);
  for (Eigen::Index i = 0; i < alg.k; ++i) {
    if (basis[i].field() != Field::Real)
      throw SpecError("classify_commutant: basis must be real matrices");
    if (basis[i].rows() != alg.ambient || !basis[i].is_square())
      throw SpecError("classify_commutant: basis shapes differ");
    RMatrix b = basis[i].real_values();
    alg.basis_flat.col(i) = Eigen::Map<const RVector>(b.data(), b.size());
  }
  Eigen::ColPivHouseholderQR<RMatrix> qr(alg.basis_flat);
  if (qr.rank() < alg.k)
    throw SpecError("classify_commutant: basis not linearly independent");

  double scale = alg.basis_flat.norm();
  alg.left.assign(alg.k, RMatrix::Zero(alg.k, alg.k));
  alg.right.assign(alg.k, RMatrix::Zero(alg.k, alg.k));
  for (Eigen::Index i = 0; i < alg.k; ++i) {
    for (Eigen::Index j = 0; j < alg.k; ++j) {
      RMatrix prod = basis[i].real_values() * basis[j].real_values();
      RVector flat = Eigen::Map<const RVector>(prod.data(), prod.size());
      RVector coeff = qr.solve(flat);
      if ((alg.basis_flat * coeff - flat).norm() >
          tol * std::max(1.0, scale * scale))
        throw NumericalError(
            "classify_commutant: input is not closed under the product");
      alg.left[i].col(j) = coeff;
      alg.right[j].col(i) = coeff;
    }
  }
  RMatrix id = RMatrix::Identity(alg.ambient, alg.ambient);
  RVector idflat = Eigen::Map<const RVector>(id.data(), id.size());
  alg.unit = qr.solve(idflat);
  if ((alg.basis_flat * alg.unit - idflat).norm() > tol * std::sqrt(scale))
    throw NumericalError("classify_commutant: input algebra is not unital");
  return alg;
}

}  // namespace

ClassificationReport classify_commutant(const std::vector<Mat>& algebra_basis,
                                        double tol, uint64_t seed) {
  RegularAlgebra alg = regular_algebra(algebra_basis, tol);
  Eigen::Index k = alg.k;

  // Semisimplicity: the trace form of the regular representation is
  // nondegenerate iff the radical vanishes (char 0).
  RMatrix gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j)
      gram(i, j) = gram(j, i) = (alg.left[i] * alg.left[j]).trace();
  {
    Eigen::JacobiSVD<RMatrix> svd(gram);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-8 * std::max(1.0, sv(0)))
      throw NumericalError(
          "classify_commutant: radical detected (degenerate trace form); "
          "the decomposition needs a semisimple algebra, i.e. a compact "
          "stabilizer");
  }

  // Center: joint kernel of left-minus-right multiplications.
  RMatrix comm(k * k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    RMatrix d = alg.left[i] - alg.right[i];
    comm.col(i) = Eigen::Map<const RVector>(d.data(), d.size());
  }
  // comm as built maps coefficients x to vec(sum x_i (L_i - R_i)); its
  // nullspace is exactly the center since L/R are faithful on a unital
  // algebra.
  RMatrix center = real_nullspace(comm, 1e-9);
  Eigen::Index zdim = center.cols();

  Rng rng(seed);
  std::normal_distribution<double> gauss;
  std::string last_failure = "no attempt";
  for (int attempt = 0; attempt < 5; ++attempt) {
    RVector zc(zdim);
    for (Eigen::Index i = 0; i < zdim; ++i) zc(i) = gauss(rng);
    RVector z = center * zc;
    z /= z.norm();
    RMatrix lz = alg.left_of(z);
    Eigen::EigenSolver<RMatrix> es(lz);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver failed";
      continue;
    }
    Eigen::VectorXcd evs = es.eigenvalues();
    double scale = evs.cwiseAbs().maxCoeff();
    double gap = 1e-6 * std::max(1.0, scale);

    // Cluster eigenvalues; conjugate pairs end up in one cluster.
    std::vector<std::vector<Eigen::Index>> clusters;
    std::vector<Complex> reps;
    bool ok = true;
    for (Eigen::Index i = 0; i < evs.size(); ++i) {
      Complex v = evs(i);
      Complex key(v.real(), std::abs(v.imag()));
      bool found = false;
      for (size_t c = 0; c < reps.size(); ++c) {
        if (std::abs(key - reps[c]) < gap) {
          clusters[c].push_back(i);
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(key);
        clusters.push_back({i});
      }
    }
    for (size_t a = 0; a < reps.size() && ok; ++a)
      for (size_t b = a + 1; b < reps.size(); ++b)
        if (std::abs(reps[a] - reps[b]) < 10.0 * gap) {
          ok = false;
          break;
        }
    if (!ok) {
      last_failure = "eigenvalue clusters of the central element too close";
      continue;
    }

    CMatrix v = es.eigenvectors();
    Eigen::PartialPivLU<CMatrix> vlu(v);
    ClassificationReport report;
    Eigen::Index covered = 0;
    bool blocks_ok = true;
    for (size_t c = 0; c < clusters.size() && blocks_ok; ++c) {
      CMatrix sel = CMatrix::Zero(k, k);
      for (Eigen::Index idx : clusters[c]) sel(idx, idx) = 1.0;
      RMatrix proj = (v * sel * vlu.inverse()).real();
      RMatrix block_rows_c = proj.transpose();
      CMatrix rows = canonical_orthonormal(
          block_rows_c.cast<Complex>(), 1e-9);
      RMatrix w = rows.real();  // d_s x k, orthonormal rows
      Eigen::Index ds = w.rows();
      covered += ds;
      RVector e = proj * alg.unit;

      // Center intersected with the block.
      Eigen::Index center_dim = svd_rank(proj * center, 1e-7);

      AlgebraBlock block;
      auto block_residual = [&](const RVector& a, const RVector& b,
                                double sign) {
        return (alg.mult(a, b) + sign * e).norm();
      };
      if (center_dim == 2) {
        block.type = DivisionType::C;
        double croot = std::sqrt(ds / 2.0);
        block.multiplicity = static_cast<int>(std::lround(croot));
        if (2 * block.multiplicity * block.multiplicity != ds) {
          blocks_ok = false;
          last_failure = "complex block dimension is not 2c^2";
          continue;
        }
        // Central square root of -e by completing the square.
        RMatrix zc_block = proj * center;
        RVector wv;
        for (Eigen::Index col = 0; col < zc_block.cols(); ++col) {
          RVector cand = zc_block.col(col);
          cand -= cand.dot(e) / e.squaredNorm() * e;
          if (cand.norm() > 1e-6) {
            wv = cand / cand.norm();
            break;
          }
        }
        RVector w2 = alg.mult(wv, wv);
        // w^2 = mu e + nu w
        RMatrix basis2(k, 2);
        basis2.col(0) = e;
        basis2.col(1) = wv;
        Eigen::Vector2d mn =
            basis2.colPivHouseholderQr().solve(w2);
        RVector j0 = wv - 0.5 * mn(1) * e;
        double lambda = 0.25 * mn(1) * mn(1) - mn(0);
        if (lambda <= 0.0) {
          blocks_ok = false;
          last_failure = "central element square not negative definite";
          continue;
        }
        RVector jv = j0 / std::sqrt(lambda);
        block.witnesses = {alg.element(e), alg.element(jv)};
        block.residual = block_residual(jv, jv, 1.0);
      } else if (center_dim == 1) {
        // Signature of the regular trace form restricted to the block:
        // positive for gl(r,R), negative for gl(h,H).
        RMatrix gs(ds, ds);
        std::vector<RMatrix> lw(ds);
        for (Eigen::Index a = 0; a < ds; ++a)
          lw[a] = alg.left_of(w.row(a).transpose());
        for (Eigen::Index a = 0; a < ds; ++a)
          for (Eigen::Index b = a; b < ds; ++b)
            gs(a, b) = gs(b, a) = (lw[a] * lw[b]).trace();
        Eigen::SelfAdjointEigenSolver<RMatrix> ges(gs);
        int pos = 0, neg = 0;
        double gmax = ges.eigenvalues().cwiseAbs().maxCoeff();
        for (Eigen::Index a = 0; a < ds; ++a) {
          if (ges.eigenvalues()(a) > 1e-8 * gmax) ++pos;
          if (ges.eigenvalues()(a) < -1e-8 * gmax) ++neg;
        }
        if (pos > neg) {
          block.type = DivisionType::R;
          double r = std::sqrt(static_cast<double>(ds));
          block.multiplicity = static_cast<int>(std::lround(r));
          if (block.multiplicity * block.multiplicity != ds) {
            blocks_ok = false;
            last_failure = "real block dimension is not r^2";
            continue;
          }
          block.witnesses = {alg.element(e)};
          block.residual = (alg.mult(e, e) - e).norm();
        } else {
          block.type = DivisionType::H;
          double h = std::sqrt(ds / 4.0);
          block.multiplicity = static_cast<int>(std::lround(h));
          if (4 * block.multiplicity * block.multiplicity != ds) {
            blocks_ok = false;
            last_failure = "quaternionic block dimension is not 4h^2";
            continue;
          }
          // Square root of -e by the inverse-Newton iteration, within the
          // block.
          RMatrix wt = w.transpose();
          auto block_inverse = [&](const RVector& a) {
            RMatrix lb = w * alg.left_of(a) * wt;
            Eigen::Vector<double, Eigen::Dynamic> ecoord = w * e;
            RVector y = lb.colPivHouseholderQr().solve(ecoord);
            return RVector(wt * y);
          };
          RVector iv;
          bool have_i = false;
          for (int tries = 0; tries < 8 && !have_i; ++tries) {
            RVector a = RVector::Zero(k);
            for (Eigen::Index idx = 0; idx < ds; ++idx)
              a += gauss(rng) * wt.col(idx);
            a /= a.norm();
            for (int it = 0; it < 80; ++it) {
              a = 0.5 * (a - block_inverse(a));
              double defect = (alg.mult(a, a) + e).norm();
              if (defect < 1e-12) break;
              if (!a.allFinite() || a.norm() > 1e8) break;
            }
            if (a.allFinite() && (alg.mult(a, a) + e).norm() < 1e-9) {
              iv = a;
              have_i = true;
            }
          }
          if (!have_i) {
            blocks_ok = false;
            last_failure = "no square root of -1 found in H block";
            continue;
          }
          RVector jv;
          bool have_j = false;
          for (int tries = 0; tries < 8 && !have_j; ++tries) {
            RVector b = RVector::Zero(k);
            for (Eigen::Index idx = 0; idx < ds; ++idx)
              b += gauss(rng) * wt.col(idx);
            RVector anti = 0.5 * (b + alg.mult(alg.mult(iv, b), iv));
            if (anti.norm() < 1e-8) continue;
            RVector a2 = alg.mult(anti, anti);
            double lambda = a2.dot(e) / e.squaredNorm();
            if (lambda >= -1e-10 || (a2 - lambda * e).norm() > 1e-6) continue;
            jv = anti / std::sqrt(-lambda);
            have_j = true;
          }
          if (!have_j) {
            blocks_ok = false;
            last_failure = "no anticommuting unit found in H block";
            continue;
          }
          block.witnesses = {alg.element(e), alg.element(iv),
                             alg.element(jv)};
          block.residual = std::max(
              {block_residual(iv, iv, 1.0), block_residual(jv, jv, 1.0),
               (alg.mult(iv, jv) + alg.mult(jv, iv)).norm()});
        }
      } else {
        blocks_ok = false;
        last_failure = "block center dimension " + std::to_string(center_dim);
        continue;
      }
      report.residual = std::max(report.residual, block.residual);
      report.blocks.push_back(std::move(block));
    }
    if (!blocks_ok) continue;
    if (covered != k)
      throw NumericalError(
          "classify_commutant: block dimensions do not sum to the algebra "
          "dimension");
    std::sort(report.blocks.begin(), report.blocks.end(),
              [](const AlgebraBlock& a, const AlgebraBlock& b) {
                if (a.type != b.type) return a.type < b.type;
                return a.multiplicity > b.multiplicity;
              });
    return report;
  }
  throw NumericalError("classify_commutant: failed after 5 seeds (" +
                       last_failure + ")");
}

std::vector<Mat> invariant_vector_fields(const std::vector<Mat>& g_gens,
                                         const std::vector<Mat>& h_gens,
                                         double tol) {
  if (g_gens.empty()) throw SpecError("invariant_vector_fields: empty g");
  Eigen::Index n = g_gens[0].rows();
  auto bracket = [](const Mat& a, const Mat& b) { return a * b - b * a; };
  Field f = g_gens[0].field();
  for (const Mat& h : h_gens) f = join(f, h.field());

  Eigen::Index flat = 2 * n * n;
  auto embed_mat = [&](const Mat& m) { return embed(m.values()); };

  RMatrix hspan(flat, static_cast<Eigen::Index>(h_gens.size()));
  for (size_t j = 0; j < h_gens.size(); ++j) hspan.col(j) = embed_mat(h_gens[j]);
  RMatrix hq;  // orthonormal columns spanning h
  if (!h_gens.empty()) {
    Eigen::HouseholderQR<RMatrix> qr(hspan);
    RMatrix q = qr.householderQ() * RMatrix::Identity(flat, hspan.cols());
    Eigen::Index rank = svd_rank(hspan, 1e-10);
    hq = q.leftCols(rank);
  }
  auto off_h = [&](const RVector& v) -> RVector {
    if (hq.cols() == 0) return v;
    return v - hq * (hq.transpose() * v);
  };

  // h must be a subalgebra.
  for (size_t a = 0; a < h_gens.size(); ++a) {
    for (size_t b = a + 1; b < h_gens.size(); ++b) {
      Mat br = bracket(h_gens[a], h_gens[b]);
      if (off_h(embed_mat(br)).norm() > tol * std::max(1.0, br.norm()))
        throw SpecError(
            "invariant_vector_fields: h generators do not close under "
            "brackets");
    }
  }

  Eigen::Index gn = static_cast<Eigen::Index>(g_gens.size());
  RMatrix solutions;
  if (h_gens.empty()) {
    solutions = RMatrix::Identity(gn, gn);
  } else {
    RMatrix sys(flat * static_cast<Eigen::Index>(h_gens.size()), gn);
    for (size_t j = 0; j < h_gens.size(); ++j)
      for (Eigen::Index i = 0; i < gn; ++i)
        sys.block(flat * static_cast<Eigen::Index>(j), i, flat, 1) =
            off_h(embed_mat(bracket(g_gens[i], h_gens[j])));
    solutions = real_nullspace(sys, 1e-10);
  }

  // Map coefficient solutions to matrices and drop the span(h) component.
  RMatrix gspan(flat, gn);
  for (Eigen::Index i = 0; i < gn; ++i) gspan.col(i) = embed_mat(g_gens[i]);
  RMatrix sols_flat = gspan * solutions;
  RMatrix complement(flat, sols_flat.cols());
  for (Eigen::Index i = 0; i < sols_flat.cols(); ++i)
    complement.col(i) = off_h(sols_flat.col(i));
  CMatrix rows = canonical_orthonormal(
      CMatrix(complement.transpose().cast<Complex>()), 1e-9);

  std::vector<Mat> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    RVector v = rows.row(i).real().transpose();
    out.push_back(Mat(unembed(v, n, n), f));
  }
  return out;
}

}  // namespace equimap
