#include "equimap/jobspec.hpp"

#include <cctype>
#include <cstdio>
#include <thread>

#include <json.hpp>

namespace equimap {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic serialization: every double printed with %.17g so output is
// byte-identical across runs and re-parses to the same bits.

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string dump_document(const Json& j) {
  std::string out;
  dump(j, out);
  out += '\n';
  return out;
}

Json scalar_json(Complex z, Field f) {
  if (f == Field::Real) return Json(z.real());
  return Json::array({z.real(), z.imag()});
}

Json vector_json(const CVector& v, Field f) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(scalar_json(v(i), f));
  return arr;
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(scalar_json(m.values()(i, j), m.field()));
    rows.push_back(row);
  }
  return rows;
}

Json point_json(const Point& p) {
  if (p.at_infinity) return Json("inf");
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) arr.push_back(p.coords(i));
  return arr;
}

// ---------------------------------------------------------------------------
// Rep-expression mini-language.

struct Node {
  std::string name;
  std::vector<Node> children;
  bool is_int = false;
  int int_value = 0;
};

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Node parse_expr() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || std::isdigit(static_cast<unsigned char>(text[pos])))) {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      Node n;
      n.is_int = true;
      n.int_value = std::stoi(text.substr(start, pos - start));
      return n;
    }
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) throw SpecError("rep expression: unexpected character");
    Node n;
    n.name = text.substr(start, pos - start);
    if (eat('(')) {
      if (!eat(')')) {
        do {
          n.children.push_back(parse_expr());
        } while (eat(','));
        if (!eat(')')) throw SpecError("rep expression: expected ')'");
      }
    }
    return n;
  }
};

Representation build_rep(const Node& n, const LieGroupSpec& group) {
  auto arity = [&](size_t k) {
    if (n.children.size() != k)
      throw SpecError("rep expression: '" + n.name + "' takes " +
                      std::to_string(k) + " argument(s)");
  };
  auto child_rep = [&](size_t i) { return build_rep(n.children[i], group); };
  auto child_int = [&](size_t i) {
    if (!n.children[i].is_int)
      throw SpecError("rep expression: '" + n.name +
                      "' needs an integer argument");
    return n.children[i].int_value;
  };
  if (n.is_int) throw SpecError("rep expression: integer where a rep expected");
  if (n.name == "trivial") { arity(0); return trivial_rep(group); }
  if (n.name == "defining") { arity(0); return defining_rep(group); }
  if (n.name == "dual") { arity(1); return dual_rep(child_rep(0)); }
  if (n.name == "tensor") { arity(2); return tensor_rep(child_rep(0), child_rep(1)); }
  if (n.name == "sum") { arity(2); return direct_sum_rep(child_rep(0), child_rep(1)); }
  if (n.name == "det_twist") { arity(2); return det_twist(child_rep(0), child_int(1)); }
  if (n.name == "endo_conj") { arity(1); return endo_conjugation_rep(child_rep(0)); }
  if (n.name == "realify") { arity(1); return realify(child_rep(0)); }
  if (n.name == "su2_poly") { arity(1); return polynomial_rep_2x2(group, child_int(0)); }
  if (n.name == "so3_poly") {
    arity(1);
    if (group.name != "so(3)")
      throw SpecError("so3_poly needs the so(3) group (sphere(2) geometry)");
    return so3_polynomial_rep(child_int(0));
  }
  throw SpecError("rep expression: unknown constructor '" + n.name + "'");
}

Representation rep_for(const JobSpec& spec, const HomogeneousSpace& space) {
  return parse_rep_expression(spec.rep_expr, space.group);
}

std::vector<Point> points_for(const JobSpec& spec,
                              const HomogeneousSpace& space) {
  std::vector<Point> pts;
  for (const Point& p : spec.points) pts.push_back(space.normalize_point(p));
  if (spec.sample_count > 0) {
    Rng rng(spec.seed);
    for (int i = 0; i < spec.sample_count; ++i)
      pts.push_back(space.sample_point(rng));
  }
  if (pts.empty()) throw SpecError("no points given (use --points or --sample)");
  return pts;
}

}  // namespace

Representation parse_rep_expression(const std::string& expr,
                                    const LieGroupSpec& group) {
  Parser p(expr);
  Node root = p.parse_expr();
  p.skip_ws();
  if (p.pos != expr.size())
    throw SpecError("rep expression: trailing input after expression");
  return build_rep(root, group);
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(';', pos);
    std::string tuple = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!tuple.empty()) {
      Point p;
      if (tuple == "inf") {
        p.at_infinity = true;
        p.coords = RVector(0);
      } else {
        std::vector<double> vals;
        size_t tp = 0;
        while (tp <= tuple.size()) {
          size_t comma = tuple.find(',', tp);
          std::string item = tuple.substr(
              tp, comma == std::string::npos ? std::string::npos : comma - tp);
          try {
            size_t used = 0;
            vals.push_back(std::stod(item, &used));
            while (used < item.size() &&
                   std::isspace(static_cast<unsigned char>(item[used])))
              ++used;
            if (used != item.size()) throw std::invalid_argument(item);
          } catch (const std::exception&) {
            throw SpecError("bad coordinate '" + item + "' in --points");
          }
          if (comma == std::string::npos) break;
          tp = comma + 1;
        }
        p.coords = Eigen::Map<const RVector>(vals.data(),
                                             static_cast<Eigen::Index>(vals.size()));
      }
      out.push_back(std::move(p));
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw SpecError("--points is empty");
  return out;
}

CliOutcome run_basis(const JobSpec& spec) {
  HomogeneousSpace space = find_space(spec.geometry);
  Representation rep = rep_for(spec, space);
  EquivariantBasis basis = build_basis(space, rep, spec.tol);
  std::vector<Point> pts = points_for(spec, space);

  Eigen::Index m = basis.invariant_vectors.cols();
  std::vector<std::vector<Mat>> kernels(pts.size());
  auto eval_range = [&](size_t lo, size_t hi) {
    for (size_t p = lo; p < hi; ++p) {
      kernels[p].reserve(m);
      for (Eigen::Index i = 0; i < m; ++i)
        kernels[p].push_back(evaluate(basis, pts[p], static_cast<int>(i)));
    }
  };
  if (spec.parallel && pts.size() > 1) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(pts.size()));
    if (workers < 2) workers = 2;
    std::vector<std::thread> threads;
    size_t chunk = (pts.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      size_t lo = w * chunk, hi = std::min(pts.size(), lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(eval_range, lo, hi);
    }
    for (auto& t : threads) t.join();
  } else {
    eval_range(0, pts.size());
  }

  Json doc;
  doc["geometry"] = spec.geometry;
  doc["rep"] = spec.rep_expr;
  doc["m"] = static_cast<int>(m);
  doc["m_prime"] = basis.full_group_invariant_count;
  Json vecs = Json::array();
  for (Eigen::Index i = 0; i < m; ++i)
    vecs.push_back(
        vector_json(basis.invariant_vectors.values().col(i), rep.field));
  doc["invariant_vectors"] = vecs;
  Json evals = Json::array();
  for (size_t p = 0; p < pts.size(); ++p) {
    Json e;
    e["point"] = point_json(pts[p]);
    Json ks = Json::array();
    for (const Mat& kmat : kernels[p]) ks.push_back(matrix_json(kmat));
    e["kernels"] = ks;
    evals.push_back(e);
  }
  doc["evaluations"] = evals;
  return {dump_document(doc), 0};
}

CliOutcome run_check(const JobSpec& spec) {
  HomogeneousSpace space = find_space(spec.geometry);
  Representation rep = rep_for(spec, space);
  EquivariantBasis basis = build_basis(space, rep, spec.tol);
  int samples = spec.sample_count > 0 ? spec.sample_count : 100;

  if (spec.perturb != 0.0) {
    // Push the last vector out of V^H along the least-covered coordinate
    // direction; the equivariance defect then scales linearly with the
    // perturbation.
    CMatrix b = basis.invariant_vectors.values();
    Eigen::HouseholderQR<CMatrix> qr(b);
    CMatrix q = qr.householderQ() * CMatrix::Identity(b.rows(), b.cols());
    Eigen::Index best = 0;
    double best_norm = -1.0;
    CVector best_dir;
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      CVector e = CVector::Zero(b.rows());
      e(j) = 1.0;
      CVector d = e - q * (q.adjoint() * e);
      if (d.norm() > best_norm) {
        best_norm = d.norm();
        best = j;
        best_dir = d;
      }
    }
    (void)best;
    if (best_norm > 1e-9) {
      b.col(b.cols() - 1) += spec.perturb * best_dir / best_norm;
      basis.invariant_vectors = Mat(b, rep.field);
    }
  }

  double residual = check_equivariance(basis, samples, samples, spec.seed);
  bool pass = residual <= spec.threshold;

  Json doc;
  doc["geometry"] = spec.geometry;
  doc["rep"] = spec.rep_expr;
  doc["point_samples"] = samples;
  doc["group_samples"] = samples;
  doc["seed"] = spec.seed;
  doc["threshold"] = spec.threshold;
  doc["perturb"] = spec.perturb;
  doc["residual"] = residual;
  doc["pass"] = pass;
  return {dump_document(doc), pass ? 0 : 1};
}

CliOutcome run_classify(const JobSpec& spec) {
  HomogeneousSpace space = find_space(spec.geometry);
  Representation rep = rep_for(spec, space);
  if (!rep.endomorphism_valued || rep.endo_rows != rep.endo_cols)
    throw SpecError("classify needs an endomorphism-valued rep (endo_conj)");
  if (rep.field != Field::Real)
    throw SpecError("classify works over the real field; realify the rep");
  EquivariantBasis basis = build_basis(space, rep, spec.tol);

  std::vector<Mat> mats;
  for (Eigen::Index i = 0; i < basis.invariant_vectors.cols(); ++i)
    mats.push_back(Mat(unvec(basis.invariant_vectors.values().col(i),
                             rep.endo_rows, rep.endo_cols),
                       Field::Real));
  ClassificationReport report =
      classify_commutant(mats, std::max(spec.tol, 1e-9) * 10.0, spec.seed + 1);

  Json doc;
  doc["geometry"] = spec.geometry;
  doc["rep"] = spec.rep_expr;
  doc["m"] = static_cast<int>(mats.size());
  Json blocks = Json::array();
  for (const AlgebraBlock& b : report.blocks) {
    Json jb;
    jb["type"] = division_type_name(b.type);
    jb["multiplicity"] = b.multiplicity;
    Json ws = Json::array();
    for (const Mat& w : b.witnesses) ws.push_back(matrix_json(w));
    jb["witnesses"] = ws;
    jb["residual"] = b.residual;
    blocks.push_back(jb);
  }
  doc["blocks"] = blocks;
  doc["residual"] = report.residual;
  return {dump_document(doc), 0};
}

CliOutcome run_tangent(const std::string& group_name,
                       const std::string& subgroup_name) {
  std::vector<Mat> g = named_algebra(group_name);
  if (g.empty()) throw SpecError("tangent: empty group algebra");
  std::vector<Mat> h = named_algebra(subgroup_name, g[0].rows());
  std::vector<Mat> fields = invariant_vector_fields(g, h);

  Json doc;
  doc["group"] = group_name;
  doc["subgroup"] = subgroup_name;
  doc["dim"] = static_cast<int>(fields.size());
  Json basis = Json::array();
  for (const Mat& m : fields) basis.push_back(matrix_json(m));
  doc["basis"] = basis;
  return {dump_document(doc), 0};
}

CliOutcome run_section(const std::string& geometry, const Point& point) {
  HomogeneousSpace space = find_space(geometry);
  Point p = space.normalize_point(point);
  Mat f = space.section(p);

  Json doc;
  doc["geometry"] = geometry;
  doc["point"] = point_json(p);
  doc["matrix"] = matrix_json(f);
  return {dump_document(doc), 0};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SpecError*>(&e)) return 2;
  return 3;
}

std::string error_json(const std::exception& e) {
  Json doc;
  Json err;
  err["code"] = exit_code_for(e);
  err["message"] = std::string(e.what());
  doc["error"] = err;
  return dump_document(doc);
}

}  // namespace equimap
