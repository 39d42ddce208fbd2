#pragma once

#include "equimap/algebra.hpp"

namespace equimap {

/// One CLI job: geometry id, rep-construction expression, points (explicit
/// or sampled), tolerances.
struct JobSpec {
  std::string geometry;
  std::string rep_expr = "defining";
  std::vector<Point> points;
  int sample_count = 0;
  uint64_t seed = 0;
  double tol = 1e-10;
  double threshold = 1e-8;
  double perturb = 0.0;
  bool parallel = false;
};

/// Recursive-descent parser for the rep mini-language:
///   trivial | defining | dual(e) | tensor(e,e) | sum(e,e) |
///   det_twist(e,INT) | endo_conj(e) | realify(e) | su2_poly(N) | so3_poly(N)
Representation parse_rep_expression(const std::string& expr,
                                    const LieGroupSpec& group);

/// "x,y;u,v" -> point tuples; the token "inf" is the point at infinity.
std::vector<Point> parse_points(const std::string& text);

struct CliOutcome {
  std::string json;    // UTF-8, LF line endings, stable key order
  int exit_code = 0;   // 0 ok, 1 check failed (run_check only)
};

CliOutcome run_basis(const JobSpec& spec);
CliOutcome run_check(const JobSpec& spec);
CliOutcome run_classify(const JobSpec& spec);
CliOutcome run_tangent(const std::string& group_name,
                       const std::string& subgroup_name);
CliOutcome run_section(const std::string& geometry, const Point& point);

/// Exit code for an escaped exception: 2 for SpecError, 3 for NumericalError
/// and anything else.
int exit_code_for(const std::exception& e);

/// {"error": {"code": N, "message": ...}} for stderr.
std::string error_json(const std::exception& e);

}  // namespace equimap
