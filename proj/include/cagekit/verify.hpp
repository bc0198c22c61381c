#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cagekit/cage.hpp"

namespace cagekit {

/// Rows are points, columns follow monomial_basis(degree, num_vars).
struct EvalMatrix {
  Matrix matrix;
  unsigned degree = 0;
  std::vector<MultiIndex> rows;
};

EvalMatrix evaluation_matrix(const std::vector<Node>& nodes, unsigned k);
Matrix evaluation_matrix(const Field& field, const std::vector<ProjectivePoint>& points, unsigned k);

/// h_X(k) = rank of the degree-k evaluation matrix. Zero for k < 0 or an empty set;
/// DuplicatePoint if two points coincide projectively.
std::size_t hilbert_function(const std::vector<Node>& points, int k);
std::size_t hilbert_function(const Field& field, const std::vector<ProjectivePoint>& points, int k);
/// h(0..max_k); once h reaches |points| the remaining entries are filled without new ranks.
std::vector<std::size_t> hilbert_table(const std::vector<Node>& points, int max_k);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::map<std::string, std::int64_t> ranks;
  std::optional<HomogPoly> witness;
  std::optional<MultiIndex> witness_node;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::string cage_summary;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

/// One instance of an identity between Hilbert function values.
struct IdentityResult {
  int k = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityResult> results;

  bool holds() const;
};

/// Checks at the supra-simplicial set A: rank = |A|, kernel dimension n,
/// kernel = span of the group products, kernel vanishing on every node, and
/// the same kernel when all d^n nodes are imposed.
VerificationReport verify_supra_interpolation(const Cage& c);

/// c must be a (k+1)-cage; its simplicial set imposes a square, invertible
/// degree-k evaluation matrix.
VerificationReport verify_simplicial_rigidity(const Cage& c, unsigned k);

/// No nonzero form of degree d - 1 vanishes on the simplicial set. Vacuous for d = 1.
VerificationReport verify_degree_minimality(const Cage& c);

/// Plane cage, X = all nodes, X1 given, X2 its complement:
/// h_X(k) - h_X1(k) = |X2| - h_X2(2d - 3 - k). OutOfRange unless 0 <= k <= 2d - 3.
IdentityReport cayley_bacharach_check(const Cage& c, const NodeSelection& x1, int k);
/// Same identity for X = {red product = 0} ∩ {blue product = 0} with d red and
/// e blue lines in the plane; exponent d + e - 3.
IdentityReport cayley_bacharach_general(const Field& field, const std::vector<LinearForm>& red,
                                        const std::vector<LinearForm>& blue, const std::vector<MultiIndex>& x1,
                                        int k);

/// h_X(k) = sum_s h_{X ∩ H_{1,s}}(k - s + 1) for 0 <= k <= |X|.
IdentityReport fubini_slice_check(const Cage& c);

/// 4x4 axis cage on {0,1,2,3}^2 with C = {(4,2),(4,3),(4,4)} removed: the
/// remaining 13 nodes carry at least a 3-dimensional space of quartics, unlike A.
VerificationReport independence_counterexample();

/// Jacobian of the s pencils has rank s at every node and each pencil vanishes
/// on every node. DegenerateVariety if the lambda rows are dependent.
VerificationReport smoothness_check(const LambdaMatrix& v, const Cage& c);

/// True iff every polynomial lies in span of the group products. PreconditionError
/// if one of them misses a node.
bool complete_intersection_span_check(const std::vector<HomogPoly>& polys, const Cage& c);

/// Supra interpolation, degree minimality, the Fubini identity and smoothness of the node set.
VerificationReport verify_cage(const Cage& c);

}  // namespace cagekit
