#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cagekit/poly.hpp"

namespace cagekit {

/// Node label I = (i_1, ..., i_n) with every i_j in [1, d]; ||I|| = sum of entries.
struct MultiIndex {
  std::vector<int> entries;

  int norm() const;
  std::string to_string() const;               // "1,2,3"
  static MultiIndex parse(std::string_view text);  // inverse of to_string

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// All of [1, d]^n in lexicographic order (last entry varies fastest).
std::vector<MultiIndex> all_indices(int d, int n);

using ProjectivePoint = Vector;

/// Scales so the last nonzero coordinate equals 1. InvalidPoint for the zero vector.
ProjectivePoint canonical_representative(ProjectivePoint p);
/// Index of the last nonzero coordinate (the affine chart used at this point).
std::size_t chart_of(const ProjectivePoint& p);
bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b);

struct Node {
  MultiIndex index;
  ProjectivePoint point;  // canonical representative

  std::size_t chart() const { return chart_of(point); }
};

enum class SelectionKind { all, simplicial, supra_simplicial, custom };

/// A set of node labels. Simplicial: ||I|| <= d + n - 1, size C(d+n-1, n).
/// Supra-simplicial: ||I|| <= d + n, size C(d+n, n) - n. In the plane these
/// are the bounds d + 1 and d + 2.
struct NodeSelection {
  SelectionKind kind = SelectionKind::custom;
  int d = 0;
  int n = 0;
  std::vector<MultiIndex> indices;  // sorted

  std::size_t size() const { return indices.size(); }
  bool contains(const MultiIndex& index) const;
};

int simplicial_norm_bound(int d, int n);
int supra_simplicial_norm_bound(int d, int n);

NodeSelection all_node_indices(int d, int n);
NodeSelection simplicial_indices(int d, int n);
NodeSelection supra_simplicial_indices(int d, int n);
NodeSelection custom_selection(int d, int n, std::vector<MultiIndex> indices);

struct ValidationIssue {
  std::string kind;  // "non-transversal", "coincident-nodes", "extra-incidence"
  MultiIndex index;
  std::optional<MultiIndex> other;
  std::string message;
};

struct ValidationReport {
  bool valid = false;
  std::size_t node_count = 0;
  std::vector<ValidationIssue> issues;
};

/// n colour groups of d hyperplanes each in P^n (n + 1 homogeneous variables).
///
/// Colours and hyperplanes are addressed 0-based in the API; node labels
/// (MultiIndex) are 1-based. A cage is mutable only until validate() passes,
/// after which its node list is cached.
class Cage {
 public:
  Cage(Field field, std::vector<std::vector<LinearForm>> groups);

  int n() const { return static_cast<int>(groups_.size()); }
  int d() const { return static_cast<int>(groups_.front().size()); }
  std::size_t num_vars() const { return groups_.size() + 1; }
  const Field& field() const { return field_; }
  const std::vector<std::vector<LinearForm>>& groups() const { return groups_; }
  const LinearForm& form(std::size_t color, std::size_t i) const { return groups_.at(color).at(i); }

  /// Checks that every n-coloured tuple of hyperplanes meets in exactly one
  /// point, that the d^n points are distinct, and that each lies on exactly
  /// one hyperplane per colour. Every failure is listed.
  ValidationReport validate();
  bool validated() const { return validated_; }

  /// All d^n nodes in lexicographic label order. MustValidate before validate().
  const std::vector<Node>& nodes() const;
  const Node& node(const MultiIndex& index) const;
  std::vector<Node> nodes(const NodeSelection& selection) const;

  std::string summary() const;

 private:
  Field field_;
  std::vector<std::vector<LinearForm>> groups_;
  bool validated_ = false;
  std::vector<Node> nodes_;
};

/// Product of the colour-`color` linear forms (0-based colour).
HomogPoly group_polynomial(const Cage& c, std::size_t color);

/// sum_j lambda_j * (colour-j product); DegeneratePencil for lambda = 0.
HomogPoly pencil(const Cage& c, const Vector& lambda);

/// Rows lambda^(r) of n scalars; the variety they cut out is
/// { sum_j lambda^(r)_j L_j = 0, r = 1..s }.
struct LambdaMatrix {
  std::vector<Vector> rows;

  std::size_t s() const { return rows.size(); }
};

std::vector<HomogPoly> pencils(const Cage& c, const LambdaMatrix& lambda);

/// The sub-cage K^[s] inside H_{1,s}, with the frame identifying H_{1,s} with P^{n-1}.
struct CageSlice {
  Cage cage;
  int s = 1;
  /// Homogeneous coordinate eliminated on H_{1,s}: the first with a nonzero coefficient.
  std::size_t dropped_var = 0;
  LinearForm hyperplane;

  /// Point of H_{1,s} from its n slice coordinates.
  ProjectivePoint lift(const ProjectivePoint& local) const;
  /// Slice coordinates of a point lying on H_{1,s}.
  ProjectivePoint restrict_point(const ProjectivePoint& ambient) const;
};

/// (d-s+1)^{n-1}-cage cut on H_{1,s} by L_{j,i}, j >= 2, i <= d-s+1 (s is 1-based).
CageSlice slice_with_frame(const Cage& c, int s);
Cage slice(const Cage& c, int s);

/// Axis-parallel cage {z_j = z_j(q_i)} from d affine points; the homogenizing
/// variable is last. NotInGeneralPosition on a repeated coordinate value.
Cage axis_cage(const Field& field, const std::vector<Vector>& points);

struct RandomCageOptions {
  int max_numerator = 5;
  int max_denominator = 3;
  std::size_t max_attempts = 1000;
};

struct GeneratedCage {
  Cage cage;
  std::size_t attempts = 0;
};

/// Deterministic rejection sampler over small rational coefficients.
GeneratedCage random_cage(std::uint64_t seed, int d, int n, const Field& field,
                          const RandomCageOptions& options = {});

/// Cage whose forms are L o g^{-1}, so that nodes map by g. SingularTransform for singular g.
Cage transform(const Cage& c, const Matrix& g);

/// True when conjugating the node's canonical coordinates gives the same point.
bool node_fixed_by_conjugation(const Node& node);

}  // namespace cagekit
