#include "cagekit/cage.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "cagekit/errors.hpp"

namespace cagekit {

int MultiIndex::norm() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  MultiIndex index;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view part = text.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("malformed multi-index '" + std::string(text) + "'");
    }
    index.entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (index.entries.empty()) throw ParseError("empty multi-index");
  return index;
}

std::vector<MultiIndex> all_indices(int d, int n) {
  if (d < 1 || n < 1) throw OutOfRange("cage sizes must satisfy d >= 1, n >= 1");
  std::vector<MultiIndex> out;
  MultiIndex current{std::vector<int>(static_cast<std::size_t>(n), 1)};
  while (true) {
    out.push_back(current);
    int pos = n - 1;
    while (pos >= 0 && current.entries[static_cast<std::size_t>(pos)] == d) {
      current.entries[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++current.entries[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

std::size_t flat_offset(const MultiIndex& index, int d) {
  std::size_t offset = 0;
  for (int e : index.entries) offset = offset * static_cast<std::size_t>(d) + static_cast<std::size_t>(e - 1);
  return offset;
}

NodeSelection bounded_selection(SelectionKind kind, int d, int n, int bound) {
  NodeSelection sel{kind, d, n, {}};
  for (auto& index : all_indices(d, n)) {
    if (index.norm() <= bound) sel.indices.push_back(std::move(index));
  }
  return sel;
}

}  // namespace

ProjectivePoint canonical_representative(ProjectivePoint p) {
  require_projective_point(p);
  const FieldElement scale = p[chart_of(p)].inverse();
  for (auto& x : p) {
    if (!x.is_zero()) x *= scale;
  }
  return p;
}

std::size_t chart_of(const ProjectivePoint& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!p[i].is_zero()) return i;
  }
  throw InvalidPoint("projective point with all coordinates zero");
}

bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.size() != b.size()) throw ShapeError("projective points of different dimensions");
  return canonical_representative(a) == canonical_representative(b);
}

bool NodeSelection::contains(const MultiIndex& index) const {
  return std::binary_search(indices.begin(), indices.end(), index);
}

int simplicial_norm_bound(int d, int n) { return d + n - 1; }
int supra_simplicial_norm_bound(int d, int n) { return d + n; }

NodeSelection all_node_indices(int d, int n) { return NodeSelection{SelectionKind::all, d, n, all_indices(d, n)}; }

NodeSelection simplicial_indices(int d, int n) {
  return bounded_selection(SelectionKind::simplicial, d, n, simplicial_norm_bound(d, n));
}

NodeSelection supra_simplicial_indices(int d, int n) {
  return bounded_selection(SelectionKind::supra_simplicial, d, n, supra_simplicial_norm_bound(d, n));
}

NodeSelection custom_selection(int d, int n, std::vector<MultiIndex> indices) {
  for (const auto& index : indices) {
    if (static_cast<int>(index.entries.size()) != n ||
        std::any_of(index.entries.begin(), index.entries.end(), [d](int e) { return e < 1 || e > d; })) {
      throw OutOfRange("multi-index " + index.to_string() + " outside [1, d]^n");
    }
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return NodeSelection{SelectionKind::custom, d, n, std::move(indices)};
}

Cage::Cage(Field field, std::vector<std::vector<LinearForm>> groups)
    : field_(std::move(field)), groups_(std::move(groups)) {
  if (groups_.empty()) throw ShapeError("cage needs at least one colour group");
  const std::size_t d = groups_.front().size();
  if (d == 0) throw ShapeError("cage colour groups must be non-empty");
  for (const auto& group : groups_) {
    if (group.size() != d) throw ShapeError("cage colour groups must all have d hyperplanes");
    for (const auto& form : group) {
      if (form.num_vars() != groups_.size() + 1) throw ShapeError("cage forms must have n + 1 variables");
      if (!(form.field() == field_)) throw FieldMismatch("cage form over a different field");
    }
  }
}

ValidationReport Cage::validate() {
  ValidationReport report;
  const auto indices = all_indices(d(), n());
  std::vector<std::optional<ProjectivePoint>> points(indices.size());

  for (std::size_t k = 0; k < indices.size(); ++k) {
    const MultiIndex& index = indices[k];
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      rows.push_back(groups_[j][static_cast<std::size_t>(index.entries[j] - 1)].coeffs());
    }
    const SubspaceBasis solutions = kernel_basis(Matrix::from_rows(field_, rows));
    if (solutions.dim() != 1) {
      report.issues.push_back({"non-transversal", index, std::nullopt,
                               "hyperplanes " + index.to_string() + " do not meet in a single point"});
      continue;
    }
    points[k] = canonical_representative(solutions.vectors.front());
  }

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k]) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(points[a]->begin(), points[a]->end(), points[b]->begin(), points[b]->end(),
                                        [](const FieldElement& x, const FieldElement& y) { return canonical_less(x, y); });
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (*points[order[k - 1]] == *points[order[k]]) {
      report.issues.push_back({"coincident-nodes", indices[order[k - 1]], indices[order[k]],
                               "nodes " + indices[order[k - 1]].to_string() + " and " +
                                   indices[order[k]].to_string() + " coincide"});
    }
  }

  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!points[k]) continue;
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      for (std::size_t i = 0; i < groups_[j].size(); ++i) {
        if (static_cast<int>(i) + 1 == indices[k].entries[j]) continue;
        if (groups_[j][i].evaluate(*points[k]).is_zero()) {
          std::ostringstream msg;
          msg << "node " << indices[k].to_string() << " also lies on hyperplane " << i + 1 << " of colour " << j + 1;
          report.issues.push_back({"extra-incidence", indices[k], std::nullopt, msg.str()});
        }
      }
    }
  }

  report.valid = report.issues.empty();
  if (report.valid) {
    nodes_.clear();
    for (std::size_t k = 0; k < indices.size(); ++k) nodes_.push_back(Node{indices[k], std::move(*points[k])});
    report.node_count = nodes_.size();
    validated_ = true;
  }
  return report;
}

const std::vector<Node>& Cage::nodes() const {
  if (!validated_) throw MustValidate("cage must pass validate() before its nodes are used");
  return nodes_;
}

const Node& Cage::node(const MultiIndex& index) const {
  const auto& all = nodes();
  if (static_cast<int>(index.entries.size()) != n() ||
      std::any_of(index.entries.begin(), index.entries.end(), [this](int e) { return e < 1 || e > d(); })) {
    throw LookupError("no node with index " + index.to_string());
  }
  return all[flat_offset(index, d())];
}

std::vector<Node> Cage::nodes(const NodeSelection& selection) const {
  std::vector<Node> out;
  out.reserve(selection.size());
  for (const auto& index : selection.indices) out.push_back(node(index));
  return out;
}

std::string Cage::summary() const {
  std::ostringstream s;
  s << d() << "^{" << n() << "}-cage over " << (field_.is_rational() ? "Q" : field_.descriptor().label);
  return s.str();
}

HomogPoly group_polynomial(const Cage& c, std::size_t color) {
  if (color >= c.groups().size()) throw OutOfRange("colour index out of range");
  return product_of_linear_forms(c.groups()[color]);
}

HomogPoly pencil(const Cage& c, const Vector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(c.n())) throw ShapeError("pencil needs n coefficients");
  if (is_zero_vector(lambda)) throw DegeneratePencil("pencil with all coefficients zero");
  HomogPoly p(c.field(), c.num_vars(), static_cast<unsigned>(c.d()));
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (!lambda[j].is_zero()) p += group_polynomial(c, j) * lambda[j];
  }
  return p;
}

std::vector<HomogPoly> pencils(const Cage& c, const LambdaMatrix& lambda) {
  std::vector<HomogPoly> out;
  out.reserve(lambda.s());
  for (const auto& row : lambda.rows) out.push_back(pencil(c, row));
  return out;
}

ProjectivePoint CageSlice::lift(const ProjectivePoint& local) const {
  if (local.size() + 1 != hyperplane.num_vars()) throw ShapeError("slice point has the wrong dimension");
  const Field& field = hyperplane.field();
  ProjectivePoint full;
  FieldElement acc = field.zero();
  for (std::size_t v = 0, k = 0; v < hyperplane.num_vars(); ++v) {
    if (v == dropped_var) {
      full.push_back(field.zero());
      continue;
    }
    full.push_back(local[k]);
    acc += hyperplane[v] * local[k];
    ++k;
  }
  full[dropped_var] = -acc / hyperplane[dropped_var];
  return full;
}

ProjectivePoint CageSlice::restrict_point(const ProjectivePoint& ambient) const {
  if (!hyperplane.evaluate(ambient).is_zero()) throw PreconditionError("point does not lie on the slicing hyperplane");
  ProjectivePoint local = ambient;
  local.erase(local.begin() + static_cast<std::ptrdiff_t>(dropped_var));
  return local;
}

CageSlice slice_with_frame(const Cage& c, int s) {
  if (!c.validated()) throw MustValidate("slice requires a validated cage");
  if (c.n() < 2) throw PreconditionError("slicing needs n >= 2");
  if (s < 1 || s > c.d()) throw OutOfRange("slice index s must lie in [1, d]");

  const LinearForm& h = c.form(0, static_cast<std::size_t>(s - 1));
  std::size_t k = 0;
  while (h[k].is_zero()) ++k;
  const FieldElement inv = h[k].inverse();

  std::vector<std::vector<LinearForm>> groups;
  const int size = c.d() - s + 1;
  for (std::size_t j = 1; j < c.groups().size(); ++j) {
    std::vector<LinearForm> group;
    for (int i = 0; i < size; ++i) {
      const LinearForm& form = c.form(j, static_cast<std::size_t>(i));
      Vector restricted;
      for (std::size_t v = 0; v < form.num_vars(); ++v) {
        if (v == k) continue;
        restricted.push_back(form[v] - form[k] * h[v] * inv);
      }
      group.emplace_back(std::move(restricted));
    }
    groups.push_back(std::move(group));
  }
  CageSlice result{Cage(c.field(), std::move(groups)), s, k, h};
  if (!result.cage.validate().valid) throw PreconditionError("slice of a valid cage failed validation");
  return result;
}

Cage slice(const Cage& c, int s) { return slice_with_frame(c, s).cage; }

Cage axis_cage(const Field& field, const std::vector<Vector>& points) {
  if (points.empty()) throw ShapeError("axis cage needs at least one point");
  const std::size_t n = points.front().size();
  if (n == 0) throw ShapeError("axis cage points need at least one coordinate");
  for (const auto& q : points) {
    if (q.size() != n) throw ShapeError("axis cage points have different dimensions");
  }
  std::vector<std::vector<LinearForm>> groups(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        if (points[k][j] == points[i][j]) {
          throw NotInGeneralPosition("points " + std::to_string(k + 1) + " and " + std::to_string(i + 1) +
                                     " share coordinate " + std::to_string(j + 1));
        }
      }
      Vector coeffs = zero_vector(field, n + 1);
      coeffs[j] = field.one();
      coeffs[n] = -points[i][j];
      groups[j].emplace_back(std::move(coeffs));
    }
  }
  Cage cage(field, std::move(groups));
  if (!cage.validate().valid) throw NotInGeneralPosition("axis cage failed validation");
  return cage;
}

GeneratedCage random_cage(std::uint64_t seed, int d, int n, const Field& field, const RandomCageOptions& options) {
  if (d < 1 || n < 1) throw OutOfRange("random cage sizes must satisfy d >= 1, n >= 1");
  if (options.max_numerator < 0 || options.max_denominator < 1) throw OutOfRange("bad random coefficient bounds");
  std::mt19937_64 rng(seed);
  const auto numerator_span = static_cast<std::uint64_t>(2 * options.max_numerator + 1);
  const auto denominator_span = static_cast<std::uint64_t>(options.max_denominator);
  auto draw = [&]() {
    const long num = static_cast<long>(rng() % numerator_span) - options.max_numerator;
    const long den = static_cast<long>(rng() % denominator_span) + 1;
    return field.from_rational(normalize(num, den));
  };

  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    std::vector<std::vector<LinearForm>> groups(static_cast<std::size_t>(n));
    bool degenerate = false;
    for (auto& group : groups) {
      for (int i = 0; i < d && !degenerate; ++i) {
        Vector coeffs;
        for (int v = 0; v <= n; ++v) coeffs.push_back(draw());
        degenerate = is_zero_vector(coeffs);
        if (!degenerate) group.emplace_back(std::move(coeffs));
      }
    }
    if (degenerate) continue;
    Cage cage(field, std::move(groups));
    if (cage.validate().valid) return GeneratedCage{std::move(cage), attempt};
  }
  throw MaxAttemptsExceeded("no valid cage after " + std::to_string(options.max_attempts) + " attempts");
}

Cage transform(const Cage& c, const Matrix& g) {
  if (g.rows() != c.num_vars() || g.cols() != c.num_vars()) throw ShapeError("transform must be (n+1) x (n+1)");
  const auto g_inv = inverse(g);
  if (!g_inv) throw SingularTransform("projective transformation is singular");
  std::vector<std::vector<LinearForm>> groups;
  for (const auto& group : c.groups()) {
    std::vector<LinearForm> mapped;
    for (const auto& form : group) {
      Matrix row = Matrix::from_rows(c.field(), {form.coeffs()});
      mapped.emplace_back((row * *g_inv).row(0));
    }
    groups.push_back(std::move(mapped));
  }
  Cage out(c.field(), std::move(groups));
  if (c.validated() && !out.validate().valid) throw SingularTransform("transformed cage failed validation");
  return out;
}

bool node_fixed_by_conjugation(const Node& node) {
  ProjectivePoint conj;
  conj.reserve(node.point.size());
  for (const auto& x : node.point) conj.push_back(x.conjugate());
  return same_projective_point(conj, node.point);
}

}  // namespace cagekit
