#include "cagekit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "cagekit/errors.hpp"

namespace cagekit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<ProjectivePoint> points_of(const std::vector<Node>& nodes) {
  std::vector<ProjectivePoint> out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.push_back(node.point);
  return out;
}

void require_distinct(std::vector<ProjectivePoint> points) {
  for (auto& p : points) p = canonical_representative(std::move(p));
  auto less = [](const ProjectivePoint& a, const ProjectivePoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const FieldElement& x, const FieldElement& y) { return canonical_less(x, y); });
  };
  std::sort(points.begin(), points.end(), less);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i - 1] == points[i]) throw DuplicatePoint("point set contains a repeated point");
  }
}

std::size_t checked_rank(const Field& field, const std::vector<ProjectivePoint>& points, int k) {
  if (k < 0 || points.empty()) return 0;
  return rank(evaluation_matrix(field, points, static_cast<unsigned>(k)));
}

// h(0..max_k) without the duplicate check; stops ranking once h = |points|.
std::vector<std::size_t> table_for(const Field& field, const std::vector<ProjectivePoint>& points, int max_k) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= max_k; ++k) {
    if (!out.empty() && out.back() == points.size()) {
      out.push_back(points.size());
    } else {
      out.push_back(checked_rank(field, points, k));
    }
  }
  return out;
}

std::size_t lookup(const std::vector<std::size_t>& table, int k) {
  if (k < 0) return 0;
  return k < static_cast<int>(table.size()) ? table[static_cast<std::size_t>(k)] : table.back();
}

HomogPoly as_poly(const Cage& c, unsigned degree, const Vector& coeffs) {
  return HomogPoly::from_coefficients(c.field(), c.num_vars(), degree, coeffs);
}

SubspaceBasis group_span(const Cage& c) {
  std::vector<Vector> vectors;
  for (std::size_t j = 0; j < static_cast<std::size_t>(c.n()); ++j) vectors.push_back(group_polynomial(c, j).coefficients());
  return span_of(c.field(), vectors.front().size(), vectors);
}

// First kernel vector outside the span of the group products, if any.
std::optional<Vector> outside(const SubspaceBasis& kernel, const SubspaceBasis& products) {
  for (const auto& v : kernel.vectors) {
    if (!in_span(v, products)) return v;
  }
  return std::nullopt;
}

std::optional<Vector> product_outside(const SubspaceBasis& products, const SubspaceBasis& kernel) {
  for (const auto& v : products.vectors) {
    if (!in_span(v, kernel)) return v;
  }
  return std::nullopt;
}

void require_validated(const Cage& c) {
  if (!c.validated()) throw MustValidate("cage must pass validate() first");
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Matrix evaluation_matrix(const Field& field, const std::vector<ProjectivePoint>& points, unsigned k) {
  if (points.empty()) throw ShapeError("evaluation matrix needs at least one point");
  const std::size_t num_vars = points.front().size();
  const auto basis = monomial_basis(k, num_vars);
  Matrix m(field, points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& p = points[r];
    if (p.size() != num_vars) throw ShapeError("points of different dimensions");
    std::vector<std::vector<FieldElement>> powers(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) {
      powers[v].push_back(field.one());
      for (unsigned e = 1; e <= k; ++e) powers[v].push_back(powers[v].back() * p[v]);
    }
    for (std::size_t col = 0; col < basis.size(); ++col) {
      FieldElement value = field.one();
      for (std::size_t v = 0; v < num_vars; ++v) {
        const unsigned e = basis[col].exponents[v];
        if (e) value *= powers[v][e];
      }
      m(r, col) = std::move(value);
    }
  }
  return m;
}

EvalMatrix evaluation_matrix(const std::vector<Node>& nodes, unsigned k) {
  if (nodes.empty()) throw ShapeError("evaluation matrix needs at least one node");
  EvalMatrix out{evaluation_matrix(nodes.front().point.front().field(), points_of(nodes), k), k, {}};
  for (const auto& node : nodes) out.rows.push_back(node.index);
  return out;
}

std::size_t hilbert_function(const Field& field, const std::vector<ProjectivePoint>& points, int k) {
  require_distinct(points);
  return checked_rank(field, points, k);
}

std::size_t hilbert_function(const std::vector<Node>& points, int k) {
  if (points.empty()) return 0;
  return hilbert_function(points.front().point.front().field(), points_of(points), k);
}

std::vector<std::size_t> hilbert_table(const std::vector<Node>& points, int max_k) {
  if (points.empty()) return std::vector<std::size_t>(static_cast<std::size_t>(std::max(max_k + 1, 0)), 0);
  auto pts = points_of(points);
  require_distinct(pts);
  return table_for(points.front().point.front().field(), pts, max_k);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.pass; });
}

const CheckResult& VerificationReport::check(const std::string& check_name) const {
  for (const auto& r : checks) {
    if (r.name == check_name) return r;
  }
  throw LookupError("report has no check named " + check_name);
}

bool IdentityReport::holds() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.holds(); });
}

VerificationReport verify_supra_interpolation(const Cage& c) {
  require_validated(c);
  const auto start = Clock::now();
  VerificationReport report{"supra-interpolation", c.summary(), {}, 0};
  const auto degree = static_cast<unsigned>(c.d());
  const auto a = c.nodes(supra_simplicial_indices(c.d(), c.n()));
  const Matrix eval = evaluation_matrix(a, degree).matrix;
  const std::size_t r = rank(eval);

  CheckResult independent{"independent-conditions", r == a.size(), {{"rank", as_int(r)}, {"points", as_int(a.size())}}, {}, {}, {}};
  if (!independent.pass) independent.detail = "supra-simplicial set does not impose independent conditions";
  report.checks.push_back(std::move(independent));

  const SubspaceBasis kernel = kernel_basis(eval);
  CheckResult dim{"kernel-dimension", kernel.dim() == static_cast<std::size_t>(c.n()),
                  {{"kernel_dim", as_int(kernel.dim())}, {"expected", c.n()}}, {}, {}, {}};
  report.checks.push_back(std::move(dim));

  const SubspaceBasis products = group_span(c);
  CheckResult span{"kernel-is-pencil-span", true, {{"kernel_dim", as_int(kernel.dim())}, {"span_dim", as_int(products.dim())}}, {}, {}, {}};
  if (auto v = outside(kernel, products)) {
    span.pass = false;
    span.witness = as_poly(c, degree, *v);
    span.detail = "kernel element outside the span of the group products";
  } else if (auto w = product_outside(products, kernel)) {
    span.pass = false;
    span.witness = as_poly(c, degree, *w);
    span.detail = "group-product combination not in the kernel";
  }
  report.checks.push_back(std::move(span));

  CheckResult vanish{"kernel-vanishes-on-nodes", true, {{"nodes", as_int(c.nodes().size())}}, {}, {}, {}};
  for (const auto& v : kernel.vectors) {
    const HomogPoly f = as_poly(c, degree, v);
    for (const auto& node : c.nodes()) {
      if (!f.evaluate(node.point).is_zero()) {
        vanish.pass = false;
        vanish.witness = f;
        vanish.witness_node = node.index;
        vanish.detail = "kernel element does not vanish at node " + node.index.to_string();
        break;
      }
    }
    if (!vanish.pass) break;
  }
  report.checks.push_back(std::move(vanish));

  const SubspaceBasis all_kernel = kernel_basis(evaluation_matrix(c.nodes(), degree).matrix);
  CheckResult all{"all-nodes-kernel", all_kernel.dim() == static_cast<std::size_t>(c.n()) && same_span(all_kernel, products),
                  {{"kernel_dim", as_int(all_kernel.dim())}}, {}, {}, {}};
  if (!all.pass) {
    if (auto v = outside(all_kernel, products)) all.witness = as_poly(c, degree, *v);
    all.detail = "degree-d forms through all nodes differ from the pencil span";
  }
  report.checks.push_back(std::move(all));

  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_simplicial_rigidity(const Cage& c, unsigned k) {
  require_validated(c);
  if (static_cast<unsigned>(c.d()) != k + 1) throw PreconditionError("rigidity needs a (k+1)-cage");
  const auto start = Clock::now();
  VerificationReport report{"simplicial-rigidity", c.summary(), {}, 0};
  const auto t = c.nodes(simplicial_indices(c.d(), c.n()));
  const Matrix eval = evaluation_matrix(t, k).matrix;
  const std::size_t r = rank(eval);
  CheckResult square{"square", eval.rows() == eval.cols(), {{"rows", as_int(eval.rows())}, {"cols", as_int(eval.cols())}}, {}, {}, {}};
  report.checks.push_back(std::move(square));
  CheckResult invertible{"invertible", eval.rows() == eval.cols() && r == eval.rows(), {{"rank", as_int(r)}}, {}, {}, {}};
  if (!invertible.pass) {
    const auto kernel = kernel_basis(eval);
    if (kernel.dim() > 0) invertible.witness = as_poly(c, k, kernel.vectors.front());
    invertible.detail = "a nonzero form vanishes on the simplicial set";
  }
  report.checks.push_back(std::move(invertible));
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_degree_minimality(const Cage& c) {
  require_validated(c);
  const auto start = Clock::now();
  VerificationReport report{"degree-minimality", c.summary(), {}, 0};
  if (c.d() == 1) {
    report.checks.push_back({"no-lower-degree-form", true, {}, {}, {}, "vacuous for d = 1"});
    return report;
  }
  const auto degree = static_cast<unsigned>(c.d() - 1);
  const auto t = c.nodes(simplicial_indices(c.d(), c.n()));
  const SubspaceBasis kernel = kernel_basis(evaluation_matrix(t, degree).matrix);
  CheckResult r{"no-lower-degree-form", kernel.dim() == 0, {{"kernel_dim", as_int(kernel.dim())}, {"points", as_int(t.size())}}, {}, {}, {}};
  if (!r.pass) {
    r.witness = as_poly(c, degree, kernel.vectors.front());
    r.detail = "a form of degree d - 1 vanishes on the simplicial set";
  }
  report.checks.push_back(std::move(r));
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

IdentityResult cayley_bacharach_instance(const Field& field, const std::vector<ProjectivePoint>& x,
                                         const std::vector<ProjectivePoint>& x1, const std::vector<ProjectivePoint>& x2,
                                         int k, int top) {
  const auto hx = checked_rank(field, x, k);
  const auto hx1 = checked_rank(field, x1, k);
  const auto hx2 = checked_rank(field, x2, top - k);
  return IdentityResult{k, as_int(hx) - as_int(hx1), as_int(x2.size()) - as_int(hx2)};
}

}  // namespace

IdentityReport cayley_bacharach_check(const Cage& c, const NodeSelection& x1, int k) {
  require_validated(c);
  if (c.n() != 2) throw PreconditionError("Cayley-Bacharach check needs a plane cage");
  const int top = 2 * c.d() - 3;
  if (k < 0 || k > top) throw OutOfRange("k must lie in [0, 2d - 3]");
  std::vector<ProjectivePoint> x, p1, p2;
  for (const auto& node : c.nodes()) {
    x.push_back(node.point);
    (x1.contains(node.index) ? p1 : p2).push_back(node.point);
  }
  return IdentityReport{"cayley-bacharach", {cayley_bacharach_instance(c.field(), x, p1, p2, k, top)}};
}

IdentityReport cayley_bacharach_general(const Field& field, const std::vector<LinearForm>& red,
                                        const std::vector<LinearForm>& blue, const std::vector<MultiIndex>& x1,
                                        int k) {
  if (red.empty() || blue.empty()) throw ShapeError("both curves need at least one line");
  const int top = static_cast<int>(red.size() + blue.size()) - 3;
  if (k < 0 || k > top) throw OutOfRange("k must lie in [0, d + e - 3]");
  const std::set<MultiIndex> chosen(x1.begin(), x1.end());
  std::vector<ProjectivePoint> x, p1, p2;
  for (std::size_t i = 0; i < red.size(); ++i) {
    for (std::size_t j = 0; j < blue.size(); ++j) {
      if (red[i].num_vars() != 3 || blue[j].num_vars() != 3) throw ShapeError("plane lines need 3 coefficients");
      const auto solutions = kernel_basis(Matrix::from_rows(field, {red[i].coeffs(), blue[j].coeffs()}));
      if (solutions.dim() != 1) throw NotInGeneralPosition("lines do not meet in a single point");
      const auto p = canonical_representative(solutions.vectors.front());
      x.push_back(p);
      const MultiIndex index{{static_cast<int>(i) + 1, static_cast<int>(j) + 1}};
      (chosen.count(index) ? p1 : p2).push_back(p);
    }
  }
  require_distinct(x);
  return IdentityReport{"cayley-bacharach", {cayley_bacharach_instance(field, x, p1, p2, k, top)}};
}

IdentityReport fubini_slice_check(const Cage& c) {
  require_validated(c);
  const auto& nodes = c.nodes();
  const int max_k = static_cast<int>(nodes.size());
  const auto whole = table_for(c.field(), points_of(nodes), max_k);
  std::vector<std::vector<std::size_t>> parts;
  for (int s = 1; s <= c.d(); ++s) {
    std::vector<ProjectivePoint> layer;
    for (const auto& node : nodes) {
      if (node.index.entries.front() == s) layer.push_back(node.point);
    }
    parts.push_back(table_for(c.field(), layer, max_k));
  }
  IdentityReport report{"fubini-slice", {}};
  for (int k = 0; k <= max_k; ++k) {
    std::int64_t rhs = 0;
    for (int s = 1; s <= c.d(); ++s) rhs += as_int(lookup(parts[static_cast<std::size_t>(s - 1)], k - (s - 1)));
    report.results.push_back({k, as_int(lookup(whole, k)), rhs});
  }
  return report;
}

VerificationReport independence_counterexample() {
  const auto start = Clock::now();
  const Field q = Field::rationals();
  std::vector<Vector> grid;
  for (int i = 0; i < 4; ++i) grid.push_back({q.from_int(i), q.from_int(i)});
  const Cage c = axis_cage(q, grid);
  VerificationReport report{"independence-counterexample", c.summary(), {}, 0};

  const std::vector<MultiIndex> excluded{{{4, 2}}, {{4, 3}}, {{4, 4}}};
  std::vector<Node> b, missing;
  for (const auto& node : c.nodes()) {
    (std::find(excluded.begin(), excluded.end(), node.index) == excluded.end() ? b : missing).push_back(node);
  }
  const auto a = c.nodes(supra_simplicial_indices(4, 2));

  const SubspaceBasis kernel_b = kernel_basis(evaluation_matrix(b, 4).matrix);
  const SubspaceBasis kernel_a = kernel_basis(evaluation_matrix(a, 4).matrix);

  const std::vector<LinearForm> lines{c.form(0, 0), c.form(0, 1), c.form(0, 2), c.form(1, 0)};
  const HomogPoly witness = product_of_linear_forms(lines);

  report.checks.push_back({"same-cardinality", a.size() == b.size() && b.size() == 13,
                           {{"A", as_int(a.size())}, {"B", as_int(b.size())}}, {}, {}, {}});
  report.checks.push_back({"extra-kernel-at-B", kernel_b.dim() >= 3, {{"kernel_dim", as_int(kernel_b.dim())}}, {}, {}, {}});

  CheckResult through{"witness-vanishes-on-B", in_span(witness.coefficients(), kernel_b), {}, witness, {}, {}};
  for (const auto& node : b) {
    if (!witness.evaluate(node.point).is_zero()) {
      through.pass = false;
      through.witness_node = node.index;
    }
  }
  report.checks.push_back(std::move(through));

  CheckResult misses{"witness-misses-C", true, {}, witness, {}, {}};
  for (const auto& node : missing) {
    if (witness.evaluate(node.point).is_zero()) {
      misses.pass = false;
      misses.witness_node = node.index;
    }
  }
  report.checks.push_back(std::move(misses));

  report.checks.push_back({"supra-kernel-at-A", kernel_a.dim() == 2, {{"kernel_dim", as_int(kernel_a.dim())}}, {}, {}, {}});
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport smoothness_check(const LambdaMatrix& v, const Cage& c) {
  require_validated(c);
  const auto start = Clock::now();
  if (v.s() == 0 || v.s() > static_cast<std::size_t>(c.n())) throw ShapeError("lambda needs between 1 and n rows");
  for (const auto& row : v.rows) {
    if (row.size() != static_cast<std::size_t>(c.n())) throw ShapeError("lambda rows need n entries");
  }
  if (rank(Matrix::from_rows(c.field(), v.rows)) != v.s()) throw DegenerateVariety("lambda rows are linearly dependent");

  VerificationReport report{"smoothness", c.summary(), {}, 0};
  const auto polys = pencils(c, v);

  CheckResult vanish{"pencils-vanish-on-nodes", true, {{"s", as_int(v.s())}}, {}, {}, {}};
  CheckResult smooth{"jacobian-rank", true, {{"s", as_int(v.s())}}, {}, {}, {}};
  std::size_t min_rank = v.s();
  for (const auto& node : c.nodes()) {
    for (const auto& f : polys) {
      if (vanish.pass && !f.evaluate(node.point).is_zero()) {
        vanish.pass = false;
        vanish.witness = f;
        vanish.witness_node = node.index;
      }
    }
    const std::size_t r = rank(jacobian_at(polys, node.point));
    if (r < min_rank) min_rank = r;
    if (smooth.pass && r != v.s()) {
      smooth.pass = false;
      smooth.witness_node = node.index;
      smooth.detail = "Jacobian rank drops at node " + node.index.to_string();
    }
  }
  smooth.ranks["min_rank"] = as_int(min_rank);
  report.checks.push_back(std::move(vanish));
  report.checks.push_back(std::move(smooth));
  report.elapsed_ms = ms_since(start);
  return report;
}

bool complete_intersection_span_check(const std::vector<HomogPoly>& polys, const Cage& c) {
  require_validated(c);
  const SubspaceBasis products = group_span(c);
  for (const auto& f : polys) {
    if (f.num_vars() != c.num_vars() || f.degree() != static_cast<unsigned>(c.d())) {
      throw ShapeError("polynomial must have degree d in n + 1 variables");
    }
    for (const auto& node : c.nodes()) {
      if (!f.evaluate(node.point).is_zero()) {
        throw PreconditionError("polynomial does not vanish at node " + node.index.to_string());
      }
    }
  }
  return std::all_of(polys.begin(), polys.end(), [&](const HomogPoly& f) { return in_span(f.coefficients(), products); });
}

VerificationReport verify_cage(const Cage& c) {
  require_validated(c);
  const auto start = Clock::now();
  VerificationReport report{"cage-suite", c.summary(), {}, 0};
  auto absorb = [&report](const VerificationReport& part) {
    for (const auto& check : part.checks) {
      CheckResult copy = check;
      copy.name = part.name + "/" + check.name;
      report.checks.push_back(std::move(copy));
    }
  };
  absorb(verify_supra_interpolation(c));
  absorb(verify_degree_minimality(c));

  LambdaMatrix identity;
  for (int j = 0; j < c.n(); ++j) {
    Vector row = zero_vector(c.field(), static_cast<std::size_t>(c.n()));
    row[static_cast<std::size_t>(j)] = c.field().one();
    identity.rows.push_back(std::move(row));
  }
  absorb(smoothness_check(identity, c));

  const IdentityReport fubini = fubini_slice_check(c);
  CheckResult f{"fubini-slice/identity", fubini.holds(), {{"k_checked", as_int(fubini.results.size())}}, {}, {}, {}};
  for (const auto& r : fubini.results) {
    if (!r.holds()) {
      f.detail = "identity fails at k = " + std::to_string(r.k);
      break;
    }
  }
  report.checks.push_back(std::move(f));
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace cagekit
