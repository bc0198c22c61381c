#include "cagekit/inscribe.hpp"

#include "cagekit/errors.hpp"

namespace cagekit {

namespace {

Matrix drop_column(const Matrix& m, std::size_t col) {
  Matrix out(m.field(), m.rows(), m.cols() - 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, k = 0; c < m.cols(); ++c) {
      if (c != col) out(r, k++) = m(r, c);
    }
  }
  return out;
}

SubspaceBasis full_space(const Field& field, std::size_t n) {
  SubspaceBasis out{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = zero_vector(field, n);
    e[i] = field.one();
    out.vectors.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Matrix node_differentials(const Cage& c, const Node& p) {
  if (!c.validated()) throw MustValidate("cage must pass validate() first");
  std::vector<HomogPoly> products;
  for (std::size_t j = 0; j < static_cast<std::size_t>(c.n()); ++j) products.push_back(group_polynomial(c, j));
  return drop_column(jacobian_at(products, p.point), p.chart());
}

TangentSubspace make_tangent(const Node& node, const std::vector<Vector>& vectors) {
  const std::size_t n = node.point.size() - 1;
  for (const auto& v : vectors) {
    if (v.size() != n) throw ShapeError("tangent vectors need n chart-local coordinates");
  }
  return TangentSubspace{node, node.chart(), span_of(node.point.front().field(), n, vectors)};
}

bool same_tangent(const TangentSubspace& a, const TangentSubspace& b) {
  return a.node.index == b.node.index && a.chart == b.chart && same_span(a.basis, b.basis);
}

bool same_row_span(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.rows.empty() || b.rows.empty()) return a.rows.empty() && b.rows.empty();
  const Field& field = a.rows.front().front().field();
  const std::size_t n = a.rows.front().size();
  return same_span(span_of(field, n, a.rows), span_of(field, n, b.rows));
}

LambdaMatrix inscribe_with_tangent(const Cage& c, const Node& p, const TangentSubspace& tau) {
  const auto n = static_cast<std::size_t>(c.n());
  if (tau.basis.ambient_dim != n) throw ShapeError("tangent subspace must live in F^n");
  if (!(tau.node.index == p.index) || tau.chart != p.chart()) throw ShapeError("tangent subspace belongs to another node");
  if (tau.dim() >= n) throw NothingToInscribe("tangent subspace is the whole tangent space (s = 0)");
  const std::size_t s = n - tau.dim();

  const Matrix d = node_differentials(c, p);
  LambdaMatrix out;
  if (tau.dim() == 0) {
    out.rows = full_space(c.field(), n).vectors;
    return out;
  }
  Matrix t(c.field(), n, tau.dim());
  for (std::size_t col = 0; col < tau.dim(); ++col) {
    for (std::size_t r = 0; r < n; ++r) t(r, col) = tau.basis.vectors[col][r];
  }
  // lambda^T D annihilates tau  <=>  lambda in ker((D T)^T)
  const SubspaceBasis solutions = kernel_basis((d * t).transpose());
  if (solutions.dim() != s) throw DegenerateVariety("node differentials are dependent");
  out.rows = solutions.vectors;
  return out;
}

TangentSubspace tangent_at_node(const LambdaMatrix& v, const Cage& c, const Node& q) {
  if (v.s() == 0) throw ShapeError("lambda matrix has no rows");
  const auto polys = pencils(c, v);
  const Matrix local = drop_column(jacobian_at(polys, q.point), q.chart());
  if (rank(local) < v.s()) throw SingularNode("inscribed variety is singular at node " + q.index.to_string());
  return TangentSubspace{q, q.chart(), kernel_basis(local)};
}

Propagation propagate_tangents(const Cage& c, const Node& p, const TangentSubspace& tau) {
  Propagation out{inscribe_with_tangent(c, p, tau), {}};
  for (const auto& q : c.nodes()) {
    if (q.index == p.index) continue;
    out.tangents.emplace(q.index, tangent_at_node(out.variety, c, q));
  }
  return out;
}

SubspaceBasis tangent_cone(const TangentSubspace& tau) {
  const ProjectivePoint& p = tau.node.point;
  std::vector<Vector> vectors{p};
  for (const auto& v : tau.basis.vectors) {
    Vector lifted;
    for (std::size_t i = 0, k = 0; i < p.size(); ++i) {
      lifted.push_back(i == tau.chart ? p[i].field().zero() : v[k++]);
    }
    vectors.push_back(std::move(lifted));
  }
  return span_of(p.front().field(), p.size(), vectors);
}

TangentSubspace tangent_from_cone(const Node& node, const SubspaceBasis& cone) {
  const ProjectivePoint& p = node.point;
  if (cone.ambient_dim != p.size()) throw ShapeError("tangent cone lives in the wrong space");
  const std::size_t chart = node.chart();
  std::vector<Vector> local;
  for (const auto& w : cone.vectors) {
    Vector v;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != chart) v.push_back(w[i] - w[chart] * p[i]);
    }
    local.push_back(std::move(v));
  }
  return make_tangent(node, local);
}

}  // namespace cagekit
