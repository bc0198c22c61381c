#include <random>

#include "cagekit/errors.hpp"
#include "cagekit/inscribe.hpp"
#include "cagekit/verify.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cagekit;
using th::idx;
using th::r;
using th::vec;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(r(static_cast<long>(rng() % 7) - 3));
  return v;
}

TangentSubspace random_tangent(std::mt19937_64& rng, const Node& node, std::size_t n, std::size_t dim) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < dim; ++i) vs.push_back(random_vector(rng, n));
  return make_tangent(node, vs);
}

bool vanishes_on_nodes(const Cage& c, const LambdaMatrix& l) {
  for (const auto& p : pencils(c, l))
    for (const auto& node : c.nodes())
      if (!p.evaluate(node.point).is_zero()) return false;
  return true;
}

// chart-local Jacobian of the pencils, built from the oracle expansion
std::size_t oracle_jacobian_rank(const Cage& c, const LambdaMatrix& l, const Node& q) {
  oracle::QMatrix jac;
  const std::size_t chart = q.chart();
  const auto point = oracle::qvec(q.point);
  for (const auto& p : pencils(c, l)) {
    const auto poly = oracle::as_poly(p);
    std::vector<oracle::Q> row;
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (v == chart) continue;
      oracle::Q sum = 0;
      for (const auto& [e, coeff] : poly) {
        if (e[v] == 0) continue;
        auto lowered = e;
        --lowered[v];
        sum += coeff * e[v] * oracle::monomial_value(lowered, point);
      }
      row.push_back(sum);
    }
    jac.push_back(row);
  }
  return oracle::rank(jac);
}

}  // namespace

TEST_CASE("node differentials on the unit square") {
  const Cage sq = th::square();
  const Matrix d = node_differentials(sq, sq.node(idx({1, 1})));
  CHECK(d == Matrix::from_rows(th::Q(), {vec({-1, 0}), vec({0, -1})}));
  const Matrix d22 = node_differentials(sq, sq.node(idx({2, 2})));
  CHECK(d22 == Matrix::from_rows(th::Q(), {vec({1, 0}), vec({0, 1})}));
}

TEST_CASE("node differentials follow the product rule and have full rank") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3), d = 2 + static_cast<int>(seed % 2);
    const Cage c = random_cage(seed + 300, d, n, th::Q()).cage;
    for (const auto& node : c.nodes()) {
      const Matrix m = node_differentials(c, node);
      CHECK(m.rows() == static_cast<std::size_t>(n));
      CHECK(oracle::rank(oracle::qmatrix(m)) == static_cast<std::size_t>(n));
      const auto point = oracle::qvec(node.point);
      for (int j = 0; j < n; ++j) {
        const auto own = static_cast<std::size_t>(node.index.entries[j] - 1);
        oracle::Q scale = 1;
        for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
          if (i == own) continue;
          oracle::Q value = 0;
          const auto coeffs = oracle::qvec(c.form(j, i).coeffs());
          for (std::size_t v = 0; v < point.size(); ++v) value += coeffs[v] * point[v];
          scale *= value;
        }
        const auto own_coeffs = oracle::qvec(c.form(j, own).coeffs());
        for (std::size_t v = 0, col = 0; v < point.size(); ++v) {
          if (v == node.chart()) continue;
          CHECK(oracle::q(m(j, col++)) == scale * own_coeffs[v]);
        }
      }
    }
  }
}

TEST_CASE("inscription examples on the unit square") {
  const Cage sq = th::square();
  const Node& p = sq.node(idx({1, 1}));

  const LambdaMatrix l = inscribe_with_tangent(sq, p, make_tangent(p, {vec({1, 2})}));
  REQUIRE(l.s() == 1);
  CHECK(same_row_span(l, LambdaMatrix{{vec({2, -1})}}));
  const HomogPoly v = pencils(sq, l).front();
  CHECK(vanishes_on_nodes(sq, l));
  // 2x^2 - 2xz - y^2 + yz up to scale
  CHECK(same_row_span(LambdaMatrix{{v.coefficients()}}, LambdaMatrix{{vec({2, 0, -2, -1, 1, 0})}}));

  const LambdaMatrix diag = inscribe_with_tangent(sq, p, make_tangent(p, {vec({1, 1})}));
  CHECK(same_row_span(diag, LambdaMatrix{{vec({1, -1})}}));
  // (x - y)(x + y - z) = x^2 - xz - y^2 + yz
  CHECK(same_row_span(LambdaMatrix{{pencils(sq, diag).front().coefficients()}},
                      LambdaMatrix{{vec({1, 0, -1, -1, 1, 0})}}));

  const LambdaMatrix all = inscribe_with_tangent(sq, p, make_tangent(p, {}));
  CHECK(all.s() == 2);
  CHECK(same_row_span(all, LambdaMatrix{{vec({1, 0}), vec({0, 1})}}));

  CHECK_THROWS_AS(inscribe_with_tangent(sq, p, make_tangent(p, {vec({1, 0}), vec({0, 1})})), NothingToInscribe);
  const Node& other = sq.node(idx({2, 1}));
  CHECK_THROWS_AS(inscribe_with_tangent(sq, p, make_tangent(other, {vec({1, 2})})), ShapeError);
  CHECK_THROWS_AS(make_tangent(p, {vec({1, 2, 3})}), ShapeError);
}

TEST_CASE("tangent read-back on the unit square") {
  const Cage sq = th::square();
  const LambdaMatrix l{{vec({2, -1})}};
  const TangentSubspace t = tangent_at_node(l, sq, sq.node(idx({2, 2})));
  CHECK(t.dim() == 1);
  CHECK(same_tangent(t, make_tangent(sq.node(idx({2, 2})), {vec({1, 2})})));

  const Node& p = sq.node(idx({1, 1}));
  const auto tau = make_tangent(p, {vec({1, 2})});
  CHECK(same_tangent(tangent_at_node(inscribe_with_tangent(sq, p, tau), sq, p), tau));
}

TEST_CASE("propagation with s = n gives zero tangents") {
  const Cage c = random_cage(5, 2, 3, th::Q()).cage;
  const Node& p = c.nodes().front();
  const auto prop = propagate_tangents(c, p, make_tangent(p, {}));
  CHECK(prop.tangents.size() == c.nodes().size() - 1);
  for (const auto& [index, t] : prop.tangents) CHECK(t.dim() == 0);
  CHECK_FALSE(prop.tangents.contains(p.index));
}

TEST_CASE("inscription round trips on random instances") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2), d = 2 + static_cast<int>(seed % 3);
    const Cage c = random_cage(seed + 400, d, n, th::Q()).cage;
    const Node& p = c.nodes()[rng() % c.nodes().size()];
    const std::size_t want = rng() % static_cast<std::size_t>(n);
    const TangentSubspace tau = random_tangent(rng, p, static_cast<std::size_t>(n), want);
    const std::size_t s = static_cast<std::size_t>(n) - tau.dim();

    const LambdaMatrix l = inscribe_with_tangent(c, p, tau);
    CHECK(l.s() == s);
    CHECK(same_row_span(l, inscribe_with_tangent(c, p, tau)));
    CHECK(vanishes_on_nodes(c, l));
    CHECK(smoothness_check(l, c).passed());
    CHECK(same_tangent(tangent_at_node(l, c, p), tau));

    const auto prop = propagate_tangents(c, p, tau);
    CHECK(same_row_span(prop.variety, l));
    for (const auto& [index, t] : prop.tangents) {
      const Node& q = c.node(index);
      CHECK(t.dim() == tau.dim());
      CHECK(oracle_jacobian_rank(c, l, q) == s);
      CHECK(same_row_span(inscribe_with_tangent(c, q, t), l));
    }
  }
}

TEST_CASE("tangent cone round trip") {
  std::mt19937_64 rng(3);
  const Cage c = random_cage(77, 3, 3, th::Q()).cage;
  for (const auto& node : c.nodes()) {
    const auto tau = random_tangent(rng, node, 3, rng() % 4);
    const SubspaceBasis cone = tangent_cone(tau);
    CHECK(cone.dim() == tau.dim() + 1);
    CHECK(in_span(node.point, cone));
    CHECK(same_tangent(tangent_from_cone(node, cone), tau));
  }
}

TEST_CASE("inscription is equivariant under projective transformations") {
  std::mt19937_64 rng(99);
  const Matrix g = Matrix::from_rows(th::Q(), {vec({1, 2, 0, 1}), vec({0, 1, 1, 0}), vec({1, 0, 1, 0}), vec({0, 1, 0, 3})});
  REQUIRE(inverse(g).has_value());
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Cage c = random_cage(seed + 500, 2, 3, th::Q()).cage;
    const Cage gc = transform(c, g);
    REQUIRE(gc.validated());
    const Node& p = c.nodes()[rng() % c.nodes().size()];
    const auto tau = random_tangent(rng, p, 3, 1 + seed % 2);
    const Node& gp = gc.node(p.index);
    CHECK(same_projective_point(gp.point, g * p.point));

    SubspaceBasis moved{4, {}};
    for (const auto& v : tangent_cone(tau).vectors) moved.vectors.push_back(g * v);
    const auto gtau = tangent_from_cone(gp, moved);
    CHECK(same_row_span(inscribe_with_tangent(gc, gp, gtau), inscribe_with_tangent(c, p, tau)));
  }
}
