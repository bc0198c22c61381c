#include <cmath>
#include <random>
#include <set>

#include "cagekit/errors.hpp"
#include "cagekit/verify.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cagekit;
using th::idx;
using th::r;
using th::vec;

namespace {

Cage plane_cage(const std::vector<Vector>& red, const std::vector<Vector>& blue) {
  std::vector<LinearForm> g1, g2;
  for (const auto& v : red) g1.emplace_back(v);
  for (const auto& v : blue) g2.emplace_back(v);
  return Cage(th::Q(), {g1, g2});
}

bool has_issue(const ValidationReport& rep, const std::string& kind) {
  for (const auto& i : rep.issues)
    if (i.kind == kind) return true;
  return false;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Matrix g(th::Q(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = r(static_cast<long>(rng() % 7) - 3);
    if (inverse(g)) return g;
  }
}

}  // namespace

TEST_CASE("multi-index text form") {
  const MultiIndex i = MultiIndex::parse("1, 2,3");
  CHECK(i.entries == std::vector<int>{1, 2, 3});
  CHECK(i.norm() == 6);
  CHECK(i.to_string() == "1,2,3");
  CHECK(MultiIndex::parse(i.to_string()) == i);
  CHECK_THROWS_AS(MultiIndex::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(MultiIndex::parse("a"), ParseError);
}

TEST_CASE("validate examples") {
  Cage good = th::square();
  const auto rep = good.validate();
  CHECK(rep.valid);
  CHECK(rep.node_count == 4);

  Cage duplicated = plane_cage({vec({1, 0, 0}), vec({1, 0, 0})}, {vec({0, 1, 0}), vec({0, 1, -1})});
  const auto dup = duplicated.validate();
  CHECK_FALSE(dup.valid);
  CHECK(has_issue(dup, "coincident-nodes"));
  CHECK_FALSE(duplicated.validated());

  // red x = 0 with blue y = 0 and y = x: both blue lines pass through the origin
  Cage concurrent = plane_cage({vec({1, 0, 0}), vec({1, 0, -1})}, {vec({0, 1, 0}), vec({-1, 1, 0})});
  const auto conc = concurrent.validate();
  CHECK_FALSE(conc.valid);
  CHECK(has_issue(conc, "extra-incidence"));
  CHECK(has_issue(conc, "coincident-nodes"));

  Cage parallel_colours = plane_cage({vec({1, 0, 0}), vec({1, 0, -1})}, {vec({1, 0, 0}), vec({0, 1, -1})});
  const auto nt = parallel_colours.validate();
  CHECK_FALSE(nt.valid);
  CHECK(has_issue(nt, "non-transversal"));
}

TEST_CASE("nodes need validation") {
  Cage c = plane_cage({vec({1, 0, 0}), vec({1, 0, -1})}, {vec({0, 1, 0}), vec({0, 1, -1})});
  CHECK_THROWS_AS(c.nodes(), MustValidate);
  CHECK_THROWS_AS(slice(c, 1), MustValidate);
  c.validate();
  CHECK(c.nodes().size() == 4);
  CHECK_THROWS_AS(c.node(idx({3, 1})), LookupError);
}

TEST_CASE("axis cage nodes are the Cartesian product") {
  const Cage c = th::axis({{0, 0}, {1, 1}, {2, 2}});
  REQUIRE(c.nodes().size() == 9);
  for (const auto& node : c.nodes()) {
    CHECK(node.point == vec({node.index.entries[0] - 1, node.index.entries[1] - 1, 1}));
  }
  CHECK_THROWS_AS(th::axis({{0, 0}, {0, 1}}), NotInGeneralPosition);
  const Cage big = th::axis({{0, 5, -1}, {3, 1, 4}, {7, -2, 2}});
  for (const auto& node : big.nodes())
    for (const auto& x : node.point) CHECK(x.rational_value().is_integer());
}

TEST_CASE("random cages: node count, oracle coordinates and incidence") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3), d = 2 + static_cast<int>(seed % 2);
    const Cage c = random_cage(seed, d, n, th::Q()).cage;
    CHECK(c.nodes().size() == static_cast<std::size_t>(std::pow(d, n)));
    std::set<std::vector<oracle::Q>> distinct;
    for (const auto& node : c.nodes()) {
      oracle::QMatrix forms;
      for (int j = 0; j < n; ++j) forms.push_back(oracle::qvec(c.form(j, node.index.entries[j] - 1).coeffs()));
      CHECK(oracle::qvec(node.point) == oracle::intersection(forms));
      distinct.insert(oracle::qvec(node.point));
      for (int j = 0; j < n; ++j) {
        int on = 0;
        for (int i = 0; i < d; ++i) on += c.form(j, i).evaluate(node.point).is_zero();
        CHECK(on == 1);
        CHECK(c.form(j, node.index.entries[j] - 1).evaluate(node.point).is_zero());
      }
    }
    CHECK(distinct.size() == c.nodes().size());
  }
}

TEST_CASE("selection spot values") {
  CHECK(simplicial_indices(3, 3).size() == 10);
  CHECK(supra_simplicial_indices(3, 3).size() == 17);
  CHECK(simplicial_indices(2, 3).size() == 4);
  CHECK(supra_simplicial_indices(2, 3).size() == 7);
  CHECK(simplicial_indices(3, 2).size() == 6);
  CHECK(supra_simplicial_indices(3, 2).size() == 8);
  // in the plane the bounds are d + 1 and d + 2
  CHECK(simplicial_norm_bound(5, 2) == 6);
  CHECK(supra_simplicial_norm_bound(5, 2) == 7);
}

TEST_CASE("selection cardinalities for d <= 8, n <= 5") {
  for (int d = 1; d <= 8; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto s = simplicial_indices(d, n);
      const auto a = supra_simplicial_indices(d, n);
      CHECK(s.size() == oracle::binomial(d + n - 1, n));
      CHECK(a.size() == oracle::binomial(d + n, n) - n);
      CHECK(a.size() == monomial_basis(d, n + 1).size() - n);
      std::size_t boundary = 0;
      for (const auto& i : all_indices(d, n)) boundary += i.norm() == supra_simplicial_norm_bound(d, n);
      CHECK(s.size() + boundary == a.size());
      for (const auto& i : s.indices) CHECK(a.contains(i));
    }
  }
}

TEST_CASE("custom selections") {
  const auto sel = custom_selection(3, 2, {idx({2, 1}), idx({1, 1}), idx({2, 1})});
  CHECK(sel.size() == 2);
  CHECK(sel.contains(idx({1, 1})));
  CHECK_THROWS_AS(custom_selection(3, 2, {idx({4, 1})}), OutOfRange);
}

TEST_CASE("slices") {
  const Cage c = random_cage(77, 4, 3, th::Q()).cage;
  for (int s = 1; s <= 4; ++s) {
    const CageSlice sl = slice_with_frame(c, s);
    CHECK(sl.cage.n() == 2);
    CHECK(sl.cage.d() == 4 - s + 1);
    CHECK(sl.cage.nodes().size() == static_cast<std::size_t>((4 - s + 1) * (4 - s + 1)));
    for (const auto& node : sl.cage.nodes()) {
      const ProjectivePoint lifted = sl.lift(node.point);
      CHECK(sl.hyperplane.evaluate(lifted).is_zero());
      const MultiIndex ambient{{s, node.index.entries[0], node.index.entries[1]}};
      CHECK(same_projective_point(lifted, c.node(ambient).point));
      CHECK(same_projective_point(sl.restrict_point(c.node(ambient).point), node.point));
    }
    // the supra set of c meets the slice in the supra set of the slice, which contains its simplicial set
    const auto a = supra_simplicial_indices(4, 3);
    const auto slice_supra = supra_simplicial_indices(sl.cage.d(), 2);
    const auto slice_simp = simplicial_indices(sl.cage.d(), 2);
    for (const auto& node : sl.cage.nodes()) {
      const MultiIndex ambient{{s, node.index.entries[0], node.index.entries[1]}};
      CHECK(a.contains(ambient) == slice_supra.contains(node.index));
      if (slice_simp.contains(node.index)) CHECK(a.contains(ambient));
    }
  }
  CHECK(slice(c, 4).nodes().size() == 1);
  CHECK_THROWS_AS(slice(c, 0), OutOfRange);
  CHECK_THROWS_AS(slice(c, 5), OutOfRange);
  Cage line = Cage(th::Q(), {{LinearForm(vec({1, 0})), LinearForm(vec({1, -1}))}});
  line.validate();
  CHECK_THROWS_AS(slice(line, 1), PreconditionError);
}

TEST_CASE("group products") {
  const Cage c = th::square();
  HomogPoly expected(th::Q(), 3, 2);
  expected.add_term(Monomial{{2, 0, 0}}, r(1));
  expected.add_term(Monomial{{1, 0, 1}}, r(-1));
  CHECK(group_polynomial(c, 0) == expected);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Cage rc = random_cage(seed, 3, 3, th::Q()).cage;
    std::vector<Vector> coeffs;
    for (std::size_t j = 0; j < 3; ++j) {
      const HomogPoly l = group_polynomial(rc, j);
      for (const auto& node : rc.nodes()) CHECK(l.evaluate(node.point).is_zero());
      coeffs.push_back(l.coefficients());
    }
    CHECK(oracle::rank(oracle::qmatrix(Matrix::from_rows(th::Q(), coeffs))) == 3);
  }
}

TEST_CASE("pencils") {
  const Cage c = th::square();
  CHECK(pencil(c, vec({1, 0})) == group_polynomial(c, 0));
  HomogPoly expected(th::Q(), 3, 2);  // x^2 - xz - y^2 + yz = (x - y)(x + y - z)
  expected.add_term(Monomial{{2, 0, 0}}, r(1));
  expected.add_term(Monomial{{1, 0, 1}}, r(-1));
  expected.add_term(Monomial{{0, 2, 0}}, r(-1));
  expected.add_term(Monomial{{0, 1, 1}}, r(1));
  CHECK(pencil(c, vec({1, -1})) == expected);
  CHECK(expected == product_of_linear_forms(std::vector<LinearForm>{LinearForm(vec({1, -1, 0})), LinearForm(vec({1, 1, -1}))}));
  CHECK_THROWS_AS(pencil(c, vec({0, 0})), DegeneratePencil);
  std::mt19937_64 rng(3);
  const Cage rc = random_cage(9, 3, 3, th::Q()).cage;
  for (int t = 0; t < 10; ++t) {
    const Vector lambda = vec({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, 1});
    const HomogPoly p = pencil(rc, lambda);
    for (const auto& node : rc.nodes()) CHECK(p.evaluate(node.point).is_zero());
  }
}

TEST_CASE("random cage generation") {
  const auto a = random_cage(42, 3, 3, th::Q());
  const auto b = random_cage(42, 3, 3, th::Q());
  CHECK(a.cage.groups() == b.cage.groups());
  CHECK(a.cage.validated());
  std::size_t attempts = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_cage(seed, 3, 3, th::Q());
    CHECK(g.cage.validated());
    attempts += g.attempts;
  }
  MESSAGE("mean attempts at (n,d) = (3,3): " << static_cast<double>(attempts) / 100.0);
  RandomCageOptions hopeless;
  hopeless.max_numerator = 0;
  hopeless.max_attempts = 5;
  CHECK_THROWS_AS(random_cage(1, 2, 2, th::Q(), hopeless), MaxAttemptsExceeded);
}

TEST_CASE("projective transformations") {
  std::mt19937_64 rng(21);
  const Cage c = random_cage(5, 3, 2, th::Q()).cage;
  const Cage same = transform(c, Matrix::identity(th::Q(), 3));
  CHECK(same.groups() == c.groups());
  for (int t = 0; t < 5; ++t) {
    const Matrix g = random_invertible(rng, 3);
    const Cage moved = transform(c, g);
    REQUIRE(moved.validated());
    for (const auto& node : c.nodes()) CHECK(same_projective_point(moved.node(node.index).point, g * node.point));
    const auto before = verify_cage(c), after = verify_cage(moved);
    REQUIRE(before.checks.size() == after.checks.size());
    for (std::size_t i = 0; i < before.checks.size(); ++i) {
      CHECK(before.checks[i].pass == after.checks[i].pass);
      CHECK(before.checks[i].ranks == after.checks[i].ranks);
    }
  }
  Matrix singular(th::Q(), 3, 3);
  CHECK_THROWS_AS(transform(c, singular), SingularTransform);
}

TEST_CASE("canonical representatives") {
  const ProjectivePoint p = canonical_representative(vec({2, 4, 0}));
  CHECK(p == Vector{r(1, 2), r(1), r(0)});  // last nonzero coordinate scaled to 1
  CHECK(chart_of(p) == 1);
  CHECK(same_projective_point(vec({1, 2, 3}), vec({-2, -4, -6})));
  CHECK_THROWS_AS(canonical_representative(vec({0, 0})), InvalidPoint);
  CHECK(node_fixed_by_conjugation(th::square().nodes().front()));
}
