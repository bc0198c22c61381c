#include "cagekit/demos.hpp"
#include "cagekit/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cagekit;

namespace {

FieldElement power_sum(const Node& node, unsigned k) {
  FieldElement s = node.point.front().field().zero();
  for (const auto& x : node.point) s += x.pow(k);
  return s;
}

}  // namespace

TEST_CASE("builtin fields load and know their elements") {
  for (const auto& name : builtin_field_names()) CHECK_NOTHROW(builtin_field(name));
  const auto sqrt2 = builtin_field("q_sqrt2");
  CHECK(sqrt2.element("sqrt2") * sqrt2.element("sqrt2") == sqrt2.field.from_int(2));
  const auto ti = builtin_field("q_theta_i");
  CHECK(ti.field.degree() == 8);
  CHECK(ti.element("theta").pow(4) * ti.field.from_int(-3) == ti.field.one());
  const auto oc = builtin_field("q_omega_cbrt3");
  CHECK(oc.field.degree() == 6);
  CHECK(oc.element("omega").pow(3) == oc.field.one());
  CHECK_THROWS_AS(builtin_field("q_pi"), LookupError);
  CHECK_THROWS_AS(ti.element("zeta"), LookupError);
}

TEST_CASE("fermat conic cage") {
  const Cage c = fermat_conic_cage();
  REQUIRE(c.validated());
  CHECK(c.nodes().size() == 4);
  for (const auto& node : c.nodes()) {
    const auto& p = node.point;
    CHECK(p[0] * p[0] + p[1] * p[1] == p[2] * p[2]);
  }
}

TEST_CASE("K3 quartic cage has 64 nodes, none of them real") {
  const Cage c = k3_quartic_cage();
  REQUIRE(c.validated());
  CHECK(c.nodes().size() == 64);
  const Field& f = c.field();
  for (const auto& node : c.nodes()) {
    CHECK(power_sum(node, 4).is_zero());
    CHECK_FALSE(node_fixed_by_conjugation(node));
  }
  // each colour product is y_j^4 + (1/3) y0^4 with y0 last
  for (std::size_t j = 0; j < 3; ++j) {
    HomogPoly expect(f, 4, 4);
    Monomial mj{{0, 0, 0, 0}}, m0{{0, 0, 0, 4}};
    mj.exponents[j] = 4;
    expect.add_term(mj, f.one());
    expect.add_term(m0, f.from_rational(normalize(1, 3)));
    CHECK(group_polynomial(c, j) == expect);
  }
}

TEST_CASE("Fermat cubic surface cage") {
  const Cage c = fermat_cubic_cage();
  REQUIRE(c.validated());
  CHECK(c.nodes().size() == 27);
  for (const auto& node : c.nodes()) CHECK(power_sum(node, 3).is_zero());
}

TEST_CASE("every demo passes") {
  for (const auto& spec : demo_registry()) {
    const auto rep = run_demo(spec);
    CHECK_MESSAGE(rep.passed(), spec.name);
    CHECK(rep.name == "demo/" + spec.name);
  }
  const auto k3 = run_demo("k3-quartic");
  CHECK(k3.check("pencil-equals-target").pass);
  CHECK(k3.check("no-real-node").ranks.at("fixed_nodes") == 0);
  const auto cube = run_demo("cube-elliptic");
  CHECK(cube.check("eighth-node-implied").ranks.at("supra_nodes") == 7);
  CHECK(cube.check("eighth-node-implied").ranks.at("quadrics") == 3);
  CHECK(cube.check("inscribed-s").ranks.at("s") == 2);
  CHECK_THROWS_AS(run_demo("no-such-demo"), LookupError);
  CHECK_THROWS_AS(find_demo(""), LookupError);
}
