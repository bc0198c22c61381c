#include "cagekit/demos.hpp"

#include <chrono>

#include "cagekit/errors.hpp"
#include "cagekit/inscribe.hpp"
#include "cagekit/json_io.hpp"
#include "field_data.hpp"

namespace cagekit {

namespace {

const char* const kFieldNames[] = {"q_sqrt2", "q_theta_i", "q_omega_cbrt3"};

void require_relation(bool holds, std::string_view field, const std::string& what) {
  if (!holds) throw PreconditionError("field data " + std::string(field) + " fails " + what);
}

FieldElement eval_min_poly(const Field& field, const FieldElement& x) {
  FieldElement acc = field.zero();
  const auto& m = field.descriptor().min_poly;
  for (std::size_t k = m.size(); k-- > 0;) acc = acc * x + field.from_rational(m[k]);
  return acc;
}

void check_relations(std::string_view name, const BuiltinField& b) {
  const Field& f = b.field;
  const FieldElement t = f.generator();
  if (f.has_conjugation()) {
    require_relation(eval_min_poly(f, t.conjugate()).is_zero(), name, "conjugation image is a root");
  }
  if (name == "q_sqrt2") {
    require_relation(b.element("sqrt2").pow(2) == f.from_int(2), name, "sqrt2^2 = 2");
  } else if (name == "q_theta_i") {
    const auto& theta = b.element("theta");
    const auto& i = b.element("i");
    require_relation(theta.pow(4) == f.from_rational(normalize(-1, 3)), name, "theta^4 = -1/3");
    require_relation(i * i == f.from_int(-1), name, "i^2 = -1");
    require_relation(theta + i == t, name, "t = theta + i");
    require_relation(i.conjugate() == -i, name, "conj(i) = -i");
    require_relation(theta.conjugate() == -(i * theta), name, "conj(theta) = -i theta");
  } else if (name == "q_omega_cbrt3") {
    const auto& omega = b.element("omega");
    const auto& beta = b.element("inv_cbrt3");
    require_relation((omega * omega + omega + f.one()).is_zero(), name, "omega^2 + omega + 1 = 0");
    require_relation(beta.pow(3) == f.from_rational(normalize(1, 3)), name, "(3^(-1/3))^3 = 1/3");
    require_relation(omega + beta.inverse() == t, name, "t = omega + 3^(1/3)");
    require_relation(omega.conjugate() == omega * omega, name, "conj(omega) = omega^2");
  }
}

HomogPoly sum_of_powers(const Field& field, std::size_t num_vars, unsigned degree) {
  HomogPoly p(field, num_vars, degree);
  for (std::size_t v = 0; v < num_vars; ++v) {
    Monomial m{std::vector<unsigned>(num_vars, 0)};
    m.exponents[v] = degree;
    p.add_term(m, field.one());
  }
  return p;
}

// y_j - root * y_last for each root, one colour per affine coordinate.
Cage root_cage(const Field& field, std::size_t n, const std::vector<FieldElement>& roots) {
  std::vector<std::vector<LinearForm>> groups(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& r : roots) {
      Vector coeffs = zero_vector(field, n + 1);
      coeffs[j] = field.one();
      coeffs[n] = -r;
      groups[j].emplace_back(std::move(coeffs));
    }
  }
  Cage cage(field, std::move(groups));
  if (!cage.validate().valid) throw PreconditionError("demo cage failed validation");
  return cage;
}

Vector ones(const Field& field, std::size_t n) { return Vector(n, field.one()); }

void absorb(VerificationReport& into, const VerificationReport& part) {
  for (const auto& check : part.checks) {
    CheckResult copy = check;
    copy.name = part.name + "/" + check.name;
    into.checks.push_back(std::move(copy));
  }
}

// Shared part of the demos with a target polynomial: validation, the supra
// check, span membership and exact agreement with the documented pencil.
VerificationReport target_demo(const std::string& name, const Cage& cage, const HomogPoly& target, const Vector& lambda) {
  VerificationReport report{"demo/" + name, cage.summary(), {}, 0};
  report.checks.push_back({"validated", cage.validated(), {{"nodes", static_cast<std::int64_t>(cage.nodes().size())}}, {}, {}, {}});
  absorb(report, verify_supra_interpolation(cage));
  report.checks.push_back({"target-in-span", complete_intersection_span_check({target}, cage), {}, {}, {}, {}});
  const HomogPoly p = pencil(cage, lambda);
  CheckResult exact{"pencil-equals-target", p == target, {}, {}, {}, {}};
  if (!exact.pass) exact.witness = p;
  report.checks.push_back(std::move(exact));
  absorb(report, smoothness_check(LambdaMatrix{{lambda}}, cage));
  return report;
}

VerificationReport run_fermat_conic() {
  const Cage cage = fermat_conic_cage();
  const Field& f = cage.field();
  HomogPoly target = sum_of_powers(f, 3, 2);
  target -= HomogPoly::from_linear_form(LinearForm({f.zero(), f.zero(), f.one()})) *
            HomogPoly::from_linear_form(LinearForm({f.zero(), f.zero(), f.from_int(2)}));
  return target_demo("fermat-conic", cage, target, ones(f, 2));
}

VerificationReport run_k3_quartic() {
  const Cage cage = k3_quartic_cage();
  VerificationReport report = target_demo("k3-quartic", cage, sum_of_powers(cage.field(), 4, 4), ones(cage.field(), 3));
  CheckResult invisible{"no-real-node", true, {}, {}, {}, {}};
  std::int64_t fixed = 0;
  for (const auto& node : cage.nodes()) {
    if (node_fixed_by_conjugation(node)) {
      ++fixed;
      if (invisible.pass) invisible.witness_node = node.index;
      invisible.pass = false;
    }
  }
  invisible.ranks["fixed_nodes"] = fixed;
  report.checks.push_back(std::move(invisible));
  return report;
}

VerificationReport run_fermat_cubic() {
  const Cage cage = fermat_cubic_cage();
  return target_demo("fermat-cubic-surface", cage, sum_of_powers(cage.field(), 4, 3), ones(cage.field(), 3));
}

VerificationReport run_cube_elliptic() {
  const Cage cage = cube_elliptic_cage();
  const Field& f = cage.field();
  VerificationReport report{"demo/cube-elliptic", cage.summary(), {}, 0};
  absorb(report, verify_supra_interpolation(cage));

  const auto a = cage.nodes(supra_simplicial_indices(2, 3));
  const Node& eighth = cage.node(MultiIndex{{2, 2, 2}});
  const SubspaceBasis quadrics = kernel_basis(evaluation_matrix(a, 2).matrix);
  CheckResult implied{"eighth-node-implied", a.size() == 7, {{"supra_nodes", static_cast<std::int64_t>(a.size())},
                                                             {"quadrics", static_cast<std::int64_t>(quadrics.dim())}}, {}, {}, {}};
  for (const auto& v : quadrics.vectors) {
    const HomogPoly q = HomogPoly::from_coefficients(f, 4, 2, v);
    if (!q.evaluate(eighth.point).is_zero()) {
      implied.pass = false;
      implied.witness = q;
    }
  }
  report.checks.push_back(std::move(implied));

  const Node& p = cage.node(MultiIndex{{1, 1, 1}});
  const TangentSubspace tau = make_tangent(p, {{f.from_int(1), f.from_int(2), f.from_int(3)}});
  const LambdaMatrix curve = inscribe_with_tangent(cage, p, tau);
  report.checks.push_back({"inscribed-s", curve.s() == 2, {{"s", static_cast<std::int64_t>(curve.s())}}, {}, {}, {}});
  report.checks.push_back({"tangent-read-back", same_tangent(tangent_at_node(curve, cage, p), tau), {}, {}, {}, {}});
  absorb(report, smoothness_check(curve, cage));
  return report;
}

}  // namespace

const FieldElement& BuiltinField::element(const std::string& name) const {
  auto it = elements.find(name);
  if (it == elements.end()) throw LookupError("field has no element named " + name);
  return it->second;
}

BuiltinField builtin_field(std::string_view name) {
  const auto text = detail::embedded_field_data(name);
  if (!text) throw LookupError("unknown builtin field " + std::string(name));
  const io::json j = io::parse_text(std::string(*text), std::string(name));
  BuiltinField out{io::field_from_json(j, std::string(name)), {}};
  if (auto it = j.find("elements"); it != j.end()) {
    for (const auto& [key, value] : it->items()) {
      out.elements.emplace(key, io::element_from_json(out.field, value, std::string(name) + ".elements." + key));
    }
  }
  check_relations(name, out);
  return out;
}

std::vector<std::string> builtin_field_names() { return {std::begin(kFieldNames), std::end(kFieldNames)}; }

Cage fermat_conic_cage() {
  const BuiltinField b = builtin_field("q_sqrt2");
  const FieldElement xi = b.element("sqrt2") / b.field.from_int(2);
  return root_cage(b.field, 2, {xi, -xi});
}

Cage k3_quartic_cage() {
  const BuiltinField b = builtin_field("q_theta_i");
  const auto& theta = b.element("theta");
  const auto& i = b.element("i");
  return root_cage(b.field, 3, {theta, theta * i, -theta, -(theta * i)});
}

Cage fermat_cubic_cage() {
  const BuiltinField b = builtin_field("q_omega_cbrt3");
  const auto& omega = b.element("omega");
  const auto& beta = b.element("inv_cbrt3");
  return root_cage(b.field, 3, {-beta, -(beta * omega), -(beta * omega * omega)});
}

Cage cube_elliptic_cage() {
  const Field q = Field::rationals();
  return axis_cage(q, {{q.zero(), q.zero(), q.zero()}, {q.one(), q.one(), q.one()}});
}

const std::vector<DemoSpec>& demo_registry() {
  static const std::vector<DemoSpec> registry{
      {"fermat-conic", "x^2 + y^2 - z^2 from a 2x2 cage over Q(sqrt2), lambda = (1, 1)", run_fermat_conic},
      {"k3-quartic", "y0^4 + y1^4 + y2^4 + y3^4 from a 4^3 cage over Q(theta, i), lambda = (1, 1, 1)", run_k3_quartic},
      {"fermat-cubic-surface", "z0^3 + z1^3 + z2^3 + z3^3 from a 3^3 cage over Q(omega, 3^(1/3)), lambda = (1, 1, 1)",
       run_fermat_cubic},
      {"cube-elliptic", "2^3 axis cage on {0,1}^3: quadrics through 7 nodes contain the 8th", run_cube_elliptic},
  };
  return registry;
}

const DemoSpec& find_demo(std::string_view name) {
  for (const auto& spec : demo_registry()) {
    if (spec.name == name) return spec;
  }
  throw LookupError("unknown demo " + std::string(name));
}

VerificationReport run_demo(const DemoSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = spec.run();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_demo(std::string_view name) { return run_demo(find_demo(name)); }

}  // namespace cagekit
