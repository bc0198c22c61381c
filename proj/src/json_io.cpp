#include "cagekit/json_io.hpp"

#include "cagekit/errors.hpp"

namespace cagekit::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing member \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const char* key) { return path + "." + key; }

std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

void check_schema(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != kSchema)) {
    fail(dot(path, "schema"), std::string("unsupported schema, expected \"") + kSchema + "\"");
  }
}

Rational rational_from_json(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const DivisionByZero& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational as a string \"n/d\" or an integer");
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& path) {
  std::vector<Rational> out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], at(path, i)));
  return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(source + ": malformed JSON (" + e.what() + ")");
  }
}

json field_to_json(const Field& field) {
  if (field.is_rational()) return json{{"kind", "rationals"}};
  const auto& d = field.descriptor();
  json out{{"kind", "extension"}, {"label", d.label}, {"min_poly", rationals_to_json(d.min_poly)}};
  if (d.conjugation) out["conjugation"] = rationals_to_json(*d.conjugation);
  return out;
}

Field field_from_json(const json& j, const std::string& path) {
  const json& kind = member(j, "kind", path);
  if (!kind.is_string()) fail(dot(path, "kind"), "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rationals") return Field::rationals();
  if (k != "extension") fail(dot(path, "kind"), "unknown field kind \"" + k + "\"");
  auto min_poly = rationals_from_json(member(j, "min_poly", path), dot(path, "min_poly"));
  std::string label;
  if (auto it = j.find("label"); it != j.end() && it->is_string()) label = it->get<std::string>();
  std::optional<std::vector<Rational>> conj;
  if (auto it = j.find("conjugation"); it != j.end()) conj = rationals_from_json(*it, dot(path, "conjugation"));
  try {
    return Field::extension(std::move(min_poly), std::move(label), std::move(conj));
  } catch (const PreconditionError& e) {
    fail(dot(path, "min_poly"), e.what());
  }
}

json element_to_json(const FieldElement& x) {
  if (x.field().is_rational()) return x.rational_value().to_string();
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(c.to_string());
  return out;
}

FieldElement element_from_json(const Field& field, const json& j, const std::string& path) {
  if (!j.is_array()) return field.from_rational(rational_from_json(j, path));
  if (field.is_rational()) fail(path, "coefficient arrays need an extension field");
  auto coeffs = rationals_from_json(j, path);
  if (coeffs.size() > field.degree()) fail(path, "more coefficients than the field degree");
  return field.element(std::move(coeffs));
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(element_to_json(x));
  return out;
}

Vector vector_from_json(const Field& field, const json& j, const std::string& path) {
  Vector out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(element_from_json(field, arr[i], at(path, i)));
  return out;
}

json poly_to_json(const HomogPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", m.exponents}, {"coeff", element_to_json(c)}});
  return json{{"vars", p.num_vars()}, {"degree", p.degree()}, {"terms", std::move(terms)}};
}

HomogPoly poly_from_json(const Field& field, const json& j, const std::string& path) {
  const auto vars = integer(member(j, "vars", path), dot(path, "vars"));
  const auto degree = integer(member(j, "degree", path), dot(path, "degree"));
  if (vars < 1 || degree < 0) fail(path, "vars must be positive and degree non-negative");
  HomogPoly p(field, static_cast<std::size_t>(vars), static_cast<unsigned>(degree));
  const std::string tpath = dot(path, "terms");
  const json& terms = array_at(member(j, "terms", path), tpath);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string ipath = at(tpath, i);
    const json& e = array_at(member(terms[i], "exp", ipath), dot(ipath, "exp"));
    Monomial m;
    for (std::size_t v = 0; v < e.size(); ++v) {
      const auto x = integer(e[v], at(dot(ipath, "exp"), v));
      if (x < 0) fail(at(dot(ipath, "exp"), v), "negative exponent");
      m.exponents.push_back(static_cast<unsigned>(x));
    }
    if (m.exponents.size() != static_cast<std::size_t>(vars)) fail(dot(ipath, "exp"), "wrong number of exponents");
    try {
      p.add_term(m, element_from_json(field, member(terms[i], "coeff", ipath), dot(ipath, "coeff")));
    } catch (const DegreeOverflow& err) {
      fail(ipath, err.what());
    }
  }
  return p;
}

json cage_to_json(const Cage& c) {
  json groups = json::array();
  for (const auto& group : c.groups()) {
    json g = json::array();
    for (const auto& form : group) g.push_back(vector_to_json(form.coeffs()));
    groups.push_back(std::move(g));
  }
  return json{{"schema", kSchema}, {"n", c.n()}, {"d", c.d()}, {"field", field_to_json(c.field())}, {"groups", std::move(groups)}};
}

Cage cage_from_json(const json& j, const std::string& path) {
  check_schema(j, path);
  const auto n = integer(member(j, "n", path), dot(path, "n"));
  const auto d = integer(member(j, "d", path), dot(path, "d"));
  if (n < 1 || d < 1) fail(path, "n and d must be positive");
  const Field field = j.contains("field") ? field_from_json(j["field"], dot(path, "field")) : Field::rationals();
  const std::string gpath = dot(path, "groups");
  const json& groups = array_at(member(j, "groups", path), gpath);
  if (groups.size() != static_cast<std::size_t>(n)) fail(gpath, "expected n colour groups");
  std::vector<std::vector<LinearForm>> out;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const json& group = array_at(groups[c], at(gpath, c));
    if (group.size() != static_cast<std::size_t>(d)) fail(at(gpath, c), "expected d forms");
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < group.size(); ++i) {
      const std::string fpath = at(at(gpath, c), i);
      Vector coeffs = vector_from_json(field, group[i], fpath);
      if (coeffs.size() != static_cast<std::size_t>(n + 1)) fail(fpath, "expected n + 1 coefficients");
      if (is_zero_vector(coeffs)) fail(fpath, "linear form with all coefficients zero");
      forms.emplace_back(std::move(coeffs));
    }
    out.push_back(std::move(forms));
  }
  return Cage(field, std::move(out));
}

json multi_index_to_json(const MultiIndex& index) { return index.entries; }

MultiIndex multi_index_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return MultiIndex::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  MultiIndex out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.entries.push_back(static_cast<int>(integer(arr[i], at(path, i))));
  return out;
}

json nodes_to_json(const Cage& c) {
  json nodes = json::array();
  for (const auto& node : c.nodes()) {
    nodes.push_back({{"index", multi_index_to_json(node.index)}, {"point", vector_to_json(node.point)}});
  }
  return json{{"schema", kSchema}, {"n", c.n()}, {"d", c.d()}, {"nodes", std::move(nodes)}};
}

json validation_to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) {
    json i{{"kind", issue.kind}, {"index", multi_index_to_json(issue.index)}, {"message", issue.message}};
    if (issue.other) i["other"] = multi_index_to_json(*issue.other);
    issues.push_back(std::move(i));
  }
  return json{{"schema", kSchema}, {"valid", report.valid}, {"node_count", report.node_count}, {"issues", std::move(issues)}};
}

json variety_to_json(const Cage& c, const LambdaMatrix& lambda) {
  json rows = json::array();
  for (const auto& row : lambda.rows) rows.push_back(vector_to_json(row));
  return json{{"schema", kSchema}, {"cage", cage_to_json(c)}, {"lambda", std::move(rows)}, {"s", lambda.s()}};
}

Variety variety_from_json(const json& j, const std::string& path) {
  check_schema(j, path);
  Variety v{cage_from_json(member(j, "cage", path), dot(path, "cage")), {}};
  const std::string lpath = dot(path, "lambda");
  const json& rows = array_at(member(j, "lambda", path), lpath);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vector row = vector_from_json(v.cage.field(), rows[r], at(lpath, r));
    if (row.size() != static_cast<std::size_t>(v.cage.n())) fail(at(lpath, r), "lambda rows need n entries");
    v.lambda.rows.push_back(std::move(row));
  }
  if (v.lambda.rows.empty()) fail(lpath, "lambda needs at least one row");
  if (auto it = j.find("s"); it != j.end() && integer(*it, dot(path, "s")) != static_cast<std::int64_t>(v.lambda.s())) {
    fail(dot(path, "s"), "s disagrees with the number of lambda rows");
  }
  return v;
}

json tangent_to_json(const TangentSubspace& tau) {
  json basis = json::array();
  for (const auto& v : tau.basis.vectors) basis.push_back(vector_to_json(v));
  return json{{"schema", kSchema}, {"node", multi_index_to_json(tau.node.index)}, {"chart", tau.chart}, {"basis", std::move(basis)}};
}

TangentSubspace tangent_from_json(const Cage& c, const json& j, const std::string& path) {
  check_schema(j, path);
  const MultiIndex index = multi_index_from_json(member(j, "node", path), dot(path, "node"));
  const Node& node = c.node(index);
  const std::string bpath = dot(path, "basis");
  const json& basis = array_at(member(j, "basis", path), bpath);
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    vectors.push_back(vector_from_json(c.field(), basis[i], at(bpath, i)));
    if (vectors.back().size() != static_cast<std::size_t>(c.n())) fail(at(bpath, i), "tangent vectors need n entries");
  }
  if (auto it = j.find("chart"); it != j.end() && integer(*it, dot(path, "chart")) != static_cast<std::int64_t>(node.chart())) {
    fail(dot(path, "chart"), "chart disagrees with the node's chart");
  }
  return make_tangent(node, vectors);
}

json report_to_json(const VerificationReport& report, bool include_timing) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    json c{{"name", check.name}, {"pass", check.pass}, {"ranks", check.ranks}};
    if (check.witness) c["witness"] = poly_to_json(*check.witness);
    if (check.witness_node) c["witness_node"] = multi_index_to_json(*check.witness_node);
    if (!check.detail.empty()) c["detail"] = check.detail;
    checks.push_back(std::move(c));
  }
  json out{{"schema", kSchema}, {"name", report.name}, {"cage", report.cage_summary}, {"passed", report.passed()},
           {"checks", std::move(checks)}};
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

VerificationReport report_from_json(const Field& field, const json& j, const std::string& path) {
  check_schema(j, path);
  VerificationReport r;
  auto str = [&](const json& obj, const char* key, const std::string& p) {
    const json& v = member(obj, key, p);
    if (!v.is_string()) fail(dot(p, key), "expected a string");
    return v.get<std::string>();
  };
  r.name = str(j, "name", path);
  r.cage_summary = str(j, "cage", path);
  if (auto it = j.find("elapsed_ms"); it != j.end() && it->is_number()) r.elapsed_ms = it->get<double>();
  const std::string cpath = dot(path, "checks");
  const json& checks = array_at(member(j, "checks", path), cpath);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = at(cpath, i);
    CheckResult c;
    c.name = str(checks[i], "name", p);
    const json& pass = member(checks[i], "pass", p);
    if (!pass.is_boolean()) fail(dot(p, "pass"), "expected a boolean");
    c.pass = pass.get<bool>();
    const json& ranks = member(checks[i], "ranks", p);
    if (!ranks.is_object()) fail(dot(p, "ranks"), "expected an object");
    for (const auto& [key, value] : ranks.items()) c.ranks[key] = integer(value, dot(p, "ranks") + "." + key);
    if (auto it = checks[i].find("witness"); it != checks[i].end()) c.witness = poly_from_json(field, *it, dot(p, "witness"));
    if (auto it = checks[i].find("witness_node"); it != checks[i].end()) {
      c.witness_node = multi_index_from_json(*it, dot(p, "witness_node"));
    }
    if (auto it = checks[i].find("detail"); it != checks[i].end()) c.detail = str(checks[i], "detail", p);
    r.checks.push_back(std::move(c));
  }
  return r;
}

json identity_to_json(const IdentityReport& report) {
  json rows = json::array();
  for (const auto& r : report.results) rows.push_back({{"k", r.k}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds()}});
  return json{{"schema", kSchema}, {"name", report.name}, {"holds", report.holds()}, {"results", std::move(rows)}};
}

json configuration_to_json(const Configuration& q) {
  json points = json::array();
  for (const auto& p : q.points) points.push_back(vector_to_json(p));
  return json{{"schema", kSchema}, {"field", field_to_json(q.field)}, {"points", std::move(points)}};
}

Configuration configuration_from_json(const json& j, const std::string& path) {
  check_schema(j, path);
  Configuration q{j.contains("field") ? field_from_json(j["field"], dot(path, "field")) : Field::rationals(), {}};
  const std::string ppath = dot(path, "points");
  const json& points = array_at(member(j, "points", path), ppath);
  for (std::size_t i = 0; i < points.size(); ++i) q.points.push_back(vector_from_json(q.field, points[i], at(ppath, i)));
  return q;
}

}  // namespace cagekit::io
