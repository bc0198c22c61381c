#include "cagekit/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "cagekit/demos.hpp"
#include "cagekit/errors.hpp"
#include "cagekit/json_io.hpp"

namespace cagekit {

namespace {

namespace fs = std::filesystem;
using io::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json load_json(const std::string& path) { return io::parse_text(read_file(path), path); }

// Schema errors carry the JSON path; prefix the file they came from.
template <class F>
auto from_file(const std::string& file, F parse) {
  try {
    return parse();
  } catch (const SchemaError& e) {
    throw SchemaError(file + ": " + e.what());
  }
}

void write_atomic(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    write_atomic(out_path, text);
  }
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

json stamped(json j, bool timestamp) {
  if (timestamp) j["generated_at"] = utc_now();
  return j;
}

Field resolve_field(const std::string& spec) {
  if (spec.empty() || spec == "Q" || spec == "rationals") return Field::rationals();
  for (const auto& name : builtin_field_names()) {
    if (spec == name) return builtin_field(name).field;
  }
  return from_file(spec, [&] { return io::field_from_json(load_json(spec)); });
}

Cage load_validated(const std::string& path, ValidationReport* report_out = nullptr) {
  Cage cage = from_file(path, [&] { return io::cage_from_json(load_json(path)); });
  ValidationReport report = cage.validate();
  if (report_out) *report_out = report;
  return cage;
}

Vector parse_vector(const Field& field, const std::string& text) {
  Vector v;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) v.push_back(field.from_rational(Rational::parse(part)));
  return v;
}

std::string invalid_message(const std::string& path, const ValidationReport& report) {
  std::string msg = path + ": cage failed validation";
  for (const auto& issue : report.issues) msg += "\n  " + issue.kind + ": " + issue.message;
  return msg;
}

VerificationReport validation_failure_report(const Cage& cage, const ValidationReport& v) {
  VerificationReport r{"cage-suite", cage.summary(), {}, 0};
  CheckResult c{"validation", false, {{"issues", static_cast<std::int64_t>(v.issues.size())}}, {}, {}, {}};
  if (!v.issues.empty()) {
    c.witness_node = v.issues.front().index;
    for (const auto& issue : v.issues) c.detail += (c.detail.empty() ? "" : "; ") + issue.kind + " at " + issue.index.to_string();
  }
  r.checks.push_back(std::move(c));
  return r;
}

struct Options {
  std::string kind = "random";
  std::uint64_t seed = 0;
  int n = 2;
  int d = 2;
  std::string field;
  std::string points;
  std::string out_path;
  std::vector<std::string> inputs;
  std::string out_dir;
  bool no_timestamp = false;
  std::string selection = "all";
  int max_k = -1;
  std::string node;
  std::vector<std::string> tangent;
  int s = -1;
  std::string demo;
  bool list = false;
  std::string box;
  int resolution = 11;
};

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.kind == "random") {
    GeneratedCage g = random_cage(o.seed, o.d, o.n, resolve_field(o.field));
    err << "random cage accepted after " << g.attempts << " attempt(s)\n";
    emit(io::cage_to_json(g.cage), o.out_path, out);
    return kPass;
  }
  if (o.points.empty()) throw Error("--points is required for --kind " + o.kind);
  json qj = load_json(o.points);
  if (!o.field.empty()) qj["field"] = io::field_to_json(resolve_field(o.field));
  const Configuration q = from_file(o.points, [&] { return io::configuration_from_json(qj); });
  if (o.kind == "axis") {
    q.validate();
    emit(io::cage_to_json(axis_cage(q.field, q.points)), o.out_path, out);
    return kPass;
  }
  if (o.kind == "viete") {
    CoefficientCage cc = coefficient_cage(q);
    if (!cc.report.valid) {
      err << invalid_message("coefficient cage", cc.report) << "\n";
      emit(io::validation_to_json(cc.report), "", err);
      return kFail;
    }
    emit(io::cage_to_json(cc.cage), o.out_path, out);
    return kPass;
  }
  throw Error("unknown --kind " + o.kind + " (expected random, axis or viete)");
}

int cmd_validate(const Options& o, std::ostream& out) {
  ValidationReport report;
  load_validated(o.inputs.front(), &report);
  emit(io::validation_to_json(report), o.out_path, out);
  return report.valid ? kPass : kFail;
}

int cmd_nodes(const Options& o, std::ostream& out, std::ostream& err) {
  ValidationReport report;
  Cage cage = load_validated(o.inputs.front(), &report);
  if (!report.valid) {
    err << invalid_message(o.inputs.front(), report) << "\n";
    return kFail;
  }
  emit(io::nodes_to_json(cage), o.out_path, out);
  return kPass;
}

json verify_one(const std::string& path, bool timestamp, bool& passed) {
  ValidationReport v;
  Cage cage = load_validated(path, &v);
  const VerificationReport report = v.valid ? verify_cage(cage) : validation_failure_report(cage, v);
  passed = report.passed();
  json j = io::report_to_json(report, timestamp);
  j["input"] = path;
  return stamped(std::move(j), timestamp);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const bool timestamp = !o.no_timestamp;
  struct Outcome {
    json report;
    bool passed = false;
    std::string error;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& path : o.inputs) {
    jobs.push_back(std::async(std::launch::async, [path, timestamp] {
      Outcome r;
      try {
        r.report = verify_one(path, timestamp, r.passed);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    }));
  }
  int code = kPass;
  json all = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Outcome r = jobs[i].get();
    const std::string& path = o.inputs[i];
    if (!r.error.empty()) {
      err << path << ": " << r.error << "\n";
      code = kError;
      continue;
    }
    if (!r.passed) {
      if (code == kPass) code = kFail;
      for (const auto& check : r.report["checks"]) {
        if (!check["pass"].get<bool>()) {
          err << path << ": check " << check["name"].get<std::string>() << " failed";
          if (check.contains("detail")) err << " (" << check["detail"].get<std::string>() << ")";
          err << "\n";
        }
      }
    }
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      write_atomic(fs::path(o.out_dir) / (fs::path(path).stem().string() + ".report.json"), r.report.dump(2) + "\n");
    } else {
      all.push_back(std::move(r.report));
    }
  }
  if (o.out_dir.empty()) {
    if (all.size() == 1) {
      emit(all.front(), o.out_path, out);
    } else if (!all.empty()) {
      emit(all, o.out_path, out);
    }
  }
  return code;
}

NodeSelection selection_named(const std::string& name, int d, int n) {
  if (name == "all") return all_node_indices(d, n);
  if (name == "simplicial") return simplicial_indices(d, n);
  if (name == "supra" || name == "supra-simplicial") return supra_simplicial_indices(d, n);
  throw Error("unknown --selection " + name + " (expected all, simplicial or supra)");
}

int cmd_hilbert(const Options& o, std::ostream& out, std::ostream& err) {
  ValidationReport v;
  Cage cage = load_validated(o.inputs.front(), &v);
  if (!v.valid) {
    err << invalid_message(o.inputs.front(), v) << "\n";
    return kFail;
  }
  const auto nodes = cage.nodes(selection_named(o.selection, cage.d(), cage.n()));
  const int max_k = o.max_k >= 0 ? o.max_k : static_cast<int>(nodes.size());
  const auto table = hilbert_table(nodes, max_k);
  json rows = json::array();
  for (std::size_t k = 0; k < table.size(); ++k) rows.push_back({{"k", k}, {"h", table[k]}});
  emit(json{{"schema", io::kSchema}, {"selection", o.selection}, {"points", nodes.size()}, {"table", std::move(rows)}},
       o.out_path, out);
  return kPass;
}

struct InscribeInput {
  Cage cage;
  const Node* node = nullptr;
  TangentSubspace tau;
};

InscribeInput inscribe_input(const Options& o) {
  ValidationReport v;
  InscribeInput in{load_validated(o.inputs.front(), &v), nullptr, {}};
  if (!v.valid) throw InvalidConfiguration(invalid_message(o.inputs.front(), v));
  if (o.node.empty()) throw Error("--node is required");
  in.node = &in.cage.node(MultiIndex::parse(o.node));
  std::vector<Vector> vectors;
  for (const auto& t : o.tangent) vectors.push_back(parse_vector(in.cage.field(), t));
  in.tau = make_tangent(*in.node, vectors);
  const int s = in.cage.n() - static_cast<int>(in.tau.dim());
  if (o.s >= 0 && o.s != s) {
    throw ShapeError("--s " + std::to_string(o.s) + " disagrees with the tangent dimension (n - dim = " +
                     std::to_string(s) + ")");
  }
  return in;
}

int cmd_inscribe(const Options& o, std::ostream& out) {
  InscribeInput in = inscribe_input(o);
  const LambdaMatrix v = inscribe_with_tangent(in.cage, *in.node, in.tau);
  emit(io::variety_to_json(in.cage, v), o.out_path, out);
  return kPass;
}

int cmd_propagate(const Options& o, std::ostream& out) {
  InscribeInput in = inscribe_input(o);
  const Propagation p = propagate_tangents(in.cage, *in.node, in.tau);
  json tangents = json::array();
  tangents.push_back(io::tangent_to_json(in.tau));
  for (const auto& [index, tau] : p.tangents) tangents.push_back(io::tangent_to_json(tau));
  emit(json{{"schema", io::kSchema}, {"variety", io::variety_to_json(in.cage, p.variety)}, {"source", in.node->index.entries},
            {"tangents", std::move(tangents)}},
       o.out_path, out);
  return kPass;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  const VerificationReport r = independence_counterexample();
  emit(stamped(io::report_to_json(r, !o.no_timestamp), !o.no_timestamp), o.out_path, out);
  return r.passed() ? kPass : kFail;
}

int cmd_demo(const Options& o, std::ostream& out) {
  if (o.list || o.demo.empty()) {
    for (const auto& spec : demo_registry()) out << spec.name << "\t" << spec.summary << "\n";
    return kPass;
  }
  const VerificationReport r = run_demo(o.demo);
  emit(stamped(io::report_to_json(r, !o.no_timestamp), !o.no_timestamp), o.out_path, out);
  return r.passed() ? kPass : kFail;
}

int cmd_sample_grid(const Options& o, std::ostream& out, std::ostream& err) {
  io::Variety v = from_file(o.inputs.front(), [&] { return io::variety_from_json(load_json(o.inputs.front())); });
  if (!v.cage.field().is_rational()) throw PreconditionError("sample-grid needs a variety over the rationals");
  const int n = v.cage.n();
  if (n > 3) throw PreconditionError("sample-grid supports n <= 3");
  if (o.resolution < 2) throw OutOfRange("--resolution must be at least 2");
  const Field& q = v.cage.field();
  const Vector box = parse_vector(q, o.box);
  if (box.size() != 2 * static_cast<std::size_t>(n)) {
    throw ShapeError("--box needs " + std::to_string(2 * n) + " values lo,hi per affine coordinate");
  }
  const auto polys = pencils(v.cage, v.lambda);
  const auto steps = static_cast<std::size_t>(o.resolution);

  std::vector<Vector> axes(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < axes.size(); ++j) {
    const FieldElement& lo = box[2 * j];
    const FieldElement& hi = box[2 * j + 1];
    for (std::size_t i = 0; i < steps; ++i) {
      axes[j].push_back(lo + (hi - lo) * q.from_rational(normalize(static_cast<long long>(i), static_cast<long long>(steps - 1))));
    }
  }
  err << "sample-grid: values are floating-point approximations of exact evaluations\n";

  std::ostringstream csv;
  csv << "x,y,z,value\n" << std::setprecision(12);
  std::vector<std::size_t> counter(static_cast<std::size_t>(n), 0);
  while (true) {
    Vector point;
    for (std::size_t j = 0; j < counter.size(); ++j) point.push_back(axes[j][counter[j]]);
    point.push_back(q.one());
    FieldElement value = q.zero();
    if (polys.size() == 1) {
      value = polys.front().evaluate(point);
    } else {
      for (const auto& f : polys) {
        const FieldElement y = f.evaluate(point);
        value += y * y;
      }
    }
    for (int j = 0; j < 3; ++j) {
      csv << (j < n ? point[static_cast<std::size_t>(j)].rational_value().to_double() : 0.0) << ",";
    }
    csv << value.rational_value().to_double() << "\n";
    int pos = n - 1;
    while (pos >= 0 && ++counter[static_cast<std::size_t>(pos)] == steps) counter[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  if (o.out_path.empty() || o.out_path == "-") {
    out << csv.str();
  } else {
    write_atomic(o.out_path, csv.str());
  }
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with d^n-cages: nodes, interpolation checks, inscribed varieties."};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&o](CLI::App* sub) { sub->add_option("-o,--out", o.out_path, "Output file (default stdout)"); };
  auto add_input = [&o](CLI::App* sub) { sub->add_option("cage", o.inputs, "Cage JSON file")->required()->expected(1); };
  auto add_tangent = [&o](CLI::App* sub) {
    sub->add_option("--node", o.node, "Node index, e.g. \"1,2\"")->required();
    sub->add_option("--tangent", o.tangent, "Chart-local tangent vector, e.g. \"1,2\" (repeatable)");
    sub->add_option("--s", o.s, "Codimension; must equal n minus the tangent dimension");
  };

  auto* gen = app.add_subcommand("gen", "Generate a cage");
  gen->add_option("--kind", o.kind, "random, axis or viete")->check(CLI::IsMember({"random", "axis", "viete"}));
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--n", o.n, "Dimension")->check(CLI::Range(1, 16));
  gen->add_option("--d", o.d, "Hyperplanes per colour")->check(CLI::Range(1, 64));
  gen->add_option("--field", o.field, "Builtin field name or field JSON file (default Q)");
  gen->add_option("--points", o.points, "Configuration JSON for axis and viete cages");
  add_out(gen);

  auto* validate = app.add_subcommand("validate", "Validate a cage");
  add_input(validate);
  add_out(validate);

  auto* nodes = app.add_subcommand("nodes", "List the nodes of a cage");
  add_input(nodes);
  add_out(nodes);

  auto* verify = app.add_subcommand("verify", "Run the verification suite on one or more cages");
  verify->add_option("cages", o.inputs, "Cage JSON files")->required();
  verify->add_option("--out-dir", o.out_dir, "Write <stem>.report.json per input here");
  verify->add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps and timings");
  add_out(verify);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table of a node selection");
  add_input(hilbert);
  hilbert->add_option("--selection", o.selection, "all, simplicial or supra");
  hilbert->add_option("--max-k", o.max_k, "Largest degree (default: number of points)");
  add_out(hilbert);

  auto* inscribe = app.add_subcommand("inscribe", "Inscribe the variety with a prescribed tangent at a node");
  add_input(inscribe);
  add_tangent(inscribe);
  add_out(inscribe);

  auto* propagate = app.add_subcommand("propagate", "Tangent spaces induced at every node");
  add_input(propagate);
  add_tangent(propagate);
  add_out(propagate);

  auto* counter = app.add_subcommand("counterexample", "13 nodes that do not impose independent conditions");
  counter->add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps and timings");
  add_out(counter);

  auto* demo = app.add_subcommand("demo", "Run a named demo");
  demo->add_option("name", o.demo, "Demo name");
  demo->add_flag("--list", o.list, "List demos");
  demo->add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps and timings");
  add_out(demo);

  auto* grid = app.add_subcommand("sample-grid", "Sample a variety on a box as CSV");
  grid->add_option("variety", o.inputs, "Variety JSON file")->required()->expected(1);
  grid->add_option("--box", o.box, "lo,hi per affine coordinate, e.g. \"-2,2,-2,2\"")->required();
  grid->add_option("--resolution", o.resolution, "Samples per axis");
  grid->add_flag("--no-timestamp", o.no_timestamp, "Accepted for symmetry; the CSV carries no timestamp");
  add_out(grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kError;
  }

  try {
    if (*gen) return cmd_gen(o, out, err);
    if (*validate) return cmd_validate(o, out);
    if (*nodes) return cmd_nodes(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*hilbert) return cmd_hilbert(o, out, err);
    if (*inscribe) return cmd_inscribe(o, out);
    if (*propagate) return cmd_propagate(o, out);
    if (*counter) return cmd_counterexample(o, out);
    if (*demo) return cmd_demo(o, out);
    if (*grid) return cmd_sample_grid(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace cagekit
