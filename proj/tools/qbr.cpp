// qbr: command-line driver for the finite ring checkers.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qbr/error.hpp"
#include "qbr/jacobson.hpp"
#include "qbr/matrix_qb.hpp"
#include "qbr/parallel.hpp"
#include "qbr/ring_spec.hpp"
#include "qbr/suites.hpp"

using json = nlohmann::json;

namespace {

// Exit codes beyond the report's own 0/1/2.
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;

struct Globals {
  std::string out;
  unsigned jobs = qbr::default_jobs();
  std::uint64_t seed = 1;
  bool no_timing = false;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qbr::Error(qbr::ErrorCode::MalformedSpec, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw qbr::Error(qbr::ErrorCode::MalformedSpec, path + ": " + e.what());
  }
}

void emit(const Globals& g, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw qbr::Error(qbr::ErrorCode::MalformedSpec, "cannot write " + g.out);
  f << text;
}

void summary(const std::vector<qbr::CheckRecord>& checks) {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks)
    std::fprintf(stderr, "%-*s  %-12s %8.3fs\n", static_cast<int>(width), c.name.c_str(),
                 qbr::to_string(c.status), c.seconds);
}

int finish(const Globals& g, const std::string& command, const json& spec, const qbr::FiniteRing* r,
           const std::vector<qbr::CheckRecord>& checks) {
  emit(g, qbr::make_report(command, spec, r, checks, !g.no_timing));
  summary(checks);
  return qbr::exit_code(checks);
}

qbr::Mat2 read_mat(const json& j, const qbr::FiniteRing& base, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw qbr::Error(qbr::ErrorCode::MalformedSpec, std::string(what) + " must be a 2x2 array");
  qbr::Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const auto& e = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= base.order())
        throw qbr::Error(qbr::ErrorCode::MalformedSpec,
                         std::string(what) + " has an entry outside the base ring");
      m.e[static_cast<std::size_t>(2 * i + k)] = static_cast<qbr::Elem>(e.get<std::uint64_t>());
    }
  return m;
}

json mat_json(const qbr::Mat2& m) { return json{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}; }

int cmd_reduce_row(const Globals& g, const std::string& path) {
  const json in = read_json(path);
  if (!in.is_object() || !in.contains("base") || !in.contains("A") || !in.contains("B"))
    throw qbr::Error(qbr::ErrorCode::MalformedSpec, "reduce-row input needs base, A and B");
  const qbr::FiniteRing base = qbr::build_ring(in["base"]);
  const qbr::Mat2Ops m(base);
  const qbr::Mat2 a = read_mat(in["A"], base, "A"), b = read_mat(in["B"], base, "B");
  std::vector<qbr::CheckRecord> checks;
  qbr::CheckRecord rec{"reduce row"};
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<qbr::UnimodularRow> row;
  if (in.contains("X") && in.contains("Y")) {
    row = qbr::UnimodularRow{a, b, read_mat(in["X"], base, "X"), read_mat(in["Y"], base, "Y")};
    qbr::check_certificate(m, *row);
  } else {
    row = qbr::certify_row(m, a, b);
  }
  if (!row) {
    rec.status = qbr::Status::Fail;
    rec.witness = {{"reason", "row is not left unimodular"}};
  } else {
    const qbr::Reduction red = qbr::reduce_row_m2(m, *row);
    json trace = json::array();
    for (const auto& s : red.trace) {
      json w = json::object();
      for (const auto& [k, v] : s.witnesses) w[k] = v;
      trace.push_back({{"stage", s.stage},
                       {"applied", s.applied},
                       {"u", mat_json(s.u)},
                       {"v", mat_json(s.v)},
                       {"c", mat_json(s.c)},
                       {"witnesses", w},
                       {"invariants", s.invariants}});
    }
    rec.witness = {{"X", mat_json(row->x)}, {"Y_certificate", mat_json(row->y)},
                   {"Y", mat_json(red.y)},  {"quasi_inverse", mat_json(red.w)},
                   {"trace", trace}};
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks.push_back(std::move(rec));
  return finish(g, "reduce-row", in, nullptr, checks);
}

int cmd_demo(const Globals& g, unsigned p, unsigned bound, const std::vector<std::string>& evals) {
  namespace J = qbr::jacobson;
  std::vector<qbr::CheckRecord> checks;
  for (const auto& c : J::demo_claims(p, bound, g.seed)) {
    qbr::CheckRecord rec{c.name, c.pass ? qbr::Status::Pass : qbr::Status::Fail};
    rec.witness = {{"detail", c.detail}, {"certificate", c.bounded ? "bounded" : "exact"}};
    checks.push_back(std::move(rec));
  }
  for (const auto& text : evals) {
    const J::JElement e = J::parse(text, p);
    checks.push_back({"eval " + text, qbr::Status::Pass,
                      {{"normal_form", e.to_string()},
                       {"laurent", J::laurent_to_string(J::laurent_image(e))}}});
  }
  const json spec{{"demo", "jacobson"}, {"p", p}, {"bound", bound}};
  return finish(g, "demo jacobson", spec, nullptr, checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-invertibility and stable rank checks on finite rings"};
  app.require_subcommand(0, 1);
  Globals g;
  bool list_suites = false;
  app.add_option("--out", g.out, "write the JSON report here instead of stdout");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_flag("--no-timing", g.no_timing, "omit wall times from the report");
  app.add_flag("--list-suites", list_suites, "print suite names and what they check");

  std::string spec_path, property, set, suite = "all";
  auto* check = app.add_subcommand("check", "decide one ring property");
  check->add_option("spec", spec_path, "ring spec JSON")->required();
  check->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"b", "qb", "qb-nonunital", "exchange", "semiprime", "prime"}));

  auto* sets = app.add_subcommand("sets", "list a distinguished subset");
  sets->add_option("spec", spec_path, "ring spec JSON")->required();
  sets->add_option("--set", set)
      ->required()
      ->check(CLI::IsMember({"units", "qinv", "regular", "idempotents", "radical", "maxreg"}));

  auto* verify = app.add_subcommand("verify", "run a checker suite");
  verify->add_option("spec", spec_path, "ring spec JSON")->required();
  verify->add_option("--suite", suite, "suite name or 'all'");

  unsigned p = 2, bound = 6;
  std::vector<std::string> evals;
  auto* demo = app.add_subcommand("demo", "infinite examples");
  auto* jac = demo->add_subcommand("jacobson", "F_p<x, y | xy = 1>");
  demo->require_subcommand(1);
  jac->add_option("--p", p, "prime characteristic");
  jac->add_option("--bound", bound, "degree bound for bounded certificates");
  jac->add_option("--eval", evals, "literal to normalize, e.g. \"y^2 x + 3 y\"");

  std::string row_path;
  auto* reduce = app.add_subcommand("reduce-row", "reduce a unimodular row over M2(R)");
  reduce->add_option("input", row_path, "JSON with base, A, B and optional X, Y")->required();

  for (auto* sc : {check, sets, verify, demo, reduce}) sc->fallthrough();
  jac->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (list_suites) {
      for (const auto& s : qbr::suite_catalog()) std::cout << s.name << "\t" << s.checks << "\n";
      return 0;
    }
    if (*reduce) return cmd_reduce_row(g, row_path);
    if (*jac) return cmd_demo(g, p, bound, evals);
    if (!*check && !*sets && !*verify) {
      std::cerr << app.help();
      return kExitParse;
    }
    const json spec = read_json(spec_path);
    const qbr::FiniteRing r = qbr::build_ring(spec);
    std::vector<qbr::CheckRecord> checks;
    std::string command;
    if (*check) {
      command = "check " + property;
      checks.push_back(qbr::run_property(property, r));
    } else if (*sets) {
      command = "sets " + set;
      checks.push_back(qbr::run_set(set, r));
    } else {
      command = "verify " + suite;
      checks = qbr::run_suite(suite, r, {g.seed, g.jobs});
    }
    return finish(g, command, spec, &r, checks);
  } catch (const qbr::Error& e) {
    std::cerr << "qbr: " << e.what() << "\n";
    switch (e.code()) {
      case qbr::ErrorCode::OrderCapExceeded:
      case qbr::ErrorCode::ScaleCapExceeded:
      case qbr::ErrorCode::IdealCapExceeded:
        return 2;
      case qbr::ErrorCode::MalformedSpec:
      case qbr::ErrorCode::ForeignElement:
      case qbr::ErrorCode::NotIdempotent:
      case qbr::ErrorCode::PreconditionViolated:
        return kExitParse;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "qbr: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
