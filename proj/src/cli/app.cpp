#include "rsstl/cli/app.hpp"

#include "rsstl/cli/manifest.hpp"
#include "rsstl/cli/plot.hpp"
#include "rsstl/cli/run_config.hpp"
#include "rsstl/falsify/anneal.hpp"
#include "rsstl/falsify/batch.hpp"
#include "rsstl/falsify/classify.hpp"
#include "rsstl/falsify/results.hpp"
#include "rsstl/rss/formulas.hpp"
#include "rsstl/rss/lane.hpp"
#include "rsstl/sim/simulator.hpp"
#include "rsstl/stl/monitor.hpp"
#include "rsstl/stl/parser.hpp"
#include "rsstl/util/format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace rsstl::cli {

namespace {

using util::format_double;

struct Globals {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> args;

  std::string out_or_cwd() const { return out_dir.empty() ? "." : out_dir; }
  std::string path(const std::string& name) const { return (std::filesystem::path(out_or_cwd()) / name).string(); }
};

struct Run {
  const Globals& g;
  RunConfig cfg;
  Manifest manifest;

  Run(const Globals& globals, std::string command) : g(globals) {
    if (!g.config_path.empty()) {
      cfg = load_run_config(g.config_path);
      manifest.add_input(g.config_path);
    }
    manifest.command = std::move(command);
    manifest.args = g.args;
    manifest.seed = g.seed;
    manifest.config = to_json(cfg);
  }

  void emit(const std::string& name, const std::string& bytes) {
    write_file(g.path(name), bytes);
    manifest.add_output(name, bytes);
  }

  void finish() { write_file(g.path("manifest.json"), manifest.to_json().dump(2) + "\n"); }
};

std::string trace_csv(const stl::Trace& t) {
  std::ostringstream o;
  t.write_csv(o);
  return o.str();
}

std::string records_csv(const std::vector<falsify::SearchRecord>& r) { return falsify::results_csv(r); }

// --- monitor ---------------------------------------------------------------

struct MonitorArgs {
  std::string trace;
  std::string formula;
  std::string formula_file;
};

int cmd_monitor(const Globals& g, const MonitorArgs& a, std::ostream& out) {
  if (a.formula.empty() == a.formula_file.empty())
    throw std::invalid_argument("monitor: give exactly one of --formula and --formula-file");
  const std::string text = a.formula.empty() ? read_file(a.formula_file) : a.formula;
  const auto phi = stl::parse_formula(text);
  const auto trace = stl::Trace::read_csv_file(a.trace);
  stl::check_channels(phi, trace);
  const auto rep = stl::blame(phi, trace);
  const bool sat = !falsify::is_violation(rep.robustness);

  std::ostringstream o;
  o << "robustness: " << format_double(rep.robustness) << "\n";
  o << "verdict: " << (sat ? "SAT" : "FALSIFIED") << "\n";
  o << "blamed atom: " << (rep.blamed_atom.empty() ? falsify::kNoAtom : rep.blamed_atom) << "\n";
  if (rep.critical_sample) {
    o << "critical sample: " << *rep.critical_sample << "\n";
    o << "critical time: " << format_double(static_cast<double>(*rep.critical_sample) * trace.dt()) << "\n";
  }
  out << o.str();

  if (!g.out_dir.empty()) {
    Run run(g, "monitor");
    run.manifest.add_input(a.trace);
    if (!a.formula_file.empty()) run.manifest.add_input(a.formula_file);
    nlohmann::json j{{"formula", text},
                     {"robustness", format_double(rep.robustness)},
                     {"verdict", sat ? "SAT" : "FALSIFIED"},
                     {"blamed_atom", rep.blamed_atom}};
    if (rep.critical_sample) j["critical_sample"] = *rep.critical_sample;
    run.emit("monitor.json", j.dump(2) + "\n");
    run.finish();
  }
  return sat ? kOk : kViolation;
}

// --- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string scenario;
  bool plot = false;
};

int cmd_simulate(const Globals& g, const SimulateArgs& a, std::ostream& out) {
  Run run(g, "simulate");
  const auto s = load_scenario(a.scenario);
  run.manifest.add_input(a.scenario);
  const auto obj = run.cfg.objective(falsify::SpecKind::Rss);
  const auto world = sim::simulate(s, obj.sim, obj.box);
  const auto lane = rss::to_lane_coordinates(world, obj.sim);
  const auto preds = rss::build_predicate_trace(lane, obj.rss, obj.predicate_options());

  run.emit("world.csv", world.to_csv());
  run.emit("lane.csv", trace_csv(lane.to_trace()));
  run.emit("predicates.csv", trace_csv(preds));
  if (a.plot) run.emit("trajectory.svg", trajectory_svg(world, obj.sim));
  run.finish();

  const auto rep = stl::blame(rss::rss_formula(obj.rss), preds);
  const double cas = stl::eval_robustness(rss::cas_formula(obj.cas), preds, 0);
  out << "samples: " << world.size() << "\n";
  out << "rob_rss: " << format_double(rep.robustness) << "\n";
  out << "rob_cas: " << format_double(cas) << "\n";
  out << "blamed atom: " << (rep.blamed_atom.empty() ? falsify::kNoAtom : rep.blamed_atom) << "\n";
  if (lane.any_off_road()) out << "note: a vehicle left the road\n";
  out << "wrote " << g.out_or_cwd() << "\n";
  return kOk;
}

// --- sample / falsify ------------------------------------------------------

int cmd_sample(const Globals& g, std::size_t n, std::ostream& out) {
  Run run(g, "sample");
  const auto recs = falsify::uniform_batch(n, g.seed, run.cfg.objective(falsify::SpecKind::Rss), g.jobs);
  const auto table = falsify::classify_batch(recs);
  run.emit("results.csv", records_csv(recs));
  run.emit("report.txt", table.to_text());
  run.emit("report.json", table.to_json().dump(2) + "\n");
  run.finish();
  out << table.to_text();
  return kOk;
}

struct FalsifyArgs {
  std::string spec = "rss";
  std::size_t iters = 300;
  bool plot = false;
};

int cmd_falsify(const Globals& g, const FalsifyArgs& a, std::ostream& out) {
  Run run(g, "falsify");
  const auto kind = falsify::parse_spec_kind(a.spec);
  const auto obj = run.cfg.objective(kind);
  const auto res = falsify::simulated_annealing(obj, a.iters, g.seed, run.cfg.sa);
  const bool found = falsify::is_violation(res.best.value(kind));

  std::size_t violating = 0;
  for (const auto& r : res.history) violating += falsify::is_violation(r.value(kind)) ? 1 : 0;
  nlohmann::json best{{"spec", falsify::to_string(kind)},
                      {"rob_rss", format_double(res.best.rob_rss)},
                      {"rob_cas", format_double(res.best.rob_cas)},
                      {"blamed_atom", res.best.blamed_atom},
                      {"scenario", to_json(res.best.scenario)},
                      {"t0", format_double(res.t0)}};
  run.emit("results.csv", records_csv(res.history));
  run.emit("warmup.csv", records_csv(res.warmup));
  run.emit("best.json", best.dump(2) + "\n");
  run.emit("report.txt", falsify::classify_batch(res.history).to_text());
  if (a.plot) run.emit("best.svg", trajectory_svg(sim::simulate(res.best.scenario, obj.sim, obj.box), obj.sim));
  run.finish();

  out << "spec: " << falsify::to_string(kind) << "\n";
  out << "iterations: " << res.history.size() << " (+" << res.warmup.size() << " warm-up)\n";
  out << "violating iterations: " << violating << "\n";
  out << "best " << falsify::to_string(kind) << " robustness: " << format_double(res.best.value(kind)) << "\n";
  out << "verdict: " << (found ? "FOUND" : "NOT-FALSIFIED") << "\n";
  return found ? kViolation : kOk;
}

// --- classify / report -----------------------------------------------------

std::vector<falsify::SearchRecord> load_results(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return falsify::read_results_csv(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

int cmd_classify(const Globals& g, const std::vector<std::string>& files, std::ostream& out) {
  Run run(g, "classify");
  std::string text;
  nlohmann::json j{{"runs", nlohmann::json::array()}};
  falsify::ClassificationTable all;
  for (const auto& f : files) {
    const auto t = falsify::classify_batch(load_results(f));
    run.manifest.add_input(f);
    text += "== " + f + " ==\n" + t.to_text() + "\n";
    j["runs"].push_back({{"path", f}, {"table", t.to_json()}});
    all.merge(t);
  }
  if (files.size() > 1) text += "== combined ==\n" + all.to_text();
  j["combined"] = all.to_json();
  run.emit("report.txt", text);
  run.emit("report.json", j.dump(2) + "\n");
  run.finish();
  out << text;
  return kOk;
}

int cmd_report(const Globals& g, const std::vector<std::string>& files, std::ostream& out) {
  Run run(g, "report");
  std::vector<falsify::SearchRecord> recs;
  for (const auto& f : files) {
    auto r = load_results(f);
    run.manifest.add_input(f);
    recs.insert(recs.end(), r.begin(), r.end());
  }
  const auto table = falsify::classify_batch(recs);
  const auto useful = falsify::useful_tests(recs);
  std::ostringstream o;
  o << table.to_text() << "\n";
  o << "useful tests (negative RSS robustness): " << useful.size() << "\n";
  if (!recs.empty()) {
    auto by = [&](auto key) {
      return *std::min_element(recs.begin(), recs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    };
    const auto lo_rss = by([](const auto& r) { return r.rob_rss; });
    const auto lo_cas = by([](const auto& r) { return r.rob_cas; });
    o << "lowest RSS robustness: " << format_double(lo_rss.rob_rss) << " (index " << lo_rss.index << ", seed "
      << lo_rss.scenario.seed << ", " << (lo_rss.blamed_atom.empty() ? falsify::kNoAtom : lo_rss.blamed_atom) << ")\n";
    o << "lowest CAS robustness: " << format_double(lo_cas.rob_cas) << " (index " << lo_cas.index << ", seed "
      << lo_cas.scenario.seed << ")\n";
  }
  run.emit("report.txt", o.str());
  run.emit("useful_tests.csv", records_csv(useful));
  run.finish();
  out << o.str();
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"STL robustness monitoring and RSS scenario falsification", "rsstl"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.args = args;
  app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

  MonitorArgs mon;
  auto* monitor = app.add_subcommand("monitor", "robustness and blame of a formula on a trace CSV");
  monitor->add_option("--trace", mon.trace, "trace CSV (t,<channels>...)")->required();
  monitor->add_option("--formula", mon.formula, "formula text");
  monitor->add_option("--formula-file", mon.formula_file, "file holding the formula");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "simulate one scenario, write world, lane and predicate traces");
  simulate->add_option("--scenario", sim_args.scenario, "scenario JSON")->required();
  simulate->add_flag("--plot", sim_args.plot, "also write trajectory.svg");

  std::size_t n = 1000;
  auto* sample = app.add_subcommand("sample", "evaluate a uniform batch of scenarios");
  sample->add_option("--n", n, "number of scenarios")->check(CLI::PositiveNumber);

  FalsifyArgs fa;
  auto* fals = app.add_subcommand("falsify", "simulated annealing on the robustness of one spec");
  fals->add_option("--spec", fa.spec, "rss or cas")->check(CLI::IsMember({"rss", "cas"}));
  fals->add_option("--iters", fa.iters, "iterations after warm-up")->check(CLI::PositiveNumber);
  fals->add_flag("--plot", fa.plot, "also write best.svg");

  std::vector<std::string> class_files;
  auto* classify = app.add_subcommand("classify", "RSS/CAS sign table of stored results");
  classify->add_option("--results", class_files, "results CSV files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> report_files;
  auto* report = app.add_subcommand("report", "summary and useful tests of stored results");
  report->add_option("--results", report_files, "results CSV files")->required()->check(CLI::ExistingFile);

  std::vector<std::string> argv_store{"rsstl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*monitor) return cmd_monitor(g, mon, out);
    if (*simulate) return cmd_simulate(g, sim_args, out);
    if (*sample) return cmd_sample(g, n, out);
    if (*fals) return cmd_falsify(g, fa, out);
    if (*classify) return cmd_classify(g, class_files, out);
    if (*report) return cmd_report(g, report_files, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

} // namespace rsstl::cli
