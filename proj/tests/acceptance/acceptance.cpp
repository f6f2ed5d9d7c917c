// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "rsstl/cli/app.hpp"
#include "rsstl/cli/manifest.hpp"
#include "rsstl/falsify/anneal.hpp"
#include "rsstl/falsify/batch.hpp"
#include "rsstl/falsify/classify.hpp"
#include "rsstl/rss/formulas.hpp"
#include "rsstl/rss/safe_distance.hpp"
#include "rsstl/stl/monitor.hpp"
#include "rsstl/stl/parser.hpp"
#include "rsstl/util/format.hpp"
#include "support/naive_semantics.hpp"
#include "support/random_formula.hpp"
#include "support/rss_fixtures.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace rsstl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> info = {};
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string pct(std::size_t k, std::size_t n) { return fmt("%.1f%%", 100.0 * static_cast<double>(k) / static_cast<double>(n)); }

// 1. next operator on physical time
Outcome next_timing() {
  const auto psi = stl::parse_formula("X[0,0.1] true");
  auto trace = [](double dt) {
    stl::Trace t(dt);
    t.add_channel("x", {0, 0, 0});
    return t;
  };
  const double a = stl::eval_robustness(psi, trace(0.1), 0);
  const double b = stl::eval_robustness(psi, trace(0.2), 0);
  return {a == stl::kTop && b == stl::kBottom,
          "dt=0.1 -> " + util::format_double(a) + ", dt=0.2 -> " + util::format_double(b)};
}

// 2. DP evaluator against the recursive definition
Outcome oracle_equivalence() {
  testing::FormulaGen gen(20240501);
  constexpr int cases = 10000;
  int mismatches = 0, sign_mismatches = 0;
  std::size_t points = 0;
  for (int k = 0; k < cases; ++k) {
    const double dt = gen.pick_dt();
    const auto trace = gen.trace(dt, static_cast<std::size_t>(gen.uniform_int(1, 50)));
    const auto phi = gen.formula(gen.uniform_int(1, 5), dt);
    const auto dp = stl::robustness_signal(phi, trace);
    testing::NaiveRobustness naive(trace);
    for (std::size_t i = 0; i < trace.size(); ++i, ++points) {
      if (!same_bits(dp[i], naive.at(phi, static_cast<std::int64_t>(i)))) ++mismatches;
      if (dp[i] != 0.0 && stl::eval_boolean(phi, trace, i) != (dp[i] > 0.0)) ++sign_mismatches;
    }
  }
  return {mismatches == 0 && sign_mismatches == 0,
          std::to_string(cases) + " formulas, " + std::to_string(points) + " samples; value mismatches " +
              std::to_string(mismatches) + ", sign mismatches " + std::to_string(sign_mismatches)};
}

// 3. non-strict release rewrite
Outcome release_rewrite() {
  testing::FormulaGen gen(20240502);
  constexpr int cases = 10000;
  int mismatches = 0;
  std::size_t points = 0;
  for (int k = 0; k < cases; ++k) {
    const double dt = gen.pick_dt();
    const auto trace = gen.trace(dt, static_cast<std::size_t>(gen.uniform_int(1, 50)));
    const auto phi = gen.formula(gen.uniform_int(2, 5), dt, {"x", "y", "z"}, true);
    const auto x = stl::robustness_signal(phi, trace);
    const auto y = stl::robustness_signal(stl::rewrite_nonstrict_release(phi), trace);
    for (std::size_t i = 0; i < x.size(); ++i, ++points) mismatches += same_bits(x[i], y[i]) ? 0 : 1;
  }
  return {mismatches == 0, std::to_string(cases) + " formulas with a top-level non-strict release, " +
                               std::to_string(points) + " samples; mismatches " + std::to_string(mismatches)};
}

// 4. safe distances at rest
Outcome safe_distance_points() {
  const rss::RssParams p;
  const double lon = rss::lon_safe_distance(0, 0, p);
  const double lat = rss::lat_safe_distance(0, 0, p);
  const double lon_num = testing::lon_worst_case(0, 0, p);
  const double lat_num = testing::lat_worst_case(0, 0, p);
  const bool ok = std::abs(lon - 1.1953125) <= 1e-9 && std::abs(lat - 1.9) <= 1e-9 &&
                  std::abs(lon - lon_num) <= 1e-3 && std::abs(lat - lat_num) <= 1e-3;
  return {ok, "lon " + fmt("%.10f", lon) + " (maneuver " + fmt("%.6f", lon_num) + "), lat " + fmt("%.10f", lat) +
                  " (maneuver " + fmt("%.6f", lat_num) + ")"};
}

void collect(const stl::Formula& f, std::vector<stl::Formula>& out) {
  out.push_back(f);
  for (const auto& c : f.children()) collect(c, out);
}

// 5. blame on the constructed over-acceleration trace
Outcome blame_reproduction() {
  const rss::RssParams p;
  const auto f = rss::rss_formulas(p);
  const auto tr = testing::over_acceleration_trace();
  const auto rep = stl::blame(f.phi, tr);

  // every subformula, every sample: library boolean vs an independent recursive evaluation
  std::vector<stl::Formula> subs;
  collect(f.phi, subs);
  testing::NaiveRobustness naive(tr);
  int disagreements = 0;
  for (const auto& s : subs) {
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const double r = naive.at(s, static_cast<std::int64_t>(i));
      if (r != 0.0 && stl::eval_boolean(s, tr, i) != (r > 0.0)) ++disagreements;
    }
  }
  const bool violated = !stl::eval_boolean(f.phi, tr, 0);
  const bool lon_part = !stl::eval_boolean(f.phi_lon, tr, 0) && stl::eval_boolean(f.phi_lat, tr, 0) &&
                        stl::eval_boolean(f.phi_lat_lon, tr, 0) && stl::eval_boolean(f.phi_not_lat_not_lon, tr, 0);
  const bool repaired =
      stl::eval_boolean(f.phi, tr.with_channel("A_lon_maxAcc", std::vector<double>(tr.size(), 1.0)), 0);
  const bool ok = rep.robustness < 0 && rep.blamed_atom == "A_lon_maxAcc" && disagreements == 0 && violated &&
                  lon_part && repaired;
  return {ok, "robustness " + util::format_double(rep.robustness) + ", blamed " + rep.blamed_atom + " at sample " +
                  (rep.critical_sample ? std::to_string(*rep.critical_sample) : "-") + "; " +
                  std::to_string(subs.size()) + " subformulas x " + std::to_string(tr.size()) +
                  " samples, boolean disagreements " + std::to_string(disagreements) +
                  (repaired ? "; holds once A_lon_maxAcc is repaired" : "; repair does not restore")};
}

// 6. RSS vs CAS on a uniform batch
Outcome rss_vs_cas() {
  constexpr std::size_t n = 1000;
  constexpr std::uint64_t seed = 1;
  const falsify::ObjectiveSpec obj;
  const auto recs = falsify::uniform_batch(n, seed, obj, workers());
  const auto t = falsify::classify_batch(recs);
  const double r = t.rss_violation_rate(), c = t.cas_violation_rate();
  Outcome o;
  o.pass = r < c && r >= 0.05 && r <= 0.50 && c >= 0.30 && c <= 0.90 && t.np > 0 && t.pn > 0;
  o.detail = "RSS " + pct(t.rss.violations(), n) + ", CAS " + pct(t.cas.violations(), n) + "; joint pp " +
             std::to_string(t.pp) + " nn " + std::to_string(t.nn) + " nRSS/pCAS " + std::to_string(t.np) +
             " pRSS/nCAS " + std::to_string(t.pn);

  falsify::ObjectiveSpec per_agent = obj;
  per_agent.cas.per_agent = true;
  const auto t2 = falsify::classify_batch(falsify::uniform_batch(n, seed, per_agent, workers()));
  o.info.push_back("per-agent CAS boxes: RSS " + pct(t2.rss.violations(), n) + ", CAS " +
                   pct(t2.cas.violations(), n) + ", nRSS/pCAS " + std::to_string(t2.np) + ", pRSS/nCAS " +
                   std::to_string(t2.pn));
  return o;
}

// 7. CAS-guided search vs uniform sampling
Outcome optimizer_effectiveness() {
  constexpr std::uint64_t seed = 3;
  constexpr std::size_t iters = 300;
  falsify::ObjectiveSpec obj;
  obj.spec = falsify::SpecKind::Cas;
  const auto sa = falsify::simulated_annealing(obj, iters, seed);
  const auto uni = falsify::uniform_batch(iters, seed, obj, workers());
  std::size_t sa_neg = 0, uni_neg = 0, sa_strict = 0;
  for (const auto& r : sa.history) {
    sa_neg += falsify::is_violation(r.rob_cas) ? 1 : 0;
    sa_strict += r.rob_cas < 0 ? 1 : 0;
  }
  for (const auto& r : uni) uni_neg += falsify::is_violation(r.rob_cas) ? 1 : 0;
  return {sa_neg > uni_neg && sa_strict >= 1,
          "annealing " + std::to_string(sa_neg) + "/" + std::to_string(iters) + " CAS-violating (best " +
              util::format_double(sa.best.rob_cas) + "), uniform " + std::to_string(uni_neg) + "/" +
              std::to_string(iters)};
}

// 8. convex surrogate
Outcome surrogate() {
  auto trial = [](double final_ratio, double& worst) {
    sim::SplitMix64 pick(8);
    falsify::AnnealOptions opt;
    opt.iters = 1000;
    opt.final_ratio = final_ratio;
    int hits = 0;
    worst = 0;
    for (int k = 0; k < 10; ++k) {
      std::vector<double> s0(sim::kScenarioDims);
      for (auto& v : s0) v = pick.uniform01();
      auto f = [&](std::span<const double> u) {
        double acc = 0;
        for (std::size_t d = 0; d < u.size(); ++d) acc += (u[d] - s0[d]) * (u[d] - s0[d]);
        return acc;
      };
      const auto res = falsify::anneal(f, sim::kScenarioDims, opt, pick.next());
      hits += res.best.value <= 1e-2 ? 1 : 0;
      worst = std::max(worst, res.best.value);
    }
    return hits;
  };
  double worst = 0, worst_cold = 0;
  const int hits = trial(0.01, worst);
  const int hits_cold = trial(1e-4, worst_cold);
  Outcome o;
  o.pass = hits == 10;
  o.detail = std::to_string(hits) + "/10 within 1e-2 (worst " + fmt("%.4g", worst) + ") with T_final = T0/100";
  o.info.push_back("T_final = T0/10000: " + std::to_string(hits_cold) + "/10 (worst " + fmt("%.4g", worst_cold) + ")");
  return o;
}

// 9. sample determinism through the command line
Outcome determinism() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "rsstl_acceptance_determinism";
  fs::remove_all(dir);
  std::ostringstream sink;
  auto sample = [&](const std::string& out, const std::string& jobs) {
    return cli::run({"sample", "--n", "100", "--seed", "42", "--jobs", jobs, "--out", (dir / out).string()}, sink, sink);
  };
  const int c1 = sample("a", "1"), c2 = sample("b", "1"), c3 = sample("c", "8");
  const auto a = cli::read_file((dir / "a/results.csv").string());
  const auto b = cli::read_file((dir / "b/results.csv").string());
  const auto c = cli::read_file((dir / "c/results.csv").string());
  fs::remove_all(dir);
  return {c1 == 0 && c2 == 0 && c3 == 0 && a == b && a == c,
          "repeat " + std::string(a == b ? "identical" : "differs") + ", --jobs 8 " +
              (a == c ? "identical" : "differs") + " (" + std::to_string(a.size()) + " bytes, blob " +
              cli::git_blob_sha1(a).substr(0, 12) + ")"};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "next-operator timing", next_timing},
      {2, "semantics oracle equivalence", oracle_equivalence},
      {3, "non-strict release identity", release_rewrite},
      {4, "safe-distance point values", safe_distance_points},
      {5, "blame of the over-acceleration scenario", blame_reproduction},
      {6, "directional RSS-vs-CAS classification", rss_vs_cas},
      {7, "optimizer effectiveness", optimizer_effectiveness},
      {8, "optimizer sanity on a convex surrogate", surrogate},
      {9, "determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    for (const auto& line : o.info) std::printf("       info: %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
