// Acceptance run: one line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "curvelab/complexes.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/lab.hpp"
#include "curvelab/mcg.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace curvelab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

ExperimentConfig suiteConfig(const std::string& driver) {
  return driverConfig(defaultSuiteConfig(), driver, ExperimentConfig{});
}

Outcome fromReports(std::initializer_list<Report> reports) {
  Outcome o;
  for (const Report& r : reports) {
    o.pass = o.pass && r.pass;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += r.driver + (r.pass ? " pass" : " FAIL");
    if (r.pass) continue;
    // short fields of the report data explain the failure
    for (auto& [k, v] : r.data.items()) {
      if (k == "config") continue;
      std::string text = v.dump();
      if (text.size() <= 80) o.detail += " " + k + "=" + text;
    }
    for (auto& n : r.notes) o.detail += " [" + n + "]";
  }
  return o;
}

oracle::Slope randomSlope(std::mt19937_64& rng, long range) {
  while (true) {
    long p = long(rng() % (2 * range + 1)) - range, q = long(rng() % (range + 1));
    if (std::gcd(p, q) == 1) return oracle::normal(p, q);
  }
}

Outcome farey() {
  ExperimentConfig c = suiteConfig("farey");
  const Triangulation& tri = referenceTriangulation({1, 1});
  const NormalMulticurve& base = enumerateCurves({1, 1}, 1).front();
  GraphSnapshot s = buildCurveSnapshot(base, c.weightBound, c.radius);
  auto ball = oracle::fareyBall(oracle::slopeOf(base.weights), c.weightBound, c.radius);

  // the slope map is the isomorphism: bijective on vertices and on edges
  std::set<oracle::Slope> verts;
  for (auto& v : s.vertices) verts.insert(oracle::slopeOf(v.weights));
  std::set<std::pair<oracle::Slope, oracle::Slope>> edges;
  for (auto [u, v] : s.edges()) {
    auto a = oracle::slopeOf(s.vertices[u].weights), b = oracle::slopeOf(s.vertices[v].weights);
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  bool iso = verts.size() == s.vertices.size() && verts == ball.vertices && edges.size() == s.edgeCount() &&
             edges == ball.edges;

  std::mt19937_64 rng(c.seed);
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    auto a = randomSlope(rng, 40), b = randomSlope(rng, 40);
    if (intersectionNumber(canonicalize(oracle::weightsOf(a), tri), canonicalize(oracle::weightsOf(b), tri)) !=
        oracle::det(a, b))
      ++bad;
  }
  Outcome o = fromReports({verifyFarey(c)});
  o.pass = o.pass && iso && bad == 0;
  o.detail += "; oracle ball " + std::to_string(ball.vertices.size()) + " vertices " +
              std::to_string(ball.edges.size()) + " edges, isomorphic " + (iso ? "yes" : "no") +
              "; intersection mismatches " + std::to_string(bad) + "/200";
  return o;
}

Outcome twist() {
  ExperimentConfig c = suiteConfig("twist");
  const Triangulation& tri = referenceTriangulation({1, 1});
  std::mt19937_64 rng(c.seed);
  int eps = 0, bad = 0, pairs = 0;
  while (pairs < 100) {
    auto v = randomSlope(rng, 6), x = randomSlope(rng, 6);
    if (oracle::det(v, x) == 0) continue;
    ++pairs;
    NormalMulticurve cv = canonicalize(oracle::weightsOf(v), tri), cx = canonicalize(oracle::weightsOf(x), tri);
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      NormalMulticurve t = twistCurve(cv, cx, n);
      auto got = oracle::slopeOf(t.weights);
      if (eps == 0) eps = got == oracle::twist(v, x, n, 1) ? 1 : -1;
      long i = oracle::det(v, x);
      if (got != oracle::twist(v, x, n, eps) || oracle::det(got, x) != std::abs(n) * i * i) ++bad;
    }
  }
  Outcome o = fromReports({verifyTwistIdentity(c)});
  o.pass = o.pass && bad == 0;
  o.detail += "; torus slope oracle mismatches " + std::to_string(bad) + " over 100 pairs x 6 powers";
  return o;
}

Outcome determinism(const std::string& cli) {
  fs::path root = fs::temp_directory_path() / "curvelab-acceptance-suite";
  fs::remove_all(root);
  std::vector<fs::path> dirs{root / "a", root / "b"};
  for (auto& d : dirs) {
    std::string cmd = cli + " --seed 7 --out " + d.string() + " suite > " + (root / "log").string() + " 2>&1";
    fs::create_directories(root);
    int rc = std::system(cmd.c_str()); // nonzero when a driver fails; the bundle is still written
    (void)rc;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  Outcome o;
  int files = 0, differ = 0;
  std::set<std::string> names;
  for (auto& d : dirs)
    if (fs::exists(d))
      for (auto& e : fs::directory_iterator(d)) names.insert(e.path().filename().string());
  for (auto& n : names) {
    ++files;
    if (!fs::exists(dirs[0] / n) || !fs::exists(dirs[1] / n) || slurp(dirs[0] / n) != slurp(dirs[1] / n)) ++differ;
  }
  o.pass = files > 0 && differ == 0 && names.count("suite.json");
  o.detail = std::to_string(files) + " files compared, " + std::to_string(differ) + " differ";
  fs::remove_all(root);
  return o;
}

} // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "curvelab";
  struct Criterion {
    int id;
    std::string name;
    double budget; // seconds
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "Farey conformance", 10, farey},
      {2, "projection diameter", 60, [] { return fromReports({verifyProjectionDiameter(suiteConfig("projection-diameter"))}); }},
      {3, "Behrstock inequality", 120, [] { return fromReports({verifyBehrstock(suiteConfig("behrstock"))}); }},
      {4, "twist identity", 60, twist},
      {5, "fiber connectivity", 120, [] { return fromReports({verifyFiberConnectivity(suiteConfig("fibers"))}); }},
      {6, "component labels", 600, [] { return fromReports({verifyComponentLabels(suiteConfig("labels"))}); }},
      {7, "separating-complex metric facts", 600,
       [] { return fromReports({verifyBilipschitz(suiteConfig("bilipschitz")), verifySepOverlap(suiteConfig("overlap"))}); }},
      {8, "seed facts", 60, [] { return fromReports({axisBuildDriver(suiteConfig("axis-build"))}); }},
      {9, "distance-formula sanity", 600, [] { return fromReports({estimateDriver(suiteConfig("estimate"))}); }},
      {10, "divergence and contraction", 1800,
       [] { return fromReports({divergenceDriver(suiteConfig("axis-diverge")), contractionDriver(suiteConfig("axis-contract"))}); }},
      {11, "suite determinism", 3600, [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const LabError& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool inBudget = secs <= c.budget;
    bool pass = o.pass && inBudget;
    failed += !pass;
    std::printf("criterion %2d %-32s %s  %.1f s / %.0f s%s  %s\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL", secs,
                c.budget, inBudget ? "" : " (over budget)", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
