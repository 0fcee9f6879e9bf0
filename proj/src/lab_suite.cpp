#include "curvelab/lab.hpp"

#include "curvelab/errors.hpp"

#include <chrono>
#include <functional>
#include <iostream>

namespace curvelab {

using nlohmann::json;

namespace {

struct Driver {
  const char* name;
  std::function<Report(const ExperimentConfig&)> run;
};

const std::vector<Driver>& drivers() {
  static const std::vector<Driver> all = {
      {"farey", verifyFarey},
      {"projection-diameter", verifyProjectionDiameter},
      {"behrstock", verifyBehrstock},
      {"twist", verifyTwistIdentity},
      {"fibers", verifyFiberConnectivity},
      {"labels", verifyComponentLabels},
      {"overlap", verifySepOverlap},
      {"bilipschitz", verifyBilipschitz},
      {"estimate", estimateDriver},
      {"axis-build", axisBuildDriver},
      {"axis-diverge", divergenceDriver},
      {"axis-contract", contractionDriver},
      {"axis-chain", thickChainDriver},
  };
  return all;
}

} // namespace

json defaultSuiteConfig() {
  return json::parse(R"({
  "drivers": {
    "farey": {"surface": "1,1", "weight_bound": 8, "radius": 3},
    "projection-diameter": {"surface": ["0,5", "1,2", "2,1"], "weight_bound": 4, "universe_bound": 3, "samples": 500},
    "behrstock": {"surface": "2,1", "weight_bound": 4, "radius": 2, "universe_bound": 3, "samples": 300},
    "twist": {"surface": ["1,1", "0,4", "0,5", "1,2", "2,1", "2,0"], "weight_bound": 4, "samples": 100},
    "fibers": {"surface": "2,1", "weight_bound": 4, "samples": 50},
    "labels": {"surface": "2,1", "weight_bound": 4, "radius": 4},
    "overlap": {"surface": "2,1", "weight_bound": 5, "radius": 4},
    "bilipschitz": {"surface": "2,1", "weight_bound": 5, "radius": 4},
    "estimate": {"surface": "0,5", "weight_bound": 4, "radius": 4, "universe_bound": 4, "threshold": 4},
    "axis-build": {"surface": "2,1", "weight_bound": 3, "steps": 3},
    "axis-diverge": {"surface": "2,1", "weight_bound": 6, "radius": 4, "epsilon": "1/2"},
    "axis-contract": {"surface": "2,1", "weight_bound": 6, "radius": 4, "universe_bound": 4, "samples": 200},
    "axis-chain": {"surface": "2,1", "weight_bound": 6, "radius": 4, "steps": 3}
  }
})");
}

SuiteResult runSuite(const ExperimentConfig& cfg, const json& file) {
  SuiteResult res;
  json defaults = defaultSuiteConfig();
  json summary = json::array();
  Report table;
  table.driver = "suite";
  table.table.push_back({"driver", "result"});
  for (const Driver& d : drivers()) {
    ExperimentConfig dc = driverConfig(defaults, d.name, cfg);
    dc = driverConfig(file, d.name, dc);
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      dc.validate();
      r = d.run(dc);
    } catch (const LabError& e) {
      r = Report{};
      r.driver = d.name;
      r.pass = false;
      r.data = {{"config", configJson(dc)}, {"error", e.what()}};
      r.notes.push_back(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // timings go to stderr only, so the bundle stays byte-identical
    std::cerr << d.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << secs << " s)\n";
    writeReport(r, cfg.out);
    res.drivers.push_back({d.name, r.pass});
    res.pass = res.pass && r.pass;
    summary.push_back({{"driver", d.name}, {"pass", r.pass}});
    table.table.push_back({d.name, r.pass ? "pass" : "FAIL"});
  }
  table.pass = res.pass;
  table.data = {{"seed", cfg.seed}, {"data_version", kDataVersion}, {"drivers", summary}};
  writeReport(table, cfg.out);
  return res;
}

} // namespace curvelab
