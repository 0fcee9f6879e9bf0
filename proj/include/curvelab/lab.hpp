#pragma once

#include "curvelab/complexes.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/mcg.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace curvelab {

struct ExperimentConfig {
  std::vector<SurfaceSig> surfaces{{2, 1}};
  int weightBound = 4;
  int radius = 4;
  int samples = 50;
  std::uint64_t seed = 7;
  int threshold = 4;
  int epsNum = 1, epsDen = 2;
  int universeBound = 4; // boundary weight bound of the subsurface universe
  int steps = 2;          // powers of the push word in the chain witness
  long cap = kDefaultCandidateCap;
  std::string out = "reports";

  SurfaceSig surface() const { return surfaces.front(); }
  void validate() const; // InvalidDescriptor on non-positive fields
};

// JSON object with the field names of the CLI flags (surface, weight_bound,
// radius, samples, seed, threshold, epsilon, universe_bound, steps, cap, out).
// "drivers" maps a driver name to an object of per-driver overrides.
ExperimentConfig configFromJson(const nlohmann::json& j, const ExperimentConfig& base = {});
nlohmann::json loadConfigFile(const std::string& path); // Io / DataFormat naming the path
ExperimentConfig driverConfig(const nlohmann::json& file, const std::string& driver, const ExperimentConfig& base);
nlohmann::json configJson(const ExperimentConfig& c);

struct Report {
  std::string driver;
  bool pass = true;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::vector<std::string>> table; // first row is the header
  std::vector<std::string> notes;
};

std::string renderTable(const Report& r);
// <dir>/<driver>.json and <dir>/<driver>.txt
void writeReport(const Report& r, const std::string& dir);

// statistics used by the drivers
double spearman(const std::vector<double>& a, const std::vector<double>& b);
struct AffineBound {
  double slope = 0, offset = 0;
};
// least-squares slope, then the smallest offset making y <= slope*x + offset hold
AffineBound upperEnvelope(const std::vector<double>& x, const std::vector<double>& y);

// fingerprint of the image on the closed surface, as text
std::string labelComponent(const NormalMulticurve& c);

// --- verification drivers ---
Report verifyFarey(const ExperimentConfig& cfg);
Report verifyProjectionDiameter(const ExperimentConfig& cfg);
Report verifyBehrstock(const ExperimentConfig& cfg);
Report verifyTwistIdentity(const ExperimentConfig& cfg);
Report verifyFiberConnectivity(const ExperimentConfig& cfg);
Report verifyComponentLabels(const ExperimentConfig& cfg);
Report verifySepOverlap(const ExperimentConfig& cfg);
Report verifyBilipschitz(const ExperimentConfig& cfg);
Report estimateDriver(const ExperimentConfig& cfg);

// --- the axis on S2,1 ---
struct AxisSegment {
  int n = 0;
  std::vector<NormalMulticurve> alpha;   // lifted alpha_j, index j + n
  std::vector<NormalMulticurve> pants;   // P_j, index j + n
  TwistWord f;                           // the lift of the seed map
  const NormalMulticurve& at(int j) const { return pants[j + n]; }
};
AxisSegment buildAxis(int n);
Report axisBuildDriver(const ExperimentConfig& cfg);

// Local parameterization near P_0 inside a pants snapshot: gamma(0) = P_0
// and gamma(+-k) steps outward one layer at a time toward P_{+-1}.
struct AxisPath {
  GraphSnapshot snap;
  std::vector<int> vertex; // snapshot vertex of gamma(j), index j + radius
  int radius = 0;
  int at(int j) const { return vertex[j + radius]; }
};
AxisPath localAxisPath(const AxisSegment& axis, int bound, int radius);

struct DivergenceRow {
  int r = 0;
  int forbidden = 0;     // radius of the removed open ball
  int distance = -1;     // d(gamma(-r), gamma(r)) in the snapshot
  int detour = -1;       // -1 when unreachable inside the snapshot
  int removed = 0;       // vertices removed
  int slack = 0;         // 2r - distance
};
DivergenceRow divergenceProbe(const AxisPath& path, int r, int epsNum, int epsDen);
Report divergenceDriver(const ExperimentConfig& cfg);
Report contractionDriver(const ExperimentConfig& cfg);
Report thickChainDriver(const ExperimentConfig& cfg); // alpha_0 and alpha_1 of the axis
// alpha, alpha' separating on S2,1 with i = 4, else WrongIntersection
Report thickChainWitness(const NormalMulticurve& alpha, const NormalMulticurve& alphaP, const ExperimentConfig& cfg);

// distance between two pants decompositions by a ball search that stops at
// the target; -1 if not reached within maxRadius
int pantsDistanceSearch(const NormalMulticurve& from, const NormalMulticurve& to, int bound, int maxRadius);

// runs every driver, writes the bundle, returns true when all checks pass
struct SuiteResult {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> drivers;
};
SuiteResult runSuite(const ExperimentConfig& cfg, const nlohmann::json& file = nlohmann::json::object());
// suite defaults layered under the file's per-driver overrides
nlohmann::json defaultSuiteConfig();

} // namespace curvelab
