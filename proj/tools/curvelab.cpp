// Command-line front end: enumeration, snapshots, projections, and the
// verification drivers. Exit status: 0 all checks pass, 1 a check failed,
// 2 usage, input or data error.
#include "curvelab/complexes.hpp"
#include "curvelab/cut.hpp"
#include "curvelab/distance.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/lab.hpp"
#include "curvelab/pants.hpp"
#include "curvelab/projection.hpp"
#include "curvelab/s20.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace curvelab;
using nlohmann::json;

namespace {

struct Flags {
  std::string surface, epsilon, config, out;
  int weightBound = 0, radius = 0, threshold = 0, samples = 0, universeBound = 0, steps = 0;
  std::uint64_t seed = 0;
  long cap = 0;
  CLI::Option *oSurface, *oWeight, *oRadius, *oThreshold, *oEps, *oSeed, *oCap, *oOut, *oSamples, *oUniverse, *oSteps;
};

void addFlags(CLI::App& app, Flags& f) {
  f.oSurface = app.add_option("--surface", f.surface, "surface g,n");
  f.oWeight = app.add_option("--weight-bound", f.weightBound, "max normal weight");
  f.oRadius = app.add_option("--radius", f.radius, "ball radius");
  f.oThreshold = app.add_option("--threshold", f.threshold, "distance-formula threshold M");
  f.oEps = app.add_option("--epsilon", f.epsilon, "divergence ball fraction p/q");
  f.oSeed = app.add_option("--seed", f.seed, "random seed");
  f.oCap = app.add_option("--cap", f.cap, "candidate cap for enumeration");
  f.oOut = app.add_option("--out", f.out, "report directory");
  f.oSamples = app.add_option("--samples", f.samples, "sample count");
  f.oUniverse = app.add_option("--universe-bound", f.universeBound, "weight bound of the subsurface universe");
  f.oSteps = app.add_option("--steps", f.steps, "axis half-length or push powers");
  app.add_option("--config", f.config, "JSON config file; flags override it");
}

json flagJson(const Flags& f) {
  json j = json::object();
  if (*f.oSurface) j["surface"] = f.surface;
  if (*f.oWeight) j["weight_bound"] = f.weightBound;
  if (*f.oRadius) j["radius"] = f.radius;
  if (*f.oThreshold) j["threshold"] = f.threshold;
  if (*f.oEps) j["epsilon"] = f.epsilon;
  if (*f.oSeed) j["seed"] = f.seed;
  if (*f.oCap) j["cap"] = f.cap;
  if (*f.oOut) j["out"] = f.out;
  if (*f.oSamples) j["samples"] = f.samples;
  if (*f.oUniverse) j["universe_bound"] = f.universeBound;
  if (*f.oSteps) j["steps"] = f.steps;
  return j;
}

json fileJson(const Flags& f) { return f.config.empty() ? json::object() : loadConfigFile(f.config); }

// built-in driver table, then the file (top level, then its driver section), then flags
ExperimentConfig configFor(const Flags& f, const std::string& driver) {
  json file = fileJson(f);
  ExperimentConfig c = driverConfig(defaultSuiteConfig(), driver, ExperimentConfig{});
  json top = file;
  top.erase("drivers");
  c = configFromJson(top, c);
  c = driverConfig(file, driver, c);
  c = configFromJson(flagJson(f), c);
  c.validate();
  return c;
}

// plain config for the non-driver commands
ExperimentConfig plainConfig(const Flags& f) {
  json file = fileJson(f);
  file.erase("drivers");
  ExperimentConfig c = configFromJson(file);
  c = configFromJson(flagJson(f), c);
  c.validate();
  return c;
}

std::vector<int> parseInts(const std::string& s) {
  std::vector<int> out;
  std::string t = s;
  for (char& ch : t)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(t);
  int x;
  while (in >> x) out.push_back(x);
  return out;
}

NormalMulticurve curveArg(const std::string& s, SurfaceSig sig) {
  return canonicalize(parseInts(s), referenceTriangulation(sig));
}

NormalMulticurve defaultBase(GraphKind kind, SurfaceSig sig) {
  const Triangulation& tri = referenceTriangulation(sig);
  switch (kind) {
  case GraphKind::Curve: return enumerateCurves(sig, 1).front();
  case GraphKind::Pants: {
    NormalMulticurve e;
    e.tri = &tri;
    e.weights.assign(tri.nedges(), 0);
    return extendMulticurve(e, markingCurves(tri));
  }
  default:
    if (sig == SurfaceSig{2, 1}) return liftCurve(pseudoAnosovSeed().alpha0);
    for (int w = 1; w <= 8; ++w)
      if (!enumerateMulticurves(sig, w, true).empty()) return enumerateMulticurves(sig, w, true).front();
    throw LabError(Err::UnsupportedSurface, "no separating multicurve with weight <= 8 on " + sig.str());
  }
}

int finish(const Report& r, const std::string& out) {
  writeReport(r, out);
  std::cout << renderTable(r);
  return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvelab: curves, complexes and projections on punctured surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  addFlags(app, f);

  // enumerate
  std::string filter = "all";
  bool multi = false;
  auto* en = app.add_subcommand("enumerate", "list curves with max weight <= bound");
  en->add_option("--filter", filter, "all | separating | nonseparating")->check(CLI::IsMember({"all", "separating", "nonseparating"}));
  en->add_flag("--multicurves", multi, "list multicurves instead (punctured surfaces)");

  // ball
  std::string kind = "curve", base, load;
  auto* ball = app.add_subcommand("ball", "build or load a bounded ball in a complex");
  ball->add_option("--kind", kind, "curve | pants | sep | sep_prime");
  ball->add_option("--base", base, "basepoint weights, comma separated");
  ball->add_option("--load", load, "load and check a saved snapshot instead");

  // distance
  std::string snapFile, from, to;
  auto* dist = app.add_subcommand("distance", "exact distance inside a saved snapshot");
  dist->add_option("--snapshot", snapFile, "snapshot file")->required();
  dist->add_option("--from", from, "vertex index or weights")->required();
  dist->add_option("--to", to, "vertex index or weights")->required();

  // project
  std::string curve, boundary;
  int piece = -1;
  bool pantsProj = false;
  auto* proj = app.add_subcommand("project", "subsurface projection of a curve or pants decomposition");
  proj->add_option("--curve", curve, "weights of the curve or multicurve")->required();
  proj->add_option("--boundary", boundary, "weights of the boundary multicurve of Y")->required();
  proj->add_option("--piece", piece, "piece of the complement (default: first essential piece)");
  proj->add_flag("--pants", pantsProj, "project a pants decomposition inductively");

  auto* est = app.add_subcommand("estimate", "distance-formula estimate against exact pants distances");

  std::string which;
  auto* verify = app.add_subcommand("verify", "run one verification driver");
  verify->add_option("check", which, "fibers | overlap | behrstock | projection-diameter | bilipschitz | labels | twist | farey")
      ->required()
      ->check(CLI::IsMember({"fibers", "overlap", "behrstock", "projection-diameter", "bilipschitz", "labels", "twist", "farey"}));

  std::string axisCmd;
  auto* axis = app.add_subcommand("axis", "the pseudo-Anosov axis on S2,1");
  axis->add_option("step", axisCmd, "build | diverge | contract | chain")
      ->required()
      ->check(CLI::IsMember({"build", "diverge", "contract", "chain"}));

  auto* suite = app.add_subcommand("suite", "run every driver and write the report bundle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      ExperimentConfig c = plainConfig(f);
      CurveFilter cf = filter == "separating" ? CurveFilter::Separating
                       : filter == "nonseparating" ? CurveFilter::Nonseparating
                                                    : CurveFilter::All;
      const auto& list = multi ? enumerateMulticurves(c.surface(), c.weightBound, filter == "separating", c.cap)
                               : enumerateCurves(c.surface(), c.weightBound, cf, c.cap);
      std::cout << list.size() << " " << (multi ? "multicurves" : "curves") << " on " << c.surface().str()
                << " with weight <= " << c.weightBound << "\n";
      for (auto& x : list) std::cout << curveLine(x) << "\n";
      return 0;
    }
    if (*ball) {
      if (!load.empty()) {
        GraphSnapshot s = loadSnapshot(load);
        std::cout << "loaded " << kindName(s.kind) << " snapshot " << s.digest() << ": " << s.vertices.size()
                  << " vertices, " << s.edgeCount() << " edges\n";
        return 0;
      }
      ExperimentConfig c = plainConfig(f);
      GraphKind k = parseKind(kind);
      NormalMulticurve b = base.empty() ? defaultBase(k, c.surface()) : curveArg(base, c.surface());
      GraphSnapshot s;
      switch (k) {
      case GraphKind::Curve: s = buildCurveSnapshot(b, c.weightBound, c.radius); break;
      case GraphKind::Pants: s = buildPantsSnapshot(b, c.weightBound, c.radius); break;
      case GraphKind::Sep: s = buildSepSnapshot(b, c.weightBound, c.radius, false); break;
      case GraphKind::SepPrime: s = buildSepSnapshot(b, c.weightBound, c.radius, true); break;
      }
      std::string path = saveSnapshot(s, c.out);
      std::vector<int> layers(s.radius + 1);
      for (int d : s.depth) ++layers[d];
      std::cout << kindName(k) << " ball on " << c.surface().str() << ": " << s.vertices.size() << " vertices, "
                << s.edgeCount() << " edges, layers";
      for (int x : layers) std::cout << " " << x;
      std::cout << "\nsaved " << path << "\n";
      return 0;
    }
    if (*dist) {
      GraphSnapshot s = loadSnapshot(snapFile);
      auto vertexOf = [&](const std::string& arg) {
        auto ints = parseInts(arg);
        if (ints.size() == 1) {
          if (ints[0] < 0 || ints[0] >= int(s.vertices.size()))
            throw LabError(Err::UnknownVertex, "no vertex " + arg + " in snapshot " + s.digest());
          return s.vertices[ints[0]];
        }
        return canonicalize(ints, referenceTriangulation(s.surface));
      };
      int d = graphDistance(s, vertexOf(from), vertexOf(to));
      std::cout << d << "\n";
      return 0;
    }
    if (*proj) {
      ExperimentConfig c = plainConfig(f);
      NormalMulticurve a = curveArg(curve, c.surface()), bd = curveArg(boundary, c.surface());
      SubsurfaceDescriptor y;
      if (piece >= 0) {
        y = pieceDescriptor(bd, piece);
      } else {
        auto ess = essentialComplement(bd);
        if (ess.empty()) throw LabError(Err::InvalidDescriptor, "the complement of the boundary has no essential piece");
        y = ess.front();
      }
      std::cout << "Y = " << subsurfaceSig(y).str() << "\n";
      if (pantsProj) {
        std::cout << curveLine(projectPants(a, y)) << "\n";
      } else {
        for (auto& x : subsurfaceProjection(a, y)) std::cout << curveLine(x) << "\n";
      }
      return 0;
    }
    if (*est) {
      ExperimentConfig c = configFor(f, "estimate");
      return finish(estimateDriver(c), c.out);
    }
    if (*verify) {
      ExperimentConfig c = configFor(f, which);
      Report r;
      if (which == "fibers") r = verifyFiberConnectivity(c);
      else if (which == "overlap") r = verifySepOverlap(c);
      else if (which == "behrstock") r = verifyBehrstock(c);
      else if (which == "projection-diameter") r = verifyProjectionDiameter(c);
      else if (which == "bilipschitz") r = verifyBilipschitz(c);
      else if (which == "labels") r = verifyComponentLabels(c);
      else if (which == "twist") r = verifyTwistIdentity(c);
      else r = verifyFarey(c);
      return finish(r, c.out);
    }
    if (*axis) {
      ExperimentConfig c = configFor(f, "axis-" + axisCmd);
      Report r;
      if (axisCmd == "build") r = axisBuildDriver(c);
      else if (axisCmd == "diverge") r = divergenceDriver(c);
      else if (axisCmd == "contract") r = contractionDriver(c);
      else r = thickChainDriver(c);
      return finish(r, c.out);
    }
    if (*suite) {
      json file = fileJson(f);
      json top = file;
      top.erase("drivers");
      ExperimentConfig c = configFromJson(flagJson(f), configFromJson(top));
      c.validate();
      SuiteResult res = runSuite(c, file);
      std::cout << "suite: " << (res.pass ? "all checks pass" : "some checks failed") << "; reports in " << c.out << "\n";
      for (auto& [name, ok] : res.drivers) std::cout << "  " << (ok ? "pass " : "FAIL ") << name << "\n";
      return res.pass ? 0 : 1;
    }
  } catch (const LabError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
