#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/lab.hpp"
#include "curvelab/s20.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace curvelab;
using nlohmann::json;

TEST_CASE("config fields layer over the base") {
  ExperimentConfig base;
  base.samples = 9;
  auto c = configFromJson(json{{"surface", "S0,5"}, {"weight_bound", 6}, {"epsilon", "2/3"}}, base);
  CHECK(c.surface() == SurfaceSig{0, 5});
  CHECK(c.weightBound == 6);
  CHECK(c.samples == 9);
  CHECK(c.epsNum == 2);
  CHECK(c.epsDen == 3);
  auto m = configFromJson(json{{"surface", json::array({"0,5", "1,2"})}});
  CHECK(m.surfaces.size() == 2);

  json file{{"radius", 2}, {"drivers", {{"twist", {{"radius", 3}}}}}};
  CHECK(driverConfig(file, "twist", base).radius == 3);
  // only the driver section is read here; top-level fields are layered by the caller
  CHECK(driverConfig(file, "farey", base).radius == base.radius);
  CHECK(configFromJson(configJson(c)).weightBound == 6);

  CHECK_THROWS_AS(configFromJson(json{{"radius", "far"}}), LabError);
  CHECK_THROWS_AS(configFromJson(json{{"epsilon", "half"}}), LabError);
  ExperimentConfig bad;
  bad.radius = 0;
  CHECK_THROWS_AS(bad.validate(), LabError);
  CHECK_THROWS_AS(loadConfigFile("/nonexistent/curvelab.json"), LabError);
}

TEST_CASE("spearman rank correlation") {
  CHECK(spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
  CHECK(spearman({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
  // ties get average ranks
  CHECK(spearman({1, 1, 2, 3}, {1, 1, 2, 3}) == doctest::Approx(1.0));
  CHECK(spearman({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
  CHECK(std::isnan(spearman({2, 2, 2}, {1, 2, 3})));
}

TEST_CASE("affine upper envelope covers every point") {
  std::vector<double> x{0, 1, 2, 3, 4}, y{1, 2, 5, 4, 6};
  AffineBound b = upperEnvelope(x, y);
  double touch = 1e9;
  for (size_t i = 0; i < x.size(); ++i) {
    CHECK(y[i] <= b.slope * x[i] + b.offset + 1e-9);
    touch = std::min(touch, b.slope * x[i] + b.offset - y[i]);
  }
  CHECK(touch == doctest::Approx(0.0));
  CHECK(b.slope == doctest::Approx(1.2));
}

TEST_CASE("reports render and land on disk") {
  Report r;
  r.driver = "demo";
  r.pass = false;
  r.data["n"] = 3;
  r.table = {{"a", "bb"}, {"1", "2"}};
  r.notes = {"something"};
  std::string text = renderTable(r);
  CHECK(text.find("demo: FAIL") != std::string::npos);
  CHECK(text.find("note: something") != std::string::npos);
  auto dir = std::filesystem::temp_directory_path() / "curvelab-unit-report";
  std::filesystem::remove_all(dir);
  writeReport(r, dir.string());
  std::ifstream in(dir / "demo.json");
  CHECK(json::parse(in)["n"] == 3);
  CHECK(std::filesystem::exists(dir / "demo.txt"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("small drivers pass at their default scale") {
  ExperimentConfig c;
  c.surfaces = {{1, 1}};
  c.weightBound = 5;
  c.radius = 2;
  CHECK(verifyFarey(c).pass);
  c.surfaces = {{0, 5}, {1, 2}};
  c.weightBound = 3;
  c.samples = 20;
  CHECK(verifyTwistIdentity(c).pass);
}

TEST_CASE("axis probes reject out-of-range requests") {
  AxisSegment axis = buildAxis(1);
  CHECK(axis.pants.size() == 3);
  AxisPath path = localAxisPath(axis, 6, 2);
  CHECK(path.snap.vertices[path.at(0)].weights == axis.at(0).weights);
  DivergenceRow zero = divergenceProbe(path, 0, 1, 2);
  CHECK(zero.distance == 0);
  CHECK(zero.removed == 0);
  DivergenceRow one = divergenceProbe(path, 1, 1, 2);
  CHECK(one.distance == 2);
  CHECK(one.detour >= one.distance);
  try {
    divergenceProbe(path, 3, 1, 2);
    FAIL("expected RadiusExceedsSnapshot");
  } catch (const LabError& e) {
    CHECK(e.code() == Err::RadiusExceedsSnapshot);
  }
}

TEST_CASE("the chain witness needs four intersections") {
  AxisSegment axis = buildAxis(1);
  ExperimentConfig c;
  try {
    thickChainWitness(axis.alpha[1], axis.alpha[1], c);
    FAIL("expected WrongIntersection");
  } catch (const LabError& e) {
    CHECK(e.code() == Err::WrongIntersection);
  }
}

TEST_CASE("fiber driver reports too few pairs") {
  ExperimentConfig c;
  c.weightBound = 1;
  c.samples = 1000;
  try {
    verifyFiberConnectivity(c);
    FAIL("expected SampleExhausted");
  } catch (const LabError& e) {
    CHECK(e.code() == Err::SampleExhausted);
  }
}
