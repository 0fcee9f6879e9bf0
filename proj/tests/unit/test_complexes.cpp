#include "../oracles.hpp"

#include "curvelab/complexes.hpp"
#include "curvelab/distance.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/pants.hpp"
#include "curvelab/projection.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

using namespace curvelab;

namespace {

std::set<std::vector<int>> weightSet(const std::vector<NormalMulticurve>& cs) {
  std::set<std::vector<int>> out;
  for (auto& c : cs) out.insert(c.weights);
  return out;
}

void checkInvariants(const GraphSnapshot& s) {
  REQUIRE(s.vertices.size() == s.adj.size());
  for (size_t u = 0; u < s.adj.size(); ++u) {
    CHECK(snapshotMember(s.kind, s.vertices[u]));
    CHECK(s.find(s.vertices[u]) == int(u));
    CHECK(std::is_sorted(s.adj[u].begin(), s.adj[u].end()));
    for (int v : s.adj[u]) {
      CHECK(v != int(u));
      CHECK(std::binary_search(s.adj[v].begin(), s.adj[v].end(), int(u)));
      CHECK(snapshotAdjacent(s.kind, s.vertices[u], s.vertices[v]));
    }
  }
  CHECK(s.depth.front() == 0);
}

} // namespace

TEST_CASE("torus curve ball agrees with the Farey oracle") {
  const Triangulation& tri = referenceTriangulation({1, 1});
  oracle::Slope base{0, 1};
  GraphSnapshot s = buildCurveSnapshot(canonicalize(oracle::weightsOf(base), tri), 5, 2);
  checkInvariants(s);
  auto ball = oracle::fareyBall(base, 5, 2);
  std::set<oracle::Slope> got;
  for (auto& v : s.vertices) got.insert(oracle::slopeOf(v.weights));
  CHECK(got == ball.vertices);
  std::set<std::pair<oracle::Slope, oracle::Slope>> edges;
  for (auto [u, v] : s.edges()) {
    auto a = oracle::slopeOf(s.vertices[u].weights), b = oracle::slopeOf(s.vertices[v].weights);
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  CHECK(edges == ball.edges);
}

TEST_CASE("snapshots on S0,5 satisfy the structural invariants") {
  const auto& cs = enumerateCurves({0, 5}, 2);
  GraphSnapshot s = buildCurveSnapshot(cs.front(), 3, 2);
  checkInvariants(s);
  auto d = s.distancesFrom(0);
  for (size_t v = 0; v < d.size(); ++v) CHECK(d[v] == s.depth[v]);
  CHECK(graphDistance(s, s.vertices[3], s.vertices[3]) == 0);
  CHECK(graphDistance(s, s.vertices[0], s.vertices[5]) == graphDistance(s, s.vertices[5], s.vertices[0]));
  const auto& far = enumerateCurves({0, 5}, 6);
  auto missing = std::find_if(far.begin(), far.end(), [&](auto& c) { return s.find(c) < 0; });
  REQUIRE(missing != far.end());
  try {
    graphDistance(s, s.vertices[0], *missing);
    FAIL("expected UnknownVertex");
  } catch (const LabError& e) {
    CHECK(e.code() == Err::UnknownVertex);
  }
}

TEST_CASE("snapshot files round trip and detect tampering") {
  const auto& cs = enumerateCurves({0, 5}, 2);
  GraphSnapshot s = buildCurveSnapshot(cs.front(), 3, 2);
  GraphSnapshot back = snapshotFromJson(snapshotJson(s));
  CHECK(back.digest() == s.digest());
  CHECK(back.edges() == s.edges());
  CHECK(weightSet(back.vertices) == weightSet(s.vertices));

  auto dir = std::filesystem::temp_directory_path() / "curvelab-unit-snap";
  std::filesystem::remove_all(dir);
  std::string path = saveSnapshot(s, dir.string());
  CHECK(loadSnapshot(path).edges() == s.edges());

  auto j = nlohmann::json::parse(snapshotJson(s));
  j["edges"].erase(j["edges"].begin());
  std::ofstream(path) << j.dump();
  try {
    loadSnapshot(path);
    FAIL("expected DataFormat");
  } catch (const LabError& e) {
    CHECK(e.code() == Err::DataFormat);
    CHECK(std::string(e.what()).find(s.digest()) != std::string::npos);
  }
  CHECK_THROWS_AS(loadSnapshot((dir / "missing.json").string()), LabError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("pants moves on the torus are Farey neighbours") {
  const Triangulation& tri = referenceTriangulation({1, 1});
  oracle::Slope base{1, 2};
  auto nbrs = pantsNeighbors(canonicalize(oracle::weightsOf(base), tri), 6);
  std::set<oracle::Slope> got, want;
  for (auto& n : nbrs) got.insert(oracle::slopeOf(n.weights));
  for (auto& s : oracle::fareyBall(base, 6, 1).vertices)
    if (s != base) want.insert(s);
  CHECK(got == want);
}

TEST_CASE("pants moves on S0,5 change one curve and agree with enumeration") {
  GraphSnapshot s = buildPantsSnapshot(extendMulticurve(enumerateCurves({0, 5}, 2).front(), markingCurves(referenceTriangulation({0, 5}))), 3, 2);
  checkInvariants(s);
  for (size_t v = 0; v < s.vertices.size(); v += 4) {
    const auto& p = s.vertices[v];
    CHECK(isPantsDecomposition(p));
    CHECK(p.size() == complexity({0, 5}));
    auto a = pantsNeighbors(p, 3);
    CHECK(weightSet(a) == weightSet(pantsNeighborsByEnumeration(p, 3)));
    for (auto& q : a) {
      CHECK(isPantsDecomposition(q));
      int shared = 0;
      for (auto& x : p.comps)
        for (auto& y : q.comps) shared += x.weights == y.weights;
      CHECK(shared == p.size() - 1);
    }
  }
}

TEST_CASE("subsurface projection basics") {
  const auto& cs = enumerateCurves({0, 5}, 3);
  const NormalMulticurve& c = cs.front();
  auto pieces = essentialComplement(c);
  REQUIRE(pieces.size() == 1);
  const SubsurfaceDescriptor& y = pieces.front();
  CHECK(subsurfaceSig(y) == SurfaceSig{0, 4});
  CHECK(subsurfaceProjection(c, y).empty());
  int inside = 0, cutting = 0;
  for (auto& x : cs) {
    if (curveInside(x, y)) {
      ++inside;
      auto p = subsurfaceProjection(x, y);
      REQUIRE(p.size() == 1);
      CHECK(p.front().weights == x.weights);
    } else if (intersectionNumber(x, c) > 0) {
      ++cutting;
      for (auto& p : subsurfaceProjection(x, y)) CHECK(curveInside(p, y));
    }
  }
  CHECK(inside > 0);
  CHECK(cutting > 0);
}

TEST_CASE("pants projection fills the subsurface") {
  const auto& cs = enumerateCurves({1, 2}, 2);
  for (size_t k = 0; k < cs.size(); k += 5) {
    for (auto& y : essentialComplement(cs[k])) {
      for (size_t x = 0; x < cs.size(); x += 7) {
        if (subsurfaceProjection(cs[x], y).empty()) {
          CHECK_THROWS_AS(projectPants(cs[x], y), LabError);
          continue;
        }
        NormalMulticurve p = projectPants(cs[x], y);
        CHECK(p.size() == complexity(subsurfaceSig(y)));
        for (int i = 0; i < p.size(); ++i) CHECK(curveInside(p.component(i), y));
      }
    }
  }
}

TEST_CASE("distance estimate vanishes on the diagonal and decreases with the threshold") {
  SurfaceSig s{0, 5};
  auto universe = subsurfaceUniverse(s, 2);
  ProjectionDistances dist(3);
  GraphSnapshot ball = buildPantsSnapshot(extendMulticurve(enumerateCurves(s, 2).front(), markingCurves(referenceTriangulation(s))), 3, 2);
  const auto& p = ball.vertices.front();
  CHECK(distanceFormulaEstimate(p, p, 1, universe, dist).sum == 0);
  for (size_t v = 1; v < ball.vertices.size(); v += 6) {
    int prev = -1;
    for (int m = 1; m <= 4; ++m) {
      int sum = distanceFormulaEstimate(p, ball.vertices[v], m, universe, dist).sum;
      if (prev >= 0) CHECK(sum <= prev);
      prev = sum;
    }
  }
}

TEST_CASE("overlap is symmetric and irreflexive") {
  auto universe = subsurfaceUniverse({0, 5}, 2);
  REQUIRE(universe.size() > 2);
  for (size_t a = 0; a < universe.size(); ++a) {
    CHECK(!overlaps(universe[a], universe[a]));
    for (size_t b = 0; b < universe.size(); ++b) CHECK(overlaps(universe[a], universe[b]) == overlaps(universe[b], universe[a]));
  }
}
