#include "../oracles.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/s20.hpp"

#include <doctest.h>

#include <random>

using namespace curvelab;

TEST_CASE("signatures parse and carry the usual invariants") {
  CHECK(parseSig("2,1") == SurfaceSig{2, 1});
  CHECK(parseSig("S0,5") == SurfaceSig{0, 5});
  CHECK_THROWS_AS(parseSig("two"), LabError);
  CHECK(complexity({2, 1}) == 4);
  CHECK(complexity({1, 1}) == 1);
  CHECK(eulerChar({0, 5}) == -3);
}

TEST_CASE("reference cells have 2|chi| + ... triangles and Euler characteristic matching the signature") {
  for (SurfaceSig s : {SurfaceSig{1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 1}, {0, 3}}) {
    const Triangulation& tri = referenceTriangulation(s);
    CAPTURE(s.str());
    // V - E + F with punctures as vertices
    int chi = tri.nverts - tri.nedges() + tri.ntri();
    CHECK(chi - s.boundary == eulerChar(s));
    CHECK(3 * tri.ntri() == 2 * tri.nedges());
  }
}

TEST_CASE("torus slopes: weights, intersection and the determinant") {
  const Triangulation& tri = referenceTriangulation({1, 1});
  std::mt19937_64 rng(11);
  auto pick = [&] {
    while (true) {
      long p = long(rng() % 31) - 15, q = long(rng() % 16);
      if (std::gcd(p, q) == 1) return oracle::normal(p, q);
    }
  };
  for (int k = 0; k < 150; ++k) {
    auto a = pick(), b = pick();
    NormalMulticurve ca = canonicalize(oracle::weightsOf(a), tri), cb = canonicalize(oracle::weightsOf(b), tri);
    REQUIRE(ca.size() == 1);
    CHECK(oracle::slopeOf(ca.weights) == a);
    CHECK(intersectionNumber(ca, cb) == oracle::det(a, b));
  }
}

TEST_CASE("canonical form strips peripheral pieces and splits components") {
  const Triangulation& tri = referenceTriangulation({1, 1});
  // twice a curve is a two-component multicurve in the same class
  NormalMulticurve c = canonicalize({1, 2, 1}, tri);
  REQUIRE(c.size() == 1);
  NormalMulticurve cc = canonicalize({2, 4, 2}, tri);
  CHECK(cc.weights == c.weights); // parallel copies merge
  CHECK_THROWS_AS(canonicalize({1, 1, 5}, tri), LabError); // triangle inequality fails
}

TEST_CASE("fingerprints separate the enumerated curves of small surfaces") {
  for (SurfaceSig s : {SurfaceSig{1, 1}, {0, 4}, {0, 5}, {1, 2}}) {
    const auto& cs = enumerateCurves(s, 3);
    std::set<std::vector<int>> fps;
    for (auto& c : cs) fps.insert(fingerprint(c));
    CAPTURE(s.str());
    CHECK(fps.size() == cs.size());
  }
}

TEST_CASE("intersection is symmetric and vanishes on the diagonal") {
  const auto& cs = enumerateCurves({0, 5}, 3);
  for (size_t a = 0; a < cs.size(); a += 3)
    for (size_t b = 0; b < cs.size(); b += 5) {
      CHECK(intersectionNumber(cs[a], cs[b]) == intersectionNumber(cs[b], cs[a]));
      if (a == b) CHECK(intersectionNumber(cs[a], cs[b]) == 0);
    }
}

TEST_CASE("separating curves on the once-punctured genus-two surface cut off genus") {
  const auto& seps = enumerateCurves({2, 1}, 4, CurveFilter::Separating);
  REQUIRE(!seps.empty());
  for (auto& c : seps) {
    CHECK(isSeparatingMulticurve(c));
    auto sig = cutAlong(c).signature();
    REQUIRE(sig.size() == 2);
    CHECK(sig[0].genus + sig[1].genus == 2);
  }
}

TEST_CASE("closed-surface classes through lifts") {
  const auto& down = enumerateCurves({2, 0}, 3);
  REQUIRE(!down.empty());
  for (size_t k = 0; k < down.size(); k += 7) {
    NormalMulticurve lift = liftCurve(down[k]);
    CHECK(s20SameClass(forgetBoundary(lift), down[k]));
  }
}
