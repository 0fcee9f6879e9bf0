#include "../oracles.hpp"

#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/lab.hpp"
#include "curvelab/mcg.hpp"
#include "curvelab/s20.hpp"

#include <doctest.h>

#include <random>

using namespace curvelab;

TEST_CASE("twists on the torus act on slopes by transvections") {
  const Triangulation& tri = referenceTriangulation({1, 1});
  std::mt19937_64 rng(5);
  auto pick = [&] {
    while (true) {
      long p = long(rng() % 15) - 7, q = long(rng() % 8);
      if (std::gcd(p, q) == 1) return oracle::normal(p, q);
    }
  };
  int eps = 0; // orientation convention, fixed by the first nontrivial case
  for (int k = 0; k < 80; ++k) {
    auto v = pick(), x = pick();
    if (oracle::det(v, x) == 0) continue;
    NormalMulticurve cv = canonicalize(oracle::weightsOf(v), tri), cx = canonicalize(oracle::weightsOf(x), tri);
    for (int n : {-2, -1, 1, 2}) {
      auto got = oracle::slopeOf(twistCurve(cv, cx, n).weights);
      if (eps == 0) eps = got == oracle::twist(v, x, n, 1) ? 1 : -1;
      CHECK(got == oracle::twist(v, x, n, eps));
    }
  }
  CHECK(eps != 0);
}

TEST_CASE("twist identity i(T_b^n a, a) = |n| i(a,b)^2") {
  for (SurfaceSig s : {SurfaceSig{0, 5}, {1, 2}, {2, 1}}) {
    const auto& cs = enumerateCurves(s, 3);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
      const auto& a = cs[rng() % cs.size()];
      const auto& b = cs[rng() % cs.size()];
      int i = intersectionNumber(a, b);
      for (int n : {-2, 1, 3}) CHECK(intersectionNumber(twistCurve(b, a, n), a) == std::abs(n) * i * i);
    }
  }
}

TEST_CASE("a twist and its inverse cancel") {
  const auto& cs = enumerateCurves({1, 2}, 3);
  for (size_t k = 0; k + 1 < cs.size(); k += 9) {
    NormalMulticurve t = twistCurve(cs[k + 1], twistCurve(cs[k + 1], cs[k], 2), -2);
    CHECK(t.weights == cs[k].weights);
  }
}

TEST_CASE("words parse and invert") {
  const auto& seed = pseudoAnosovSeed();
  TwistWord w = parseWord(seed.down.str(), {2, 0}, seed.curves);
  CHECK(w.str() == seed.down.str());
  NormalMulticurve a = seed.alpha0;
  CHECK(s20SameClass(applyTwist(w.inverse(), applyTwist(w, a)), a));
}

TEST_CASE("the seed map moves alpha_0 to a curve meeting it four times") {
  const auto& seed = pseudoAnosovSeed();
  CHECK(intersectionNumber(applyTwist(seed.down, seed.alpha0), seed.alpha0) == 4);
  NormalMulticurve a0 = liftCurve(seed.alpha0);
  CHECK(intersectionNumber(applyTwist(seed.up, a0), a0) == 4);
}

TEST_CASE("point pushes act trivially after forgetting the puncture") {
  const Triangulation& tri = puncturedCells();
  const auto& cs = enumerateCurves(tri.sig, 3);
  int pushes = 0;
  for (int e = 0; e < tri.nedges(); ++e) {
    TwistWord w;
    try {
      w = pointPush(tri, edgeLoop(tri, e));
    } catch (const LabError&) {
      continue;
    }
    ++pushes;
    for (size_t k = 0; k < cs.size(); k += 11)
      CHECK(s20SameClass(forgetBoundary(applyTwist(w, cs[k])), forgetBoundary(cs[k])));
  }
  CHECK(pushes > 0);
}

TEST_CASE("component labels") {
  const auto& down = enumerateCurves({2, 0}, 4, CurveFilter::Separating);
  REQUIRE(!down.empty());
  for (auto& x : down) {
    std::string expect;
    for (int v : fingerprint(x)) expect += (expect.empty() ? "" : ".") + std::to_string(v);
    CHECK(labelComponent(liftCurve(x)) == expect);
  }
  const Triangulation& tri = puncturedCells();
  const auto& seps = enumerateCurves(tri.sig, 4, CurveFilter::Separating);
  TwistWord w = pointPush(tri, edgeLoop(tri, 1));
  for (auto& c : seps) CHECK(labelComponent(applyTwist(w, c)) == labelComponent(c));
  const auto& nonsep = enumerateCurves(tri.sig, 2, CurveFilter::Nonseparating);
  CHECK_THROWS_AS(labelComponent(nonsep.front()), LabError);
}

TEST_CASE("bigon surgery keeps the fiber and reduces intersection") {
  const Triangulation& tri = puncturedCells();
  const auto& seps = enumerateCurves(tri.sig, 4, CurveFilter::Separating);
  TwistWord w = pointPush(tri, edgeLoop(tri, 1));
  int checked = 0;
  for (auto& c : seps) {
    NormalMulticurve a = applyTwist(w, c);
    int i = intersectionNumber(a, c);
    if (i == 0) {
      CHECK_THROWS_AS(bigonSurgeryStep(a, c, true), LabError);
      continue;
    }
    NormalMulticurve b = bigonSurgeryStep(a, c, true);
    CHECK(intersectionNumber(b, c) < i);
    CHECK(labelComponent(b) == labelComponent(c));
    ++checked;
  }
  CHECK(checked > 0);
}
