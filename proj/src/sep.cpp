#include "curvelab/sep.hpp"

#include "curvelab/crossings.hpp"
#include "curvelab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace curvelab {

bool UnionComplement::hasEssentialRegion() const {
  for (size_t p = 0; p < cut.pieces.size(); ++p)
    if (!core[p] && cut.pieces[p].essential()) return true;
  return false;
}

namespace {

struct Vertex {
  int cc, dc;      // component of c and of d
  Crossing onC;    // seen from c
  int dPos = 0;    // start of the run in d's direction
  int dKey = 0;
  bool cRightToLeft = false;
  int nextC = -1, prevC = -1, nextD = -1, prevD = -1;
  bool wrapC = false, wrapD = false; // edge to the next vertex wraps around
};

// half-edges: 0 = c out, 1 = c in, 2 = d out, 3 = d in
int ccwNext(const Vertex& v, int h) {
  // d heading east; c heads north when it crosses from d's right to its left
  static const int north[4] = {2, 0, 3, 1}; // order E N W S = dOut cOut dIn cIn
  static const int south[4] = {2, 1, 3, 0}; // E N W S = dOut cIn dIn cOut
  const int* order = v.cRightToLeft ? north : south;
  int k = 0;
  while (order[k] != h) ++k;
  return order[(k + 1) % 4];
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
};

} // namespace

UnionComplement unionComplement(const NormalMulticurve& c, const NormalMulticurve& d) {
  if (c.tri != d.tri) throw LabError(Err::MixedTriangulations, "union of curves on different triangulations");
  const Triangulation& tri = *c.tri;
  if (tri.closed) throw LabError(Err::UnsupportedSurface, "union complement runs on punctured surfaces");
  UnionComplement out;
  std::vector<Vertex> vs;
  std::map<std::tuple<int, int, int, int, bool, int>, int> byKey;
  for (int ci = 0; ci < c.size(); ++ci)
    for (const Crossing& x : crossingsAlong(tri, c.comps[ci].path, d)) {
      Vertex v;
      v.cc = ci;
      v.dc = x.comp;
      v.onC = x;
      v.dPos = x.cStart;
      v.cRightToLeft = x.rightToLeft;
      byKey[{ci, x.comp, x.i, x.cStart, x.reversedRun, x.len}] = static_cast<int>(vs.size());
      vs.push_back(v);
    }
  out.crossings = static_cast<int>(vs.size());
  // d's view gives the order along d
  for (int di = 0; di < d.size(); ++di)
    for (const Crossing& y : crossingsAlong(tri, d.comps[di].path, c)) {
      auto it = byKey.find({y.comp, di, y.cStart, y.i, y.reversedRun, y.len});
      if (it == byKey.end()) throw LabError(Err::DataFormat, "crossing seen from one curve only");
      vs[it->second].dKey = y.key;
    }
  auto link = [&](bool alongC, int ncomp) {
    for (int k = 0; k < ncomp; ++k) {
      std::vector<int> ids;
      for (int v = 0; v < static_cast<int>(vs.size()); ++v)
        if ((alongC ? vs[v].cc : vs[v].dc) == k) ids.push_back(v);
      std::sort(ids.begin(), ids.end(), [&](int p, int q) {
        if (alongC) return std::tie(vs[p].onC.i, vs[p].onC.key) < std::tie(vs[q].onC.i, vs[q].onC.key);
        return std::tie(vs[p].dPos, vs[p].dKey) < std::tie(vs[q].dPos, vs[q].dKey);
      });
      for (size_t p = 0; p < ids.size(); ++p) {
        int a = ids[p], b = ids[(p + 1) % ids.size()];
        if (alongC) vs[a].nextC = b, vs[b].prevC = a, vs[a].wrapC = p + 1 == ids.size();
        else vs[a].nextD = b, vs[b].prevD = a, vs[a].wrapD = p + 1 == ids.size();
      }
    }
  };
  link(true, c.size());
  link(false, d.size());

  // clusters of components joined by crossings; index c comps then d comps
  Dsu dsu(c.size() + d.size());
  for (auto& v : vs) dsu.p[dsu.find(v.cc)] = dsu.find(c.size() + v.dc);
  std::vector<bool> crossed(c.size() + d.size(), false);
  for (auto& v : vs) crossed[v.cc] = crossed[c.size() + v.dc] = true;

  std::vector<int> w(tri.nedges(), 0);
  auto addWeights = [&](const std::vector<int>& x) {
    for (int e = 0; e < tri.nedges(); ++e) w[e] += x[e];
  };
  for (int k = 0; k < c.size(); ++k)
    if (!crossed[k]) addWeights(c.comps[k].weights);
  for (int k = 0; k < d.size(); ++k)
    if (!crossed[c.size() + k]) addWeights(d.comps[k].weights);

  // trace boundary cycles of the ribbon graph
  std::vector<std::array<bool, 4>> used(vs.size(), {false, false, false, false});
  auto edgePath = [&](int v, int h) -> std::pair<Path, std::pair<int, int>> {
    const Vertex& x = vs[v];
    const Path& cp = c.comps[x.cc].path;
    const Path& dp = d.comps[x.dc].path;
    switch (h) {
    case 0: return {cyclicSegment(cp, x.onC.i, vs[x.nextC].onC.i, x.wrapC), {x.nextC, 1}};
    case 1: {
      const Vertex& p = vs[x.prevC];
      return {reversed(tri, cyclicSegment(cp, p.onC.i, x.onC.i, p.wrapC)), {x.prevC, 0}};
    }
    case 2: return {cyclicSegment(dp, x.dPos, vs[x.nextD].dPos, x.wrapD), {x.nextD, 3}};
    default: {
      const Vertex& p = vs[x.prevD];
      return {reversed(tri, cyclicSegment(dp, p.dPos, x.dPos, p.wrapD)), {x.prevD, 2}};
    }
    }
  };
  auto bridge = [&](int v) { return bridgeToB(c.comps[vs[v].cc].path, vs[v].onC); };
  for (int v0 = 0; v0 < static_cast<int>(vs.size()); ++v0)
    for (int h0 = 0; h0 < 4; ++h0) {
      if (used[v0][h0]) continue;
      Path cyc;
      int v = v0, h = h0;
      while (!used[v][h]) {
        used[v][h] = true;
        auto [seg, arrive] = edgePath(v, h);
        cyc.insert(cyc.end(), seg.begin(), seg.end());
        int nv = arrive.first, nh = arrive.second;
        int leave = ccwNext(vs[nv], nh);
        bool fromC = nh <= 1, toC = leave <= 1;
        if (fromC && !toC) {
          Path b = bridge(nv);
          cyc.insert(cyc.end(), b.begin(), b.end());
        } else if (!fromC && toC) {
          Path b = reversed(tri, bridge(nv));
          cyc.insert(cyc.end(), b.begin(), b.end());
        }
        v = nv;
        h = leave;
      }
      Path r = reducePath(tri, cyc);
      if (r.empty()) continue;
      if (selfIntersection(tri, r) != 0) {
        ++out.traceFailures;
        continue;
      }
      TraceReport rep = traceWeights(tri, pathWeights(tri, r));
      for (auto& e : rep.essential) addWeights(e.weights);
    }

  bool anyBoundary = std::any_of(w.begin(), w.end(), [](int x) { return x > 0; });
  if (!anyBoundary) {
    // the union fills: the complement is disks and punctured disks
    out.boundary.tri = &tri;
    out.boundary.weights = w;
    out.cut.pieces.push_back(Piece{tri.sig, eulerChar(tri.sig), {}, {}});
    out.core = {true};
    return out;
  }
  out.boundary = canonicalize(w, tri);
  out.cut = cutAlong(out.boundary);
  out.core.assign(out.cut.pieces.size(), false);
  std::vector<bool> seenCluster(c.size() + d.size(), false);
  for (int k = 0; k < c.size() + d.size(); ++k) {
    if (!crossed[k]) continue;
    int root = dsu.find(k);
    if (seenCluster[root]) continue;
    seenCluster[root] = true;
    NormalMulticurve comp = k < c.size() ? c.component(k) : d.component(k - c.size());
    int p = locateCurve(comp, out.boundary, out.cut);
    if (p >= 0) out.core[p] = true;
  }
  return out;
}

bool sepAdjacent(const NormalMulticurve& c, const NormalMulticurve& d) {
  if (!isSeparatingMulticurve(c) || !isSeparatingMulticurve(d))
    throw LabError(Err::NotSeparating, "adjacency in the separating complex needs separating multicurves");
  if (c.weights == d.weights) return false;
  return unionComplement(c, d).hasEssentialRegion();
}

bool sepPrimeAdjacent(const NormalMulticurve& c, const NormalMulticurve& d) {
  if (!isSeparatingMulticurve(c) || !isSeparatingMulticurve(d))
    throw LabError(Err::NotSeparating, "adjacency in the separating complex needs separating multicurves");
  if (c.weights == d.weights) return false;
  if (intersectionNumber(c, d) != 0) return false;
  return unionComplement(c, d).hasEssentialRegion();
}

} // namespace curvelab
