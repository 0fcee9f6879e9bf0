#include "curvelab/s20.hpp"

#include "curvelab/crossings.hpp"
#include "curvelab/cut.hpp"
#include "curvelab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace curvelab {

const Triangulation& closedCells() { return referenceTriangulation({2, 0}); }
const Triangulation& puncturedCells() { return referenceTriangulation({2, 1}); }

NormalMulticurve asLift(const NormalMulticurve& c) {
  if (!c.tri->closed) return c;
  return canonicalize(c.weights, puncturedCells());
}

NormalMulticurve forgetBoundary(const NormalMulticurve& c) {
  if (c.tri->sig != SurfaceSig{2, 1})
    throw LabError(Err::SurfaceMismatch, "forgetBoundary expects a curve on S2,1, got " + c.tri->sig.str());
  return canonicalize(c.weights, closedCells());
}

namespace {

struct Visit {
  int t, enter, exit, corner, index;
  bool forward; // vertex at the corner on the right
};

Visit visitAt(const Triangulation& tri, const std::vector<int>& w, const Component& comp, int i) {
  const int n = static_cast<int>(comp.path.size());
  Visit v;
  v.t = comp.path[i].t;
  v.exit = comp.path[i].s;
  v.enter = across(tri, comp.path[(i + n - 1) % n]).s;
  v.forward = v.exit == (v.enter + 1) % 3;
  if (v.forward) {
    v.corner = v.exit;
    v.index = comp.pos[i];
  } else {
    v.corner = v.enter;
    v.index = w[tri.edge[v.t][v.exit]] - 1 - comp.pos[i];
  }
  return v;
}

// candidate path with a loop around a vertex spliced in before visit i
Path spliced(const Triangulation& tri, const Path& p, int i, int corner, bool forward) {
  Path loop = vertexLoop(tri, p[i].t, corner, forward);
  Path out(p.begin(), p.begin() + i);
  out.insert(out.end(), loop.begin(), loop.end());
  out.insert(out.end(), p.begin() + i, p.end());
  return reducePath(tri, out);
}

} // namespace

std::vector<NormalMulticurve> puncturePushes(const NormalMulticurve& lift) {
  const Triangulation& tri = *lift.tri;
  const auto& w = lift.weights;
  std::vector<NormalMulticurve> out;
  std::set<std::vector<int>> seen;
  seen.insert(w);
  for (size_t k = 0; k < lift.comps.size(); ++k) {
    const Component& comp = lift.comps[k];
    const int n = static_cast<int>(comp.path.size());
    std::vector<std::pair<int, std::pair<int, bool>>> tries; // (visit, (corner, direction))
    for (int i = 0; i < n; ++i) {
      Visit v = visitAt(tri, w, comp, i);
      int nk = cornerCount(tri, w, v.t, v.corner);
      if (v.index == 0) tries.push_back({i, {v.corner, !v.forward}});
      if (v.index == nk - 1) {
        for (int c = 0; c < 3; ++c) {
          if (c == v.corner || cornerCount(tri, w, v.t, c) != 0) continue;
          tries.push_back({i, {c, v.forward}});
        }
      }
    }
    for (auto& [i, cd] : tries) {
      for (int attempt = 0; attempt < 2; ++attempt) {
        bool dir = attempt == 0 ? cd.second : !cd.second;
        Path np = spliced(tri, comp.path, i, cd.first, dir);
        if (np.empty() || selfIntersection(tri, np) != 0) continue;
        bool clash = false;
        for (size_t o = 0; o < lift.comps.size() && !clash; ++o)
          if (o != k && pathIntersection(tri, np, lift.comps[o].path) != 0) clash = true;
        if (clash) continue;
        std::vector<int> nw = pathWeights(tri, np);
        for (size_t o = 0; o < lift.comps.size(); ++o)
          if (o != k)
            for (size_t e = 0; e < nw.size(); ++e) nw[e] += lift.comps[o].weights[e];
        if (!seen.insert(nw).second) break;
        try {
          NormalMulticurve m = canonicalize(nw, tri);
          if (m.size() == lift.size()) out.push_back(std::move(m));
        } catch (const LabError&) {
          // pushed component became peripheral; not a lift
        }
        break;
      }
    }
  }
  return out;
}

NormalMulticurve minimalLift(const NormalMulticurve& aLift, const NormalMulticurve& bLift) {
  NormalMulticurve cur = aLift;
  int best = rawIntersection(cur, bLift);
  while (best > 0) {
    bool moved = false;
    for (auto& cand : puncturePushes(cur)) {
      int x = rawIntersection(cand, bLift);
      if (x < best) {
        best = x;
        cur = cand;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return cur;
}

namespace {

int pairIntersection(const NormalMulticurve& aLift, const NormalMulticurve& bLift) {
  return rawIntersection(minimalLift(aLift, bLift), bLift);
}

// a and b single lifts realized disjointly: same class downstairs?
bool coboundPuncturedAnnulus(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.weights == b.weights) return true;
  NormalMulticurve u = unionOf(a, b);
  if (u.size() != 2) return u.size() == 1;
  CutSurface cut = cutAlong(u);
  for (auto& pc : cut.pieces) {
    if (pc.sig != SurfaceSig{0, 3} || pc.punctures.size() != 1 || pc.sides.size() != 2) continue;
    if (pc.sides[0][0] != pc.sides[1][0]) return true;
  }
  return false;
}

bool sameSingle(const NormalMulticurve& aLift, const NormalMulticurve& bLift) {
  NormalMulticurve a = minimalLift(aLift, bLift);
  if (rawIntersection(a, bLift) != 0) return false;
  return coboundPuncturedAnnulus(a, bLift);
}

} // namespace

NormalMulticurve s20MergeParallel(const NormalMulticurve& m) {
  if (m.size() < 2) return m;
  CutSurface cut = cutAlong(m);
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  bool merged = false;
  for (auto& pc : cut.pieces) {
    if (pc.sig != SurfaceSig{0, 2} || pc.punctures.size() != 1 || pc.sides.size() != 2) continue;
    int a = find(pc.sides[0][0]), b = find(pc.sides[1][0]);
    if (a == b) continue;
    parent[std::max(a, b)] = std::min(a, b);
    merged = true;
  }
  if (!merged) return m;
  std::vector<int> w(m.weights.size(), 0);
  for (int k = 0; k < m.size(); ++k) {
    if (find(k) != k) continue;
    for (size_t e = 0; e < w.size(); ++e) w[e] += m.comps[k].weights[e];
  }
  return canonicalize(w, *m.tri);
}

int s20Intersection(const NormalMulticurve& a, const NormalMulticurve& b) {
  int total = 0;
  for (int i = 0; i < a.size(); ++i) {
    NormalMulticurve ai = asLift(a.component(i));
    for (int j = 0; j < b.size(); ++j) total += pairIntersection(ai, asLift(b.component(j)));
  }
  return total;
}

bool s20SameClass(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.size() != b.size()) return false;
  if (a.weights == b.weights) return true;
  std::vector<char> used(b.size(), 0);
  for (int i = 0; i < a.size(); ++i) {
    NormalMulticurve ai = asLift(a.component(i));
    bool found = false;
    for (int j = 0; j < b.size() && !found; ++j) {
      if (used[j]) continue;
      if (sameSingle(ai, asLift(b.component(j)))) {
        found = true;
        used[j] = 1;
      }
    }
    if (!found) return false;
  }
  return true;
}

NormalMulticurve liftCurve(const NormalMulticurve& c) {
  if (!c.tri->closed) throw LabError(Err::SurfaceMismatch, "liftCurve expects a curve on S2,0");
  const auto& marks = markingCurves(closedCells());
  std::vector<NormalMulticurve> lifted;
  for (auto& m : marks) lifted.push_back(asLift(m));
  auto phi = [&](const NormalMulticurve& x) {
    int s = 0;
    for (auto& m : lifted) s += rawIntersection(x, m);
    return s;
  };
  NormalMulticurve cur = asLift(c);
  int best = phi(cur);
  for (;;) {
    bool moved = false;
    for (auto& cand : puncturePushes(cur)) {
      int x = phi(cand);
      if (x < best) {
        best = x;
        cur = cand;
        moved = true;
      }
    }
    if (!moved) break;
  }
  // among the least-intersection lifts reachable by level moves take the smallest
  std::map<std::vector<int>, NormalMulticurve> level;
  std::vector<NormalMulticurve> frontier{cur};
  level.emplace(cur.weights, cur);
  const size_t cap = 256;
  while (!frontier.empty() && level.size() < cap) {
    std::vector<NormalMulticurve> next;
    for (auto& f : frontier)
      for (auto& cand : puncturePushes(f)) {
        if (level.count(cand.weights) || phi(cand) != best) continue;
        level.emplace(cand.weights, cand);
        next.push_back(cand);
      }
    frontier.swap(next);
  }
  const NormalMulticurve* pick = nullptr;
  int pickSum = 0;
  for (auto& [w, m] : level) {
    int s = std::accumulate(w.begin(), w.end(), 0);
    if (!pick || s < pickSum) pick = &m, pickSum = s;
  }
  return *pick;
}

namespace {

std::optional<NormalMulticurve> simpleCurveFromPath(const Triangulation& tri, const Path& raw) {
  Path p = reducePath(tri, raw);
  if (p.empty() || selfIntersection(tri, p) != 0) return std::nullopt;
  TraceReport rep = traceWeights(tri, pathWeights(tri, p));
  if (rep.essential.size() != 1) return std::nullopt;
  return canonicalize(rep.essential[0].weights, tri);
}

} // namespace

NormalMulticurve bigonSurgeryStep(const NormalMulticurve& a, const NormalMulticurve& b, bool fiberGuard) {
  if (a.tri != b.tri) throw LabError(Err::MixedTriangulations, "surgery on curves from different triangulations");
  const Triangulation& tri = *a.tri;
  if (tri.closed) throw LabError(Err::UnsupportedSurface, "surgery runs on the punctured surface");
  if (a.size() != 1 || b.size() != 1) throw LabError(Err::InvalidDescriptor, "surgery expects single curves");
  const int before = intersectionNumber(a, b);
  if (before == 0) throw LabError(Err::AlreadyDisjoint, "curves are already disjoint");
  NormalMulticurve down;
  if (fiberGuard) down = forgetBoundary(a);
  const Path& ap = a.comps[0].path;
  const Path& bp = b.comps[0].path;
  const int m = static_cast<int>(bp.size());
  auto xs = crossingsAlong(tri, ap, b);
  const int nx = static_cast<int>(xs.size());
  std::optional<std::pair<std::vector<int>, NormalMulticurve>> best;
  // keep a from z around to x, then return along b from x to z
  for (int q = 0; q < nx; ++q) {
    const Crossing& x = xs[q];
    const Crossing& z = xs[(q + 1) % nx];
    Path rest = cyclicSegment(ap, z.i, x.i, q + 1 < nx);
    Path bx = bridgeToB(ap, x), bz = reversed(tri, bridgeToB(ap, z));
    const int jx = x.cStart, jz = z.cStart;
    std::vector<Path> closings;
    if (jx == jz) {
      closings.push_back({});
      closings.push_back(cyclicSegment(bp, jx, jx, true));
      closings.push_back(reversed(tri, cyclicSegment(bp, jx, jx, true)));
    } else {
      closings.push_back(cyclicSegment(bp, jx, jz + (jz < jx ? m : 0), false));
      closings.push_back(reversed(tri, cyclicSegment(bp, jz, jx + (jx < jz ? m : 0), false)));
    }
    for (auto& cl : closings) {
      Path path = rest;
      path.insert(path.end(), bx.begin(), bx.end());
      path.insert(path.end(), cl.begin(), cl.end());
      path.insert(path.end(), bz.begin(), bz.end());
      auto cand = simpleCurveFromPath(tri, path);
      if (!cand) continue;
      const int after = intersectionNumber(*cand, b);
      if (after >= before) continue;
      if (fiberGuard && !s20SameClass(forgetBoundary(*cand), down)) continue;
      // smallest drop first
      std::vector<int> key{-after};
      auto fp = fingerprint(*cand);
      key.insert(key.end(), fp.begin(), fp.end());
      key.insert(key.end(), cand->weights.begin(), cand->weights.end());
      if (!best || key < best->first) best.emplace(key, *cand);
    }
  }
  if (!best) throw LabError(Err::NoAdmissibleBigon, "no bigon surgery lowers the intersection");
  return best->second;
}

} // namespace curvelab
