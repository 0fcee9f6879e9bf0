#include "curvelab/distance.hpp"

#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/pants.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace curvelab {

Subsurface wholeSurface(const Triangulation& tri) {
  Subsurface s;
  s.desc.ambient = tri.sig;
  s.desc.boundary.tri = &tri;
  s.desc.boundary.weights.assign(tri.nedges(), 0);
  s.sig = tri.sig;
  s.frontier = s.desc.boundary;
  s.key = "S";
  return s;
}

Subsurface makeSubsurface(const SubsurfaceDescriptor& d) {
  if (d.boundary.empty()) return wholeSurface(*d.boundary.tri);
  Subsurface s;
  s.desc = d;
  CutSurface cut = cutAlong(d.boundary);
  int p = connectedPiece(d, cut);
  s.sig = cut.pieces[p].sig;
  std::vector<int> keep;
  for (int k = 0; k < d.boundary.size(); ++k)
    if (cut.sidePiece[k][0] == p || cut.sidePiece[k][1] == p) keep.push_back(k);
  s.frontier = subMulticurve(d.boundary, keep);
  s.key = s.sig.str() + "|";
  for (int x : s.frontier.weights) s.key += std::to_string(x) + ",";
  s.key += "|";
  for (int x : cut.pieces[p].punctures) s.key += std::to_string(x) + ",";
  return s;
}

std::vector<Subsurface> subsurfaceUniverse(SurfaceSig sig, int bound) {
  const Triangulation& tri = referenceTriangulation(sig);
  std::map<std::string, Subsurface> found;
  Subsurface whole = wholeSurface(tri);
  found.emplace(whole.key, whole);
  for (auto& m : enumerateMulticurves(sig, bound, false))
    for (auto& d : essentialComplement(m)) {
      Subsurface s = makeSubsurface(d);
      found.emplace(s.key, s);
    }
  std::vector<Subsurface> out;
  for (auto& [k, s] : found) out.push_back(s);
  return out;
}

bool overlaps(const Subsurface& a, const Subsurface& b) {
  if (a.frontier.empty() || b.frontier.empty()) return false; // the whole surface contains everything
  return !subsurfaceProjection(b.frontier, a.desc).empty() && !subsurfaceProjection(a.frontier, b.desc).empty();
}

CurveGraphIn::CurveGraphIn(const Subsurface& y, int bound) : sig_(y.sig) {
  for (auto& c : enumerateCurves(y.desc.ambient, bound))
    if (y.frontier.empty() || curveInside(c, y.desc)) add(c);
}

int CurveGraphIn::add(const NormalMulticurve& c) {
  auto it = index_.find(c.weights);
  if (it != index_.end()) return it->second;
  int v = size();
  adj_.emplace_back();
  for (int u = 0; u < v; ++u)
    if (curveAdjacentIn(sig_, verts_[u], c)) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  verts_.push_back(c);
  index_[c.weights] = v;
  return v;
}

std::vector<int> CurveGraphIn::distancesFrom(const std::vector<int>& sources) const {
  std::vector<int> d(verts_.size(), -1);
  std::deque<int> q;
  for (int s : sources)
    if (d[s] < 0) d[s] = 0, q.push_back(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : adj_[u])
      if (d[w] < 0) d[w] = d[u] + 1, q.push_back(w);
  }
  return d;
}

int CurveGraphIn::setDistance(const std::vector<NormalMulticurve>& a, const std::vector<NormalMulticurve>& b) {
  std::vector<int> va, vb;
  for (auto& c : a) va.push_back(add(c));
  for (auto& c : b) vb.push_back(add(c));
  auto d = distancesFrom(va);
  int best = -1;
  for (int v : vb)
    if (d[v] >= 0 && (best < 0 || d[v] < best)) best = d[v];
  return best;
}

int CurveGraphIn::vertex(const NormalMulticurve& c) const {
  auto it = index_.find(c.weights);
  return it == index_.end() ? -1 : it->second;
}

int CurveGraphIn::diameter(const std::vector<NormalMulticurve>& a) {
  std::vector<int> va;
  for (auto& c : a) va.push_back(add(c));
  int diam = 0;
  for (int s : va) {
    auto d = distancesFrom({s});
    for (int v : va) {
      if (d[v] < 0) return -1;
      diam = std::max(diam, d[v]);
    }
  }
  return diam;
}

CurveGraphIn& ProjectionDistances::graph(const Subsurface& y) {
  auto& g = graphs_[y.key];
  if (!g) g = std::make_unique<CurveGraphIn>(y, bound_);
  return *g;
}

const std::vector<NormalMulticurve>& ProjectionDistances::projection(const Subsurface& y, const NormalMulticurve& a) {
  auto key = std::make_pair(y.key, a.weights);
  auto it = projections_.find(key);
  if (it == projections_.end()) it = projections_.emplace(key, subsurfaceProjection(a, y.desc)).first;
  return it->second;
}

int ProjectionDistances::distance(const Subsurface& y, const NormalMulticurve& a, const NormalMulticurve& b) {
  const auto& pa = projection(y, a);
  const auto& pb = projection(y, b);
  if (pa.empty() || pb.empty()) return -2;
  CurveGraphIn& g = graph(y);
  std::vector<int> vb;
  for (auto& c : pb) vb.push_back(g.add(c));
  std::vector<int> va;
  for (auto& c : pa) va.push_back(g.add(c));
  // BFS from a's projection, reused until the graph grows
  Bfs& cache = bfs_[{y.key, a.weights}];
  if (cache.graphSize != g.size()) {
    cache.dist = g.distancesFrom(va);
    cache.graphSize = g.size();
  }
  int best = -1;
  for (int v : vb)
    if (cache.dist[v] >= 0 && (best < 0 || cache.dist[v] < best)) best = cache.dist[v];
  return best;
}

DistanceEstimate distanceFormulaEstimate(const NormalMulticurve& p, const NormalMulticurve& q, int threshold,
                                         const std::vector<Subsurface>& universe, ProjectionDistances& dist) {
  if (threshold < 1) throw LabError(Err::InvalidDescriptor, "threshold must be at least 1");
  DistanceEstimate est;
  est.p = p.weights;
  est.q = q.weights;
  est.threshold = threshold;
  if (p.weights == q.weights) return est;
  for (auto& y : universe) {
    int d = dist.distance(y, p, q);
    if (d == -2) continue; // one of them misses y
    if (d == -1) throw LabError(Err::UniverseTooSmall, "projections into " + y.key + " are not connected at the bound");
    if (d >= threshold) {
      est.terms.push_back({y.key, y.sig, d});
      est.sum += d;
    }
  }
  return est;
}

std::pair<int, int> behrstockGap(const NormalMulticurve& p, const Subsurface& w, const Subsurface& v,
                                 ProjectionDistances& dist) {
  if (!overlaps(w, v)) throw LabError(Err::NotOverlapping, "subsurfaces are nested or disjoint");
  int a = dist.distance(w, p, v.frontier);
  int b = dist.distance(v, p, w.frontier);
  if (a < 0 || b < 0) throw LabError(Err::UniverseTooSmall, "projection distance not computable at the bound");
  return {a, b};
}

} // namespace curvelab
