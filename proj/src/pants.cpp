#include "curvelab/pants.hpp"

#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/mcg.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace curvelab {

bool isPantsDecomposition(const NormalMulticurve& p) {
  if (p.empty() || p.size() != complexity(p.tri->sig)) return false;
  for (auto& pc : cutAlong(p).pieces)
    if (pc.sig != SurfaceSig{0, 3}) return false;
  return true;
}

NormalMulticurve subMulticurve(const NormalMulticurve& m, const std::vector<int>& keep) {
  NormalMulticurve out;
  out.tri = m.tri;
  out.weights.assign(m.tri->nedges(), 0);
  if (keep.empty()) return out;
  std::vector<Component> comps;
  for (int k : keep) comps.push_back(m.comps[k]);
  return fromComponents(*m.tri, comps);
}

NormalMulticurve disjointUnion(const std::vector<NormalMulticurve>& parts, const Triangulation& tri) {
  std::vector<int> w(tri.nedges(), 0);
  for (auto& p : parts)
    for (int e = 0; e < tri.nedges(); ++e) w[e] += p.weights[e];
  return canonicalize(w, tri);
}

namespace {

std::optional<NormalMulticurve> simpleCurve(const Triangulation& tri, const Path& raw) {
  Path p = reducePath(tri, raw);
  if (p.empty() || selfIntersection(tri, p) != 0) return std::nullopt;
  TraceReport rep = traceWeights(tri, pathWeights(tri, p));
  if (rep.essential.size() != 1) return std::nullopt;
  return canonicalize(rep.essential[0].weights, tri);
}

struct MoveSite {
  NormalMulticurve gamma;
  NormalMulticurve rest; // may be empty
  int target = 0;        // minimal intersection with gamma inside the piece
  SubsurfaceDescriptor piece;
};

MoveSite moveSite(const NormalMulticurve& p, int k) {
  MoveSite s;
  s.gamma = p.component(k);
  std::vector<int> others;
  for (int j = 0; j < p.size(); ++j)
    if (j != k) others.push_back(j);
  s.rest = subMulticurve(p, others);
  SurfaceSig sig = p.tri->sig;
  s.piece.ambient = sig;
  if (!s.rest.empty()) {
    CutSurface cut = cutAlong(s.rest);
    int at = locateCurve(s.gamma, s.rest, cut);
    s.piece = pieceDescriptor(s.rest, at);
    sig = cut.pieces[at].sig;
  }
  if (sig == SurfaceSig{1, 1}) s.target = 1;
  else if (sig == SurfaceSig{0, 4}) s.target = 2;
  else throw LabError(Err::InvalidDescriptor, "complementary piece " + sig.str() + " is not of complexity one");
  return s;
}

bool acceptable(const MoveSite& s, const NormalMulticurve& c) {
  if (c.weights == s.gamma.weights) return false;
  if (!s.rest.empty() && rawIntersection(c, s.rest) != 0) return false;
  for (auto& comp : s.rest.comps)
    if (comp.weights == c.weights) return false;
  return intersectionNumber(c, s.gamma) == s.target;
}

// closing runs of `target` consecutive arcs of u with a piece of gamma
std::vector<NormalMulticurve> surgerySeeds(const MoveSite& s, const NormalMulticurve& u) {
  const Triangulation& tri = *u.tri;
  std::vector<NormalMulticurve> out;
  if (acceptable(s, u)) out.push_back(u);
  const Path& a = u.comps[0].path;
  const Path& g = s.gamma.comps[0].path;
  const int m = static_cast<int>(g.size());
  auto xs = crossingsAlong(tri, a, s.gamma);
  const int nx = static_cast<int>(xs.size());
  if (nx <= s.target) return out;
  for (int q = 0; q < nx; ++q) {
    const Crossing& x = xs[q];
    const Crossing& z = xs[(q + s.target) % nx];
    Path arc = cyclicSegment(a, x.i, z.i, q + s.target >= nx);
    Path bz = bridgeToB(a, z), bx = reversed(tri, bridgeToB(a, x));
    const int jx = x.cStart, jz = z.cStart;
    std::vector<Path> closings;
    if (jx == jz) {
      closings.push_back({});
      closings.push_back(cyclicSegment(g, jz, jz, true));
      closings.push_back(reversed(tri, cyclicSegment(g, jz, jz, true)));
    } else {
      closings.push_back(cyclicSegment(g, jz, jx + (jx < jz ? m : 0), false));
      closings.push_back(reversed(tri, cyclicSegment(g, jx, jz + (jz < jx ? m : 0), false)));
    }
    for (auto& cl : closings) {
      Path path = arc;
      path.insert(path.end(), bz.begin(), bz.end());
      path.insert(path.end(), cl.begin(), cl.end());
      path.insert(path.end(), bx.begin(), bx.end());
      if (auto c = simpleCurve(tri, path))
        if (acceptable(s, *c)) out.push_back(*c);
    }
  }
  return out;
}

std::vector<NormalMulticurve> probeCurves(const Triangulation& tri) {
  std::vector<NormalMulticurve> out = markingCurves(tri);
  for (auto& c : enumerateCurves(tri.sig, 2)) out.push_back(c);
  return out;
}

} // namespace

std::vector<NormalMulticurve> pantsNeighbors(const NormalMulticurve& p, int bound) {
  const Triangulation& tri = *p.tri;
  if (tri.closed) throw LabError(Err::UnsupportedSurface, "pants moves run on punctured surfaces");
  std::map<std::vector<int>, NormalMulticurve> found;
  for (int k = 0; k < p.size(); ++k) {
    MoveSite s = moveSite(p, k);
    // Neighbours of gamma fall into one class modulo the twist on a one-holed
    // torus and two on a four-holed sphere; probes stop once all are seen.
    const int classes = s.target == 1 ? 1 : 2;
    int seen = 0;
    std::set<std::vector<int>> replacements, visited;
    auto orbit = [&](const NormalMulticurve& st) {
      for (int dir : {1, -1}) {
        NormalMulticurve cur = st;
        int prev = maxWeight(cur);
        int rising = 0;
        for (int step = 0; step < 200; ++step) {
          int mw = maxWeight(cur);
          visited.insert(cur.weights);
          if (mw <= bound) replacements.insert(cur.weights);
          rising = mw > bound && mw > prev ? rising + 1 : 0;
          if (rising >= 2) break;
          prev = mw;
          cur = twistCurve(s.gamma, cur, dir);
        }
      }
    };
    for (auto& probe : probeCurves(tri)) {
      if (seen == classes) break;
      std::vector<NormalMulticurve> proj =
          s.rest.empty() ? std::vector<NormalMulticurve>{probe} : subsurfaceProjection(probe, s.piece);
      for (auto& u : proj) {
        if (seen == classes) break;
        if (intersectionNumber(u, s.gamma) == 0) continue;
        for (auto& c : surgerySeeds(s, u)) {
          if (visited.count(c.weights)) continue;
          orbit(c);
          if (++seen == classes) break;
          // the other class meets both gamma and c twice: surger gamma along c
          MoveSite swapped = s;
          swapped.gamma = c;
          for (auto& v : surgerySeeds(swapped, s.gamma)) {
            if (!acceptable(s, v) || visited.count(v.weights)) continue;
            orbit(v);
            ++seen;
            break;
          }
          if (seen == classes) break;
        }
      }
    }
    if (seen == 0) throw LabError(Err::NoIntersection, "no curve of the probe set meets the move piece");
    for (auto& w : replacements) {
      std::vector<int> sum = s.rest.empty() ? std::vector<int>(tri.nedges(), 0) : s.rest.weights;
      for (int e = 0; e < tri.nedges(); ++e) sum[e] += w[e];
      NormalMulticurve q = canonicalize(sum, tri);
      found.emplace(q.weights, q);
    }
  }
  std::vector<NormalMulticurve> out;
  for (auto& [w, q] : found) out.push_back(q);
  return out;
}

std::vector<NormalMulticurve> pantsNeighborsByEnumeration(const NormalMulticurve& p, int bound) {
  const Triangulation& tri = *p.tri;
  std::map<std::vector<int>, NormalMulticurve> found;
  const auto& pool = enumerateCurves(tri.sig, bound);
  for (int k = 0; k < p.size(); ++k) {
    MoveSite s = moveSite(p, k);
    for (auto& c : pool) {
      if (!acceptable(s, c)) continue;
      std::vector<int> sum = s.rest.empty() ? std::vector<int>(tri.nedges(), 0) : s.rest.weights;
      for (int e = 0; e < tri.nedges(); ++e) sum[e] += c.weights[e];
      NormalMulticurve q = canonicalize(sum, tri);
      found.emplace(q.weights, q);
    }
  }
  std::vector<NormalMulticurve> out;
  for (auto& [w, q] : found) out.push_back(q);
  return out;
}

namespace {

struct Filler {
  std::vector<NormalMulticurve> xs; // tried in this order
  std::mt19937_64 rng;
  bool seeded;
  std::vector<NormalMulticurve> out;

  Filler(std::vector<NormalMulticurve> order, std::uint64_t seed)
      : xs(std::move(order)), rng(seed), seeded(seed != 0) {}

  void fill(const SubsurfaceDescriptor& y) {
    std::vector<NormalMulticurve> cands;
    for (auto& c : xs) {
      cands = subsurfaceProjection(c, y);
      if (!cands.empty()) break;
    }
    if (cands.empty()) throw LabError(Err::NoIntersection, "no curve of the input meets the subsurface");
    size_t pick = 0;
    if (seeded) pick = std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng);
    const NormalMulticurve beta = cands[pick];
    out.push_back(beta);
    const Triangulation& tri = *beta.tri;
    NormalMulticurve bd = y.boundary.empty() ? beta : disjointUnion({y.boundary, beta}, tri);
    int idx = -1;
    for (int k = 0; k < bd.size(); ++k)
      if (bd.comps[k].weights == beta.weights) idx = k;
    CutSurface cut = cutAlong(bd);
    std::set<int> sides{cut.sidePiece[idx][0], cut.sidePiece[idx][1]};
    for (int pc : sides)
      if (cut.pieces[pc].essential()) fill(pieceDescriptor(bd, pc));
  }
};

} // namespace

std::vector<NormalMulticurve> byFingerprint(const NormalMulticurve& x) {
  std::vector<std::pair<std::vector<int>, NormalMulticurve>> tmp;
  for (int k = 0; k < x.size(); ++k) {
    NormalMulticurve c = x.size() == 1 ? x : x.component(k);
    tmp.emplace_back(fingerprint(c), c);
  }
  std::sort(tmp.begin(), tmp.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<NormalMulticurve> out;
  for (auto& t : tmp) out.push_back(t.second);
  return out;
}

std::vector<NormalMulticurve> projectPantsCurves(const std::vector<NormalMulticurve>& order,
                                                 const SubsurfaceDescriptor& y, std::uint64_t tieSeed) {
  Filler f(order, tieSeed);
  f.fill(y);
  return f.out;
}

std::vector<NormalMulticurve> projectPantsCurves(const NormalMulticurve& x, const SubsurfaceDescriptor& y,
                                                 std::uint64_t tieSeed) {
  return projectPantsCurves(byFingerprint(x), y, tieSeed);
}

NormalMulticurve projectPants(const NormalMulticurve& x, const SubsurfaceDescriptor& y, std::uint64_t tieSeed) {
  return disjointUnion(projectPantsCurves(x, y, tieSeed), *x.tri);
}

NormalMulticurve extendMulticurve(const NormalMulticurve& c, const std::vector<NormalMulticurve>& order,
                                  std::uint64_t tieSeed) {
  const Triangulation& tri = *order.at(0).tri;
  SubsurfaceDescriptor whole;
  whole.ambient = tri.sig;
  whole.boundary.tri = &tri;
  whole.boundary.weights.assign(tri.nedges(), 0);
  if (c.empty()) return disjointUnion(projectPantsCurves(order, whole, tieSeed), tri);
  std::vector<NormalMulticurve> parts{c};
  for (auto& y : essentialComplement(c))
    for (auto& b : projectPantsCurves(order, y, tieSeed)) parts.push_back(b);
  return disjointUnion(parts, tri);
}

NormalMulticurve extendMulticurve(const NormalMulticurve& c, const NormalMulticurve& x, std::uint64_t tieSeed) {
  return extendMulticurve(c, byFingerprint(x), tieSeed);
}

bool regionContains(const NormalMulticurve& c, const NormalMulticurve& p) {
  for (auto& a : c.comps) {
    bool hit = false;
    for (auto& b : p.comps) hit = hit || a.weights == b.weights;
    if (!hit) return false;
  }
  return true;
}

bool xRegionContains(const NormalMulticurve& alpha, const NormalMulticurve& q) {
  for (int k = 0; k < q.size(); ++k) {
    NormalMulticurve c = q.component(k);
    if (!isSeparatingMulticurve(c)) continue;
    if (sameClass(forgetBoundary(c), alpha)) return true;
  }
  return false;
}

} // namespace curvelab
