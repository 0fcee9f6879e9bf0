#include "curvelab/projection.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace curvelab {

int connectedPiece(const SubsurfaceDescriptor& y, const CutSurface& cut) {
  if (y.boundary.empty()) return -1;
  if (y.selected.size() != 1) {
    if (y.selected.empty()) throw LabError(Err::InvalidDescriptor, "no component selected");
    throw LabError(Err::DisconnectedSubsurface, std::to_string(y.selected.size()) + " components selected");
  }
  int p = y.selected[0];
  if (p < 0 || p >= static_cast<int>(cut.pieces.size()))
    throw LabError(Err::InvalidDescriptor, "selected component out of range");
  if (!cut.pieces[p].essential())
    throw LabError(Err::InvalidDescriptor, "selected component " + cut.pieces[p].sig.str() + " has complexity 0");
  return p;
}

SurfaceSig subsurfaceSig(const SubsurfaceDescriptor& y) {
  if (y.boundary.empty()) return y.ambient;
  CutSurface cut = cutAlong(y.boundary);
  return cut.pieces[connectedPiece(y, cut)].sig;
}

SubsurfaceDescriptor pieceDescriptor(const NormalMulticurve& boundary, int piece) {
  SubsurfaceDescriptor d;
  d.ambient = boundary.tri->sig;
  d.boundary = boundary;
  d.selected = {piece};
  return d;
}

std::vector<SubsurfaceDescriptor> essentialComplement(const NormalMulticurve& c) {
  std::vector<SubsurfaceDescriptor> out;
  for (int p : cutAlong(c).essentialPieces) out.push_back(pieceDescriptor(c, p));
  return out;
}

namespace {

void requireOpen(const Triangulation& tri) {
  if (tri.closed)
    throw LabError(Err::UnsupportedSurface, "subsurface projection runs on punctured surfaces; lift closed curves first");
}

bool insidePiece(const NormalMulticurve& x, const NormalMulticurve& boundary, const CutSurface& cut, int piece) {
  if (rawIntersection(x, boundary) != 0) return false;
  return locateCurve(x, boundary, cut) == piece;
}

std::optional<NormalMulticurve> simpleCurve(const Triangulation& tri, const Path& raw) {
  Path p = reducePath(tri, raw);
  if (p.empty() || selfIntersection(tri, p) != 0) return std::nullopt;
  TraceReport rep = traceWeights(tri, pathWeights(tri, p));
  if (rep.essential.size() != 1) return std::nullopt;
  return canonicalize(rep.essential[0].weights, tri);
}

Path concat(std::initializer_list<const Path*> parts) {
  Path out;
  for (const Path* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

} // namespace

bool curveInside(const NormalMulticurve& x, const SubsurfaceDescriptor& y) {
  if (y.boundary.empty()) return true;
  CutSurface cut = cutAlong(y.boundary);
  return insidePiece(x, y.boundary, cut, connectedPiece(y, cut));
}

std::vector<NormalMulticurve> subsurfaceProjection(const NormalMulticurve& alpha, const SubsurfaceDescriptor& y,
                                                   ArcReport& report) {
  report = ArcReport{};
  if (alpha.tri->sig != y.ambient) throw LabError(Err::SurfaceMismatch, "curve and subsurface on different surfaces");
  if (y.boundary.empty()) {
    std::vector<NormalMulticurve> out;
    for (int k = 0; k < alpha.size(); ++k) out.push_back(alpha.size() == 1 ? alpha : alpha.component(k));
    return out;
  }
  const Triangulation& tri = *alpha.tri;
  requireOpen(tri);
  const NormalMulticurve& bd = y.boundary;
  CutSurface cut = cutAlong(bd);
  const int Y = connectedPiece(y, cut);

  std::map<std::vector<int>, NormalMulticurve> found;
  auto keep = [&](const NormalMulticurve& c) {
    if (!insidePiece(c, bd, cut, Y)) return false;
    found.emplace(c.weights, c);
    return true;
  };

  for (int ci = 0; ci < alpha.size(); ++ci) {
    const Path& a = alpha.comps[ci].path;
    auto xs = crossingsAlong(tri, a, bd);
    if (xs.empty()) {
      NormalMulticurve comp = alpha.size() == 1 ? alpha : alpha.component(ci);
      if (locateCurve(comp, bd, cut) == Y) found.emplace(comp.weights, comp);
      continue;
    }
    const int nx = static_cast<int>(xs.size());
    for (int q = 0; q < nx; ++q) {
      const Crossing& x = xs[q];
      const Crossing& z = xs[(q + 1) % nx];
      int sideAfter = x.rightToLeft ? 1 : 0;
      int sideBefore = z.rightToLeft ? 0 : 1;
      int pieceAfter = cut.sidePiece[x.comp][sideAfter];
      int pieceBefore = cut.sidePiece[z.comp][sideBefore];
      if (pieceAfter != pieceBefore) {
        ++report.sideMismatch;
        continue;
      }
      if (pieceAfter != Y) continue;
      ++report.arcs;
      bool any = false;
      Path arc = cyclicSegment(a, x.i, z.i, q + 1 == nx);
      // move from a's copy of each crossing to the boundary's copy
      Path bz = bridgeToB(a, z), bx = reversed(tri, bridgeToB(a, x));
      Path head = concat({&arc, &bz});
      if (x.comp == z.comp && sideAfter == sideBefore) {
        const Path& cf = bd.comps[x.comp].path;
        const int m = static_cast<int>(cf.size());
        const int jx = x.cStart, jz = z.cStart;
        std::vector<Path> closings;
        if (jx == jz) {
          closings.push_back({});
          closings.push_back(cyclicSegment(cf, jz, jz, true));
          closings.push_back(reversed(tri, cyclicSegment(cf, jz, jz, true)));
        } else {
          closings.push_back(cyclicSegment(cf, jz, jx + (jx < jz ? m : 0), false));
          closings.push_back(reversed(tri, cyclicSegment(cf, jx, jz + (jz < jx ? m : 0), false)));
        }
        for (auto& cl : closings)
          if (auto c = simpleCurve(tri, concat({&head, &cl, &bx}))) any = keep(*c) || any;
      } else {
        Path l1 = rotated(bd.comps[x.comp].path, x.cStart), l2 = rotated(bd.comps[z.comp].path, z.cStart);
        Path l2r = reversed(tri, l2);
        Path back = reversed(tri, head);
        Path bxr = reversed(tri, bx);
        for (int sgn = 0; sgn < 2; ++sgn) {
          const Path& second = sgn == 0 ? l2 : l2r;
          if (auto c = simpleCurve(tri, concat({&head, &second, &back, &bxr, &l1, &bx}))) any = keep(*c) || any;
        }
      }
      if (any) ++report.productive;
    }
  }
  std::vector<std::pair<std::vector<int>, NormalMulticurve>> sorted;
  for (auto& [w, c] : found) sorted.emplace_back(fingerprint(c), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<NormalMulticurve> out;
  for (auto& s : sorted) out.push_back(s.second);
  return out;
}

std::vector<NormalMulticurve> subsurfaceProjection(const NormalMulticurve& alpha, const SubsurfaceDescriptor& y) {
  ArcReport rep;
  return subsurfaceProjection(alpha, y, rep);
}

bool curveAdjacentIn(SurfaceSig sig, const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.tri != b.tri) throw LabError(Err::SurfaceMismatch, "curves on different surfaces");
  if (sameClass(a, b)) return false;
  int i = intersectionNumber(a, b);
  if (sig == SurfaceSig{1, 1}) return i == 1;
  if (sig == SurfaceSig{0, 4}) return i == 2;
  return i == 0;
}

bool curveAdjacent(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (complexity(a.tri->sig) < 1) throw LabError(Err::UnsupportedSurface, "curve graph needs complexity >= 1");
  return curveAdjacentIn(a.tri->sig, a, b);
}

} // namespace curvelab
