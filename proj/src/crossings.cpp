#include "curvelab/crossings.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <tuple>

namespace curvelab {

std::vector<Crossing> crossingsAlong(const Triangulation& tri, const Path& a, const NormalMulticurve& b) {
  std::vector<Crossing> out;
  for (int k = 0; k < b.size(); ++k) {
    const Component& cc = b.comps[k];
    const Path& cf = cc.path;
    const Path cr = reversed(tri, cf);
    const int m = static_cast<int>(cf.size());
    std::vector<int> posr(m);
    for (int q = 0; q < m; ++q) {
      Side o = across(tri, cf[m - 1 - q]);
      posr[q] = b.weights[tri.edge[o.t][o.s]] - 1 - cc.pos[m - 1 - q];
    }
    for (int dir = 0; dir < 2; ++dir) {
      const Path& cp = dir == 0 ? cf : cr;
      const auto& pos = dir == 0 ? cc.pos : posr;
      forEachRun(tri, a, cp, [&](const Run& r) {
        if (!r.crosses()) return;
        Crossing x;
        x.comp = k;
        x.i = r.i;
        x.len = r.len;
        x.jRun = r.j;
        x.reversedRun = dir == 1;
        x.rightToLeft = dir == 0 ? (!r.aLeftStart && r.aLeftEnd) : (r.aLeftStart && !r.aLeftEnd);
        x.J = dir == 0 ? r.j : (m - r.j) % m;
        x.cStart = dir == 0 ? x.J : ((x.J - r.len) % m + m) % m;
        int s = a[r.i].s;
        int z = across(tri, cp[(r.j + m - 1) % m]).s;
        x.key = z == (s + 2) % 3 ? -pos[r.j] : pos[r.j];
        out.push_back(x);
      });
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) {
    return std::tie(p.i, p.key, p.comp) < std::tie(q.i, q.key, q.comp);
  });
  return out;
}

Path bridgeToB(const Path& a, const Crossing& x) {
  if (!x.reversedRun) return {};
  return cyclicSegment(a, x.i, x.i + x.len, false);
}

Path cyclicSegment(const Path& p, int from, int to, bool wrap) {
  const int n = static_cast<int>(p.size());
  int len = to - from + (wrap ? n : 0);
  Path out;
  out.reserve(std::max(len, 0));
  for (int k = 0; k < len; ++k) out.push_back(p[((from + k) % n + n) % n]);
  return out;
}

int locateCurve(const NormalMulticurve& x, const NormalMulticurve& boundary, const CutSurface& cut) {
  const Triangulation& tri = *boundary.tri;
  if (x.size() != 1) throw LabError(Err::InvalidDescriptor, "locateCurve expects a single curve");
  std::vector<int> w = boundary.weights;
  for (size_t e = 0; e < w.size(); ++e) w[e] += x.weights[e];
  TraceReport rep = traceWeights(tri, w);
  int mine = -1, same = 0;
  for (size_t k = 0; k < rep.essential.size(); ++k)
    if (rep.essential[k].weights == x.weights) {
      if (mine < 0) mine = static_cast<int>(k);
      ++same;
    }
  if (mine < 0) throw LabError(Err::InvalidDescriptor, "curve is not disjoint from the boundary");
  if (same > 1) return -1;
  for (int k = 0; k < boundary.size(); ++k)
    if (boundary.comps[k].weights == x.weights) return -1;
  const Component& me = rep.essential[mine];
  Side at = me.path[0];
  int p = me.pos[0];
  Side back = across(tri, at);
  int width = w[tri.edge[at.t][at.s]];
  int below = 0;
  for (size_t k = 0; k < rep.essential.size(); ++k) {
    if (static_cast<int>(k) == mine) continue;
    const Component& o = rep.essential[k];
    for (size_t q = 0; q < o.path.size(); ++q) {
      if (o.path[q] == at && o.pos[q] < p) ++below;
      else if (o.path[q] == back && width - 1 - o.pos[q] < p) ++below;
    }
  }
  return cut.gapPiece[at.t][at.s][below];
}

} // namespace curvelab
