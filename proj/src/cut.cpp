#include "curvelab/cut.hpp"

#include "curvelab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace curvelab {

std::vector<SurfaceSig> CutSurface::signature() const {
  std::vector<SurfaceSig> out;
  for (auto& p : pieces) out.push_back(p.sig);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

CutSurface cutAlong(const NormalMulticurve& c) {
  const Triangulation& tri = *c.tri;
  const auto& w = c.weights;
  const int T = tri.ntri();
  // region numbering inside triangle t: [corner c, strip j] for j < n_c, then middle
  std::vector<std::array<int, 3>> n(T);
  std::vector<std::array<int, 3>> base(T);
  std::vector<int> mid(T);
  int R = 0;
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < 3; ++k) n[t][k] = cornerCount(tri, w, t, k);
    for (int k = 0; k < 3; ++k) {
      base[t][k] = R;
      R += n[t][k];
    }
    mid[t] = R++;
  }
  auto regionOfGap = [&](int t, int s, int g) {
    int ws = w[tri.edge[t][s]];
    int ns = n[t][s];
    if (g < ns) return base[t][s] + g;
    if (g == ns) return mid[t];
    return base[t][(s + 1) % 3] + (ws - g);
  };
  Dsu dsu(R);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      Side o = tri.glue[t][s];
      if (std::make_pair(o.t, o.s) < std::make_pair(t, s)) continue;
      int ws = w[tri.edge[t][s]];
      for (int g = 0; g <= ws; ++g) {
        dsu.join(regionOfGap(t, s, g), regionOfGap(o.t, o.s, ws - g));
      }
    }
  std::vector<int> root2piece(R, -1);
  CutSurface cut;
  for (int r = 0; r < R; ++r) {
    int rt = dsu.find(r);
    if (root2piece[rt] < 0) {
      root2piece[rt] = static_cast<int>(cut.pieces.size());
      cut.pieces.emplace_back();
    }
  }
  auto pieceOf = [&](int r) { return root2piece[dsu.find(r)]; };
  std::vector<int> faces(cut.pieces.size(), 0), glued(cut.pieces.size(), 0);
  for (int r = 0; r < R; ++r) ++faces[pieceOf(r)];
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      Side o = tri.glue[t][s];
      if (std::make_pair(o.t, o.s) < std::make_pair(t, s)) continue;
      int ws = w[tri.edge[t][s]];
      for (int g = 0; g <= ws; ++g) ++glued[pieceOf(regionOfGap(t, s, g))];
    }
  std::vector<std::set<int>> punct(cut.pieces.size());
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      int r = n[t][k] > 0 ? base[t][k] : mid[t];
      punct[pieceOf(r)].insert(tri.vertex[t][k]);
    }
  cut.gapPiece.resize(T);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      int ws = w[tri.edge[t][s]];
      cut.gapPiece[t][s].resize(ws + 1);
      for (int g = 0; g <= ws; ++g) cut.gapPiece[t][s][g] = pieceOf(regionOfGap(t, s, g));
    }
  cut.sidePiece.resize(c.comps.size());
  for (size_t k = 0; k < c.comps.size(); ++k) {
    const auto& comp = c.comps[k];
    Side x = comp.path[0];
    int p = comp.pos[0];
    // leaving through side s, larger positions are on the left
    int right = cut.gapPiece[x.t][x.s][p];
    int left = cut.gapPiece[x.t][x.s][p + 1];
    cut.sidePiece[k] = {right, left};
    cut.pieces[right].sides.push_back({static_cast<int>(k), 0});
    cut.pieces[left].sides.push_back({static_cast<int>(k), 1});
  }
  for (size_t i = 0; i < cut.pieces.size(); ++i) {
    auto& pc = cut.pieces[i];
    pc.chi = faces[i] - glued[i];
    pc.punctures.assign(punct[i].begin(), punct[i].end());
    int holes = static_cast<int>(pc.sides.size());
    if (tri.closed) {
      pc.chi += static_cast<int>(pc.punctures.size()); // the marked point is filled in
    } else {
      holes += static_cast<int>(pc.punctures.size());
    }
    int twoG = 2 - pc.chi - holes;
    if (twoG < 0 || twoG % 2) throw LabError(Err::DataFormat, "inconsistent piece topology in cutAlong");
    pc.sig = {twoG / 2, holes};
    if (pc.essential()) cut.essentialPieces.push_back(static_cast<int>(i));
  }
  return cut;
}

bool isSeparatingMulticurve(const NormalMulticurve& c) {
  return cutAlong(c).essentialPieces.size() >= 2;
}

SubsurfaceKind classifySubsurface(const SubsurfaceDescriptor& d) {
  if (d.boundary.empty()) throw LabError(Err::NotProper, "subsurface without boundary is the whole surface");
  if (d.boundary.tri->sig != d.ambient) throw LabError(Err::SurfaceMismatch, "descriptor boundary lives elsewhere");
  CutSurface cut = cutAlong(d.boundary);
  std::set<int> sel(d.selected.begin(), d.selected.end());
  if (sel.empty()) throw LabError(Err::InvalidDescriptor, "no component selected");
  for (int i : sel) {
    if (i < 0 || i >= static_cast<int>(cut.pieces.size()))
      throw LabError(Err::InvalidDescriptor, "selected component out of range");
    if (!cut.pieces[i].essential())
      throw LabError(Err::InvalidDescriptor, "selected component " + cut.pieces[i].sig.str() + " has complexity 0");
  }
  for (size_t i = 0; i < cut.pieces.size(); ++i)
    if (!sel.count(static_cast<int>(i)) && cut.pieces[i].essential()) return SubsurfaceKind::Separating;
  return SubsurfaceKind::Nonseparating;
}

} // namespace curvelab
