#pragma once

#include "curvelab/surface.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace curvelab {

// A closed path in the dual graph: each entry means "leave triangle t
// through side s". Simple normal curves are exactly the cyclically reduced
// closed paths that come out of tracing a weight vector.
using Path = std::vector<Side>;

struct Component {
  Path path;
  std::vector<int> pos; // position of each crossing on its side, counted from corner s
  std::vector<int> weights;
};

struct NormalMulticurve {
  const Triangulation* tri = nullptr;
  std::vector<int> weights;
  std::vector<Component> comps; // sorted by weight vector

  int size() const { return static_cast<int>(comps.size()); }
  bool empty() const { return comps.empty(); }
  NormalMulticurve component(int i) const;
  // identity of the normal representative (exact class on punctured surfaces)
  bool sameWeights(const NormalMulticurve& o) const { return tri == o.tri && weights == o.weights; }
};

struct TraceReport {
  std::vector<Component> essential;
  int peripheral = 0; // stripped vertex-link components
};

// corner count at corner c of triangle t
int cornerCount(const Triangulation& tri, const std::vector<int>& w, int t, int c);
bool admissible(const Triangulation& tri, const std::vector<int>& w);

TraceReport traceWeights(const Triangulation& tri, const std::vector<int>& w);

// Validates, splits into components, strips peripheral/trivial pieces.
// On closed surfaces also merges components that become parallel.
NormalMulticurve canonicalize(const std::vector<int>& raw, const Triangulation& tri);
NormalMulticurve canonicalize(const std::vector<int>& raw, const Triangulation& tri, TraceReport& report);

// multicurve made of the given components of a common normal picture
NormalMulticurve fromComponents(const Triangulation& tri, std::vector<Component> comps);
NormalMulticurve unionOf(const NormalMulticurve& a, const NormalMulticurve& b); // requires disjoint

// path utilities
Side across(const Triangulation& tri, Side x); // the same crossing travelled backwards
Path reversed(const Triangulation& tri, const Path& p);
Path reducePath(const Triangulation& tri, const Path& p);
std::vector<int> pathWeights(const Triangulation& tri, const Path& p);
bool validClosedPath(const Triangulation& tri, const Path& p);
Path rotated(const Path& p, int start);
// closed path around the vertex at corner c of t, starting and ending in t.
// forward keeps the vertex on its right.
Path vertexLoop(const Triangulation& tri, int t, int c, bool forward);

// Simple curve from an arbitrary closed path; EmptyAfterReduction if the
// path is trivial or peripheral. Throws NotSimpleLoop if not simple.
NormalMulticurve curveFromPath(const Triangulation& tri, const Path& p);

// Linked pairs between two cyclically reduced closed paths (same orientation).
// Callback receives (i in a, j in b, run length, a starts left of b).
struct Run {
  int i = 0, j = 0, len = 0;
  bool aLeftStart = false, aLeftEnd = false;
  bool crosses() const { return aLeftStart != aLeftEnd; }
};
// returns false if a and b are the same cycle (one is a rotation of the other)
bool forEachRun(const Triangulation& tri, const Path& a, const Path& b, const std::function<void(const Run&)>& fn);

// Geometric intersection of the homotopy classes in the punctured surface.
int pathIntersection(const Triangulation& tri, const Path& a, const Path& b);
int selfIntersection(const Triangulation& tri, const Path& a);
// intersections of representatives without the closed-surface correction
int rawIntersection(const NormalMulticurve& a, const NormalMulticurve& b);

// Class-level intersection number (closed surfaces use the lift machinery).
int intersectionNumber(const NormalMulticurve& a, const NormalMulticurve& b);

// Class equality.
bool sameClass(const NormalMulticurve& a, const NormalMulticurve& b);

const std::vector<NormalMulticurve>& markingCurves(const Triangulation& tri);
std::vector<int> fingerprint(const NormalMulticurve& c);

std::string curveLine(const NormalMulticurve& c);
NormalMulticurve parseCurveLine(const std::string& line);

} // namespace curvelab
