#pragma once

#include "curvelab/curve.hpp"
#include "curvelab/cut.hpp"

#include <vector>

namespace curvelab {

// One transverse crossing of a closed path a with a component of b. The
// crossing sits in triangle a[i].t, just before a leaves through a[i];
// J is the visit of b's component (forward orientation) in that triangle.
struct Crossing {
  int comp = 0;
  int i = 0;
  int key = 0;
  int J = 0;
  bool rightToLeft = false; // a passes from the right of b to its left
  int len = 0;              // length of the shared run
  bool reversedRun = false; // a runs against b's orientation
  int jRun = 0;             // run start index in the path a was compared with
  // Position of the same crossing seen from b: the start of the shared run
  // in b's direction. For reversed runs this is the far end of a's run.
  int cStart = 0;
};

// from the crossing's place on a to its place on b, along the shared run
Path bridgeToB(const Path& a, const Crossing& x);

// crossings of a with every component of b, in order along a
std::vector<Crossing> crossingsAlong(const Triangulation& tri, const Path& a, const NormalMulticurve& b);

// a[from .. to) read cyclically; wrap adds a full turn
Path cyclicSegment(const Path& p, int from, int to, bool wrap);

// Piece of cutAlong(boundary) containing a curve disjoint from boundary,
// or -1 when the curve is parallel to a boundary component.
int locateCurve(const NormalMulticurve& x, const NormalMulticurve& boundary, const CutSurface& cut);

} // namespace curvelab
