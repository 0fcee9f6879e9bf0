#pragma once

#include "curvelab/curve.hpp"

#include <vector>

namespace curvelab {

// The closed genus-two surface is handled through the once-punctured cells:
// a class downstairs is stored as one of its lifts, and class-level questions
// are answered by moving the lift across the marked point.

const Triangulation& closedCells();    // S2,0
const Triangulation& puncturedCells(); // S2,1, same cells

// reinterpret weights on the other triangulation of the pair
NormalMulticurve asLift(const NormalMulticurve& closedCurve);
NormalMulticurve forgetBoundary(const NormalMulticurve& c);

// All lifts obtained by sliding one arc of one component across the
// puncture. Components keep their mutual disjointness.
std::vector<NormalMulticurve> puncturePushes(const NormalMulticurve& lift);

// lift of a single curve with the least intersection against b (both lifts)
NormalMulticurve minimalLift(const NormalMulticurve& aLift, const NormalMulticurve& bLift);

NormalMulticurve s20MergeParallel(const NormalMulticurve& m);
int s20Intersection(const NormalMulticurve& a, const NormalMulticurve& b);
bool s20SameClass(const NormalMulticurve& a, const NormalMulticurve& b);

// One bigon surgery of a along b: the arc of a between two consecutive
// crossings is replaced by the matching segment of b. The surgered
// representative meets b in i - 2 points; after tightening the class
// intersection can fall further. The candidate with the smallest class drop
// is returned, ties broken by (fingerprint, weights). With fiberGuard set the
// image downstairs must stay in the class of a.
NormalMulticurve bigonSurgeryStep(const NormalMulticurve& a, const NormalMulticurve& b, bool fiberGuard);

// deterministic lift: least total intersection with the lifted marking
NormalMulticurve liftCurve(const NormalMulticurve& c);

} // namespace curvelab
