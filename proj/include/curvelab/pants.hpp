#pragma once

#include "curvelab/projection.hpp"

#include <cstdint>
#include <vector>

namespace curvelab {

bool isPantsDecomposition(const NormalMulticurve& p);

// multicurve made of the listed components of m
NormalMulticurve subMulticurve(const NormalMulticurve& m, const std::vector<int>& keep);
// union of disjoint multicurves given by components
NormalMulticurve disjointUnion(const std::vector<NormalMulticurve>& parts, const Triangulation& tri);

// Elementary moves whose replacement curve has max weight <= bound. The
// replacements come from surgery seeds and their orbits under the twist about
// the replaced curve.
std::vector<NormalMulticurve> pantsNeighbors(const NormalMulticurve& p, int bound);
// same set, by filtering the enumerated curves at the bound; used as a cross-check
std::vector<NormalMulticurve> pantsNeighborsByEnumeration(const NormalMulticurve& p, int bound);

// Inductive projection of a multicurve into y. tieSeed 0 takes the
// fingerprint-least candidate at each step; other seeds pick uniformly.
std::vector<NormalMulticurve> projectPantsCurves(const NormalMulticurve& x, const SubsurfaceDescriptor& y,
                                                 std::uint64_t tieSeed = 0);
NormalMulticurve projectPants(const NormalMulticurve& x, const SubsurfaceDescriptor& y, std::uint64_t tieSeed = 0);
// curves tried in the given order instead of fingerprint order
std::vector<NormalMulticurve> projectPantsCurves(const std::vector<NormalMulticurve>& order,
                                                 const SubsurfaceDescriptor& y, std::uint64_t tieSeed = 0);
std::vector<NormalMulticurve> byFingerprint(const NormalMulticurve& x);

// c together with the projection of x to every essential piece of S \ c
NormalMulticurve extendMulticurve(const NormalMulticurve& c, const NormalMulticurve& x, std::uint64_t tieSeed = 0);
NormalMulticurve extendMulticurve(const NormalMulticurve& c, const std::vector<NormalMulticurve>& order,
                                  std::uint64_t tieSeed = 0);

bool regionContains(const NormalMulticurve& c, const NormalMulticurve& p);
// alpha on the closed surface, q a pants decomposition upstairs
bool xRegionContains(const NormalMulticurve& alpha, const NormalMulticurve& q);

} // namespace curvelab
