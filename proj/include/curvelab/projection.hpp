#pragma once

#include "curvelab/crossings.hpp"
#include "curvelab/cut.hpp"

#include <vector>

namespace curvelab {

// The selected piece of a connected descriptor. An empty boundary stands for
// the whole surface and yields -1.
int connectedPiece(const SubsurfaceDescriptor& y, const CutSurface& cut);
SurfaceSig subsurfaceSig(const SubsurfaceDescriptor& y);

// descriptor for one piece of the complement of a multicurve
SubsurfaceDescriptor pieceDescriptor(const NormalMulticurve& boundary, int piece);
// all pieces of complexity >= 1
std::vector<SubsurfaceDescriptor> essentialComplement(const NormalMulticurve& c);

// single curve x lies in y (disjoint from the boundary, not parallel to it)
bool curveInside(const NormalMulticurve& x, const SubsurfaceDescriptor& y);

// Arc-surgery projection of every component of alpha into y, deduplicated
// and sorted by fingerprint. Empty when alpha misses y.
std::vector<NormalMulticurve> subsurfaceProjection(const NormalMulticurve& alpha, const SubsurfaceDescriptor& y);

// same, but keeping every candidate produced by the surgery before dedup;
// used by tests that check each arc contributes
struct ArcReport {
  int arcs = 0;         // arcs of alpha inside y
  int sideMismatch = 0; // arcs whose two ends disagree on the piece
  int productive = 0;   // arcs that produced at least one curve
};
std::vector<NormalMulticurve> subsurfaceProjection(const NormalMulticurve& alpha, const SubsurfaceDescriptor& y,
                                                   ArcReport& report);

// adjacency in the curve graph of a surface of the given signature
bool curveAdjacentIn(SurfaceSig sig, const NormalMulticurve& a, const NormalMulticurve& b);
bool curveAdjacent(const NormalMulticurve& a, const NormalMulticurve& b);

} // namespace curvelab
