#pragma once

#include "curvelab/cut.hpp"

#include <vector>

namespace curvelab {

// S minus a regular neighbourhood of C u D, with C and D in minimal position.
struct UnionComplement {
  NormalMulticurve boundary;      // essential boundary curves of the neighbourhood plus isolated components
  CutSurface cut;                 // cutAlong(boundary)
  std::vector<bool> core;         // piece contains a cluster of crossing components
  int crossings = 0;
  int traceFailures = 0;          // boundary cycles that did not come out simple (should stay 0)

  bool hasEssentialRegion() const;
};

UnionComplement unionComplement(const NormalMulticurve& c, const NormalMulticurve& d);

// Adjacency in the complex of separating multicurves and in its disjoint variant.
bool sepAdjacent(const NormalMulticurve& c, const NormalMulticurve& d);
bool sepPrimeAdjacent(const NormalMulticurve& c, const NormalMulticurve& d);

} // namespace curvelab
