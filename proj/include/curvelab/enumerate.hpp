#pragma once

#include "curvelab/curve.hpp"

#include <vector>

namespace curvelab {

enum class CurveFilter { All, Separating, Nonseparating };

constexpr long kDefaultCandidateCap = 50'000'000;

// admissible weight vectors with every entry <= bound, in lexicographic order
void forEachAdmissible(const Triangulation& tri, int bound, long cap,
                       const std::function<void(const std::vector<int>&)>& fn);

// Essential simple closed curves with some representative of max weight <= bound.
// Sorted by (total weight, weights); closed-surface classes are deduplicated.
const std::vector<NormalMulticurve>& enumerateCurves(SurfaceSig sig, int bound, CurveFilter filter = CurveFilter::All,
                                                     long cap = kDefaultCandidateCap);

// Multicurves (any number of components) on a punctured surface with a
// representative of max weight <= bound; optionally only separating ones.
const std::vector<NormalMulticurve>& enumerateMulticurves(SurfaceSig sig, int bound, bool separatingOnly,
                                                          long cap = kDefaultCandidateCap);

int maxWeight(const NormalMulticurve& c);

} // namespace curvelab
