#pragma once

#include "curvelab/projection.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace curvelab {

// A connected essential subsurface together with a key that ignores cut
// curves not touching it. An empty boundary is the whole surface.
struct Subsurface {
  SubsurfaceDescriptor desc;
  SurfaceSig sig;
  NormalMulticurve frontier;
  std::string key;
};

Subsurface makeSubsurface(const SubsurfaceDescriptor& d);
Subsurface wholeSurface(const Triangulation& tri);

// the whole surface plus every essential piece of every multicurve with max
// weight <= bound, deduplicated by key
std::vector<Subsurface> subsurfaceUniverse(SurfaceSig sig, int bound);

// neither nested nor disjoint
bool overlaps(const Subsurface& a, const Subsurface& b);

// Curve graph of Y: enumerated curves of the ambient surface that lie in Y
// plus any curve added later. Adjacency follows the signature of Y.
class CurveGraphIn {
public:
  CurveGraphIn(const Subsurface& y, int bound);
  int add(const NormalMulticurve& c);
  int size() const { return static_cast<int>(verts_.size()); }
  std::vector<int> distancesFrom(const std::vector<int>& sources) const;
  // -1 when the sets are not connected inside the graph
  int setDistance(const std::vector<NormalMulticurve>& a, const std::vector<NormalMulticurve>& b);
  int diameter(const std::vector<NormalMulticurve>& a);
  int vertex(const NormalMulticurve& c) const; // -1 if absent

private:
  SurfaceSig sig_;
  std::vector<NormalMulticurve> verts_;
  std::vector<std::vector<int>> adj_;
  std::map<std::vector<int>, int> index_;
};

// caches one curve graph per subsurface key
class ProjectionDistances {
public:
  explicit ProjectionDistances(int bound) : bound_(bound) {}
  CurveGraphIn& graph(const Subsurface& y);
  // distance between projections; -1 when unreachable, -2 when a projection is empty
  int distance(const Subsurface& y, const NormalMulticurve& a, const NormalMulticurve& b);
  int bound() const { return bound_; }
  const std::vector<NormalMulticurve>& projection(const Subsurface& y, const NormalMulticurve& a);

private:
  struct Bfs {
    int graphSize = -1;
    std::vector<int> dist;
  };
  int bound_;
  std::map<std::string, std::unique_ptr<CurveGraphIn>> graphs_;
  std::map<std::pair<std::string, std::vector<int>>, std::vector<NormalMulticurve>> projections_;
  std::map<std::pair<std::string, std::vector<int>>, Bfs> bfs_;
};

struct DistanceTerm {
  std::string subsurface; // key
  SurfaceSig sig;
  int distance = 0;
};

struct DistanceEstimate {
  std::vector<int> p, q; // weights of the two decompositions
  int threshold = 0;
  std::vector<DistanceTerm> terms;
  int sum = 0;
};

DistanceEstimate distanceFormulaEstimate(const NormalMulticurve& p, const NormalMulticurve& q, int threshold,
                                         const std::vector<Subsurface>& universe, ProjectionDistances& dist);

// (d_W(P, boundary of V), d_V(P, boundary of W))
std::pair<int, int> behrstockGap(const NormalMulticurve& p, const Subsurface& w, const Subsurface& v,
                                 ProjectionDistances& dist);

} // namespace curvelab
