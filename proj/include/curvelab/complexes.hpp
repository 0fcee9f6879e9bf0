#pragma once

#include "curvelab/curve.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace curvelab {

enum class GraphKind { Curve, Pants, Sep, SepPrime };

const char* kindName(GraphKind k);
GraphKind parseKind(const std::string& s);

// Bounded ball in one of the complexes. Vertex 0 is the basepoint.
struct GraphSnapshot {
  GraphKind kind = GraphKind::Curve;
  SurfaceSig surface;
  int weightBound = 0;
  int radius = 0;
  std::string dataVersion;
  std::vector<NormalMulticurve> vertices;
  std::vector<int> depth;                // BFS depth at construction
  std::vector<std::vector<int>> adj;     // sorted
  std::map<std::vector<int>, int> index; // weights -> vertex

  size_t edgeCount() const;
  std::vector<std::pair<int, int>> edges() const; // u < v
  int find(const NormalMulticurve& c) const;     // -1 if absent
  std::vector<int> distancesFrom(int v) const;   // -1 where unreachable
  std::string basepointFingerprint() const;
  std::string headerJson() const;
  std::string digest() const; // hex of the header hash
};

// membership predicate of the kind
bool snapshotMember(GraphKind kind, const NormalMulticurve& c);
// adjacency predicate of the kind (pants: one elementary move)
bool snapshotAdjacent(GraphKind kind, const NormalMulticurve& a, const NormalMulticurve& b);

using NeighborFn = std::function<std::vector<NormalMulticurve>(const NormalMulticurve&)>;

// Breadth-first ball. Each layer is expanded in parallel; new vertices are
// admitted in fingerprint order so the result does not depend on scheduling.
GraphSnapshot buildSnapshot(GraphKind kind, const NormalMulticurve& base, int bound, int radius, const NeighborFn& nbrs);

GraphSnapshot buildCurveSnapshot(const NormalMulticurve& base, int bound, int radius);
GraphSnapshot buildPantsSnapshot(const NormalMulticurve& base, int bound, int radius);
// universe: separating multicurves with max weight <= bound
GraphSnapshot buildSepSnapshot(const NormalMulticurve& base, int bound, int radius, bool prime);

int graphDistance(const GraphSnapshot& s, const NormalMulticurve& u, const NormalMulticurve& v);

std::string snapshotJson(const GraphSnapshot& s);
GraphSnapshot snapshotFromJson(const std::string& text);
// writes <dir>/<kind>-<digest>.json and returns the path
std::string saveSnapshot(const GraphSnapshot& s, const std::string& dir);
GraphSnapshot loadSnapshot(const std::string& path);

std::string hex64(unsigned long long v);
unsigned long long fnv1a(const std::string& s);

} // namespace curvelab
