#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace curvelab {

struct SurfaceSig {
  int genus = 0;
  int boundary = 0; // boundary components and punctures are treated alike

  auto operator<=>(const SurfaceSig&) const = default;
  std::string str() const;
};

int complexity(SurfaceSig s);
int eulerChar(SurfaceSig s);
// the seven signatures that get a reference triangulation
bool hasReferenceTriangulation(SurfaceSig s);
SurfaceSig parseSig(const std::string& text); // "g,n" or "Sg,n"

struct Side {
  int t = 0;
  int s = 0;
  bool operator==(const Side&) const = default;
};

// Triangle t has sides 0,1,2 in counterclockwise order; side s runs from
// corner s to corner s+1. Gluings reverse orientation: corner s of (t,s)
// meets corner s'+1 of its partner (t',s').
struct Triangulation {
  SurfaceSig sig;
  std::string version;
  bool closed = false; // one-vertex structure of a closed surface
  std::vector<std::array<int, 3>> edge;
  std::vector<std::array<Side, 3>> glue;
  std::vector<std::array<Side, 2>> edgeSides;
  std::vector<std::array<int, 3>> vertex; // vertex class at each corner
  int nverts = 0;
  std::vector<std::vector<int>> marking;

  int ntri() const { return static_cast<int>(edge.size()); }
  int nedges() const { return static_cast<int>(edgeSides.size()); }
  std::string id() const { return sig.str() + "@" + version; }
};

extern const char* const kDataVersion;

// Cell structure built from the polygon word; no marking attached.
Triangulation buildCells(SurfaceSig sig);

// Cached, immutable, with marking loaded from the shipped data directory.
const Triangulation& referenceTriangulation(SurfaceSig sig);

std::string triangulationJson(const Triangulation& tri);
Triangulation triangulationFromJson(const std::string& text);

std::string dataDir();

} // namespace curvelab
