#pragma once

#include "curvelab/curve.hpp"

#include <array>
#include <vector>

namespace curvelab {

struct Piece {
  SurfaceSig sig;
  int chi = 0;
  std::vector<int> punctures;              // vertex classes inside the piece
  std::vector<std::array<int, 2>> sides;   // (component, 0 = right side, 1 = left side)
  bool essential() const { return complexity(sig) >= 1; }
};

struct CutSurface {
  std::vector<Piece> pieces;
  std::vector<std::array<int, 2>> sidePiece; // per component: piece on its right, piece on its left
  std::vector<int> essentialPieces;
  // piece containing each gap of each side: gapPiece[t][s][g], g = 0..w
  std::vector<std::array<std::vector<int>, 3>> gapPiece;

  std::vector<SurfaceSig> signature() const; // sorted piece signatures
};

CutSurface cutAlong(const NormalMulticurve& c);
bool isSeparatingMulticurve(const NormalMulticurve& c);

struct SubsurfaceDescriptor {
  SurfaceSig ambient;
  NormalMulticurve boundary;      // the cut multicurve
  std::vector<int> selected;      // indices into cutAlong(boundary).pieces
};

enum class SubsurfaceKind { Separating, Nonseparating };

SubsurfaceKind classifySubsurface(const SubsurfaceDescriptor& d);

} // namespace curvelab
