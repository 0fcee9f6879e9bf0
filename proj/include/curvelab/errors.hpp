#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

enum class Err {
  UnsupportedSurface,
  InvalidDescriptor,
  NotProper,
  NotAdmissible,
  EmptyAfterReduction,
  MixedTriangulations,
  AlreadyDisjoint,
  NoAdmissibleBigon,
  BudgetExceeded,
  SurfaceMismatch,
  NotSimpleLoop,
  NotSeparating,
  DisconnectedSubsurface,
  NoIntersection,
  Unreachable,
  UnknownVertex,
  UniverseTooSmall,
  NotOverlapping,
  SampleExhausted,
  RadiusExceedsSnapshot,
  WrongIntersection,
  DataFormat,
  Io,
};

const char* errName(Err e);

class LabError : public std::runtime_error {
public:
  LabError(Err code, const std::string& what)
      : std::runtime_error(std::string(errName(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

} // namespace curvelab
