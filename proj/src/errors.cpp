#include "curvelab/errors.hpp"

namespace curvelab {

const char* errName(Err e) {
  switch (e) {
  case Err::UnsupportedSurface: return "UnsupportedSurface";
  case Err::InvalidDescriptor: return "InvalidDescriptor";
  case Err::NotProper: return "NotProper";
  case Err::NotAdmissible: return "NotAdmissible";
  case Err::EmptyAfterReduction: return "EmptyAfterReduction";
  case Err::MixedTriangulations: return "MixedTriangulations";
  case Err::AlreadyDisjoint: return "AlreadyDisjoint";
  case Err::NoAdmissibleBigon: return "NoAdmissibleBigon";
  case Err::BudgetExceeded: return "BudgetExceeded";
  case Err::SurfaceMismatch: return "SurfaceMismatch";
  case Err::NotSimpleLoop: return "NotSimpleLoop";
  case Err::NotSeparating: return "NotSeparating";
  case Err::DisconnectedSubsurface: return "DisconnectedSubsurface";
  case Err::NoIntersection: return "NoIntersection";
  case Err::Unreachable: return "Unreachable";
  case Err::UnknownVertex: return "UnknownVertex";
  case Err::UniverseTooSmall: return "UniverseTooSmall";
  case Err::NotOverlapping: return "NotOverlapping";
  case Err::SampleExhausted: return "SampleExhausted";
  case Err::RadiusExceedsSnapshot: return "RadiusExceedsSnapshot";
  case Err::WrongIntersection: return "WrongIntersection";
  case Err::DataFormat: return "DataFormat";
  case Err::Io: return "Io";
  }
  return "Unknown";
}

} // namespace curvelab
