#pragma once

#include <stdexcept>
#include <string>

namespace wmsmooth {

// Failure kinds raised by the library. Input validation problems and
// precondition violations both surface as Error; callers that need to
// distinguish switch on the code.
enum class Errc {
  InvalidComponent,
  DimensionMismatch,
  EmptyInput,
  NotInRootLattice,
  NotSimpleRoot,
  NotDominant,
  NotNormal,
  NotGSaturated,
  AlphaNotInLattice,
  NotTorus,
  WrongGroup,
  InvalidParams,
  NotAVertex,
  RedundantVertex,
  VertexOutsideChamber,
  DegenerateDimension,
  InvalidLocalModel,
  UniquenessViolated,
  InvalidInput,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidComponent: return "InvalidComponent";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotInRootLattice: return "NotInRootLattice";
    case Errc::NotSimpleRoot: return "NotSimpleRoot";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotGSaturated: return "NotGSaturated";
    case Errc::AlphaNotInLattice: return "AlphaNotInLattice";
    case Errc::NotTorus: return "NotTorus";
    case Errc::WrongGroup: return "WrongGroup";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::RedundantVertex: return "RedundantVertex";
    case Errc::VertexOutsideChamber: return "VertexOutsideChamber";
    case Errc::DegenerateDimension: return "DegenerateDimension";
    case Errc::InvalidLocalModel: return "InvalidLocalModel";
    case Errc::UniquenessViolated: return "UniquenessViolated";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace wmsmooth
