#pragma once

#include <stdexcept>
#include <string>

namespace tropk {

enum class ErrorKind {
  InvalidInput,
  NotStronglyConvex,
  RayOutsideSupport,
  OutsideSupport,
  IndeterminateSign,
  ConeNotInFan,
  NotAFacePair,
  InvalidFunctional,
  NotConvex,
  ConditionFails,
  LevelsNotOnResidueLattice,
  NoCenter,
  SupportMismatch,
  InvalidUniformizer,
  UnsplitFactor,
  UnsupportedEntry,
  InfiniteIndex,
  DifferentialNotSquareZero,
  NotComplete,
  Mismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace tropk
