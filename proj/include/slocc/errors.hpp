#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slocc {

enum class ErrorKind {
  NotHermitian,
  NotInLightCone,
  ComplexSpectrum,
  DegenerateClass,
  NotUnitDeterminant,
  NotOrthochronous,
  NotProperLorentz,
  BoundaryClass,
  NotAState,
  NotUnitVector,
  NotOutsideCylinders,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slocc
