#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbcodes {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  NoPrimitiveElement,
  FieldTooLarge,
  InvalidElement,
  DivisionByZero,
  ZeroHasNoLog,
  MixedFields,
  DependentRows,
  EmptyCode,
  LengthMismatch,
  TooLarge,
  BadIndex,
  ZeroInput,
  NotInImage,
  FrontierOverflow,
  ShapeViolation,
  RxElement,
  DimensionTooSmall,
  NotMinimalSupport,
  TooFewGenerators,
  InvalidIdeal,
  HypothesisFailed,
  OrderNotCompatible,
  TruncationOutOfRange,
  InvalidInput,
  Falsified,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so the
/// CLI can map it to a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gbcodes
