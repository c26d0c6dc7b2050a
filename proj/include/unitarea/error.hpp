#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitarea {

enum class Errc {
  InvalidArgument,
  Parse,
  IdenticalPoints,
  VerticalLine,
  PointNotOnLine,
  DuplicatePoints,
  VerticalLinePresent,
  ParallelSlopes,
  DegenerateTriangle,
  ZeroArea,
  Unsatisfiable,
  SamePair,
  NonSimpleFactorUnsupported,
  AmbiguousMedian,
  NotAGammaStar,
  InfiniteSharedComponent,
  DegenerateTriple,
  NoBranch,
  InvariantViolation,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported as an Error carrying one of the
// codes above; the message adds the concrete context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace unitarea
