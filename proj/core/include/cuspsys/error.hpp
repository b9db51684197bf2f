#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspsys {

// Every failure the library reports is one of these kinds. The CLI maps
// them onto exit codes, tests match on them.
enum class ErrorKind {
  // ribbon_surface
  kUnpairedSide,
  kNonOrientable,
  kDisconnected,
  kUnknownPreset,
  kBadGenus,
  kParse,
  // turn_words
  kOverflow,
  kPeripheral,
  kEmptyWord,
  // geodesic_enum
  kBacktracking,
  kInvalidWalk,
  kBudgetExceeded,
  kNoEssentialCurve,
  kTraceBudgetRequired,
  // curve_topology
  kNotSimple,
  kPeripheralCurve,
  kSameClass,
  // bounds
  kNonPositiveRadius,
  kNoneApplicable,
  kInvalidSignature,
  kSignatureOutOfRange,
  kNonPositiveLength,
  // hplane
  kDegenerateConfig,
  kAOutOfRange,
  kInvalidTriangle,
  kInvalidPoint,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cuspsys
