#include "cuspsys/error.hpp"

namespace cuspsys {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kUnpairedSide: return "UnpairedSide";
    case ErrorKind::kNonOrientable: return "NonOrientable";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kUnknownPreset: return "UnknownPreset";
    case ErrorKind::kBadGenus: return "BadGenus";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kPeripheral: return "Peripheral";
    case ErrorKind::kEmptyWord: return "EmptyWord";
    case ErrorKind::kBacktracking: return "Backtracking";
    case ErrorKind::kInvalidWalk: return "InvalidWalk";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kNoEssentialCurve: return "NoEssentialCurve";
    case ErrorKind::kTraceBudgetRequired: return "TraceBudgetRequired";
    case ErrorKind::kNotSimple: return "NotSimple";
    case ErrorKind::kPeripheralCurve: return "PeripheralCurve";
    case ErrorKind::kSameClass: return "SameClass";
    case ErrorKind::kNonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::kNoneApplicable: return "NoneApplicable";
    case ErrorKind::kInvalidSignature: return "InvalidSignature";
    case ErrorKind::kSignatureOutOfRange: return "SignatureOutOfRange";
    case ErrorKind::kNonPositiveLength: return "NonPositiveLength";
    case ErrorKind::kDegenerateConfig: return "DegenerateConfig";
    case ErrorKind::kAOutOfRange: return "aOutOfRange";
    case ErrorKind::kInvalidTriangle: return "InvalidTriangle";
    case ErrorKind::kInvalidPoint: return "InvalidPoint";
  }
  return "Unknown";
}

}  // namespace cuspsys
