#include "ponyexpress/error.hpp"

namespace pony {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::kEmptyRobotSet: return "EmptyRobotSet";
    case Errc::kPositionOutOfDomain: return "PositionOutOfDomain";
    case Errc::kNonPositiveSpeed: return "NonPositiveSpeed";
    case Errc::kDuplicateId: return "DuplicateId";
    case Errc::kMalformedDocument: return "MalformedDocument";
    case Errc::kUnknownVariant: return "UnknownVariant";
    case Errc::kVariantMismatch: return "VariantMismatch";
    case Errc::kInvalidRange: return "InvalidRange";
    case Errc::kYOutOfRange: return "YOutOfRange";
    case Errc::kEpsNonPositive: return "EpsNonPositive";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kSimulationHorizonExceeded: return "SimulationHorizonExceeded";
    case Errc::kNoEvent: return "NoEvent";
    case Errc::kInfeasibleM: return "InfeasibleM";
    case Errc::kNoDelivery: return "NoDelivery";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace pony
