#pragma once

#include <stdexcept>
#include <string>

namespace pony {

enum class Errc {
  kEmptyRobotSet,
  kPositionOutOfDomain,
  kNonPositiveSpeed,
  kDuplicateId,
  kMalformedDocument,
  kUnknownVariant,
  kVariantMismatch,
  kInvalidRange,
  kYOutOfRange,
  kEpsNonPositive,
  kTooLarge,
  kSimulationHorizonExceeded,
  kNoEvent,
  kInfeasibleM,
  kNoDelivery,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace pony
