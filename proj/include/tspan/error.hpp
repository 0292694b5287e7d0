#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tspan {

enum class Errc {
  kMissingEdge,
  kDuplicateEdge,
  kLocalLabelCollision,
  kVertexOutOfRange,
  kEmptyLabelSet,
  kLabelOutOfRange,
  kRankOutOfBounds,
  kInstanceMismatch,
  kMapMismatch,
  kInvalidCertificate,
  kMalformedArcSet,
  kIsSink,
  kInconsistentFireworks,
  kSplitStalled,
  kInstanceTooLarge,
  kNTooSmall,
  kUnknownFixture,
  kParse,
  kInvalidArgument,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (tests, the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tspan
