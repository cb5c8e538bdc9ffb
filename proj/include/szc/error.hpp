#ifndef SZC_ERROR_HPP
#define SZC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace szc {

enum class ErrorCode {
  InvalidArgument,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeNotPresent,
  Disconnected,
  NotCactus,
  NotABlock,
  NotACycleBlock,
  NotCutEdge,
  EndpointIsPendant,
  CycleTooShort,
  NotEndBlock,
  GraphTooSmall,
  GraphTooLarge,
  MalformedHeader,
  TruncatedBitstream,
  InvalidCharacter,
  ParseError,
  InfeasibleParameters,
  TooLarge,
  IdentityMismatch,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace szc

#endif
