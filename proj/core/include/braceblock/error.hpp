#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braceblock {

enum class ErrorKind {
  BadTable,
  NoIdentity,
  MissingInverse,
  NotAssociative,
  BadParameters,
  TooLarge,
  NotAHomomorphism,
  NotEndomorphism,
  NotAbelian,
  NotInvolution,
  NotCommutatorCentral,
  ImagesDoNotCommute,
  BraceFailure,
  EmptyBlock,
  NotABrace,
  ParseError,
  UnknownName,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code logic) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braceblock
