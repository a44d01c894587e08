#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grasshilb {

enum class ErrorKind {
  // partition validation
  WrongPartCount,
  NotWeaklyDecreasing,
  PartExceedsWidth,
  NegativePart,
  // parameter ranges and preconditions
  InvalidParameter,
  BoundTooSmall,
  NonMaximalClass,
  // linear algebra / geometry
  DimensionMismatch,
  RankDeficient,
  NotOnGrassmannian,
  UnclassifiablePlane,
  NotSquarefree,
  // text and JSON input
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes causes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grasshilb
