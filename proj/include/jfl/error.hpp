#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jfl {

enum class ErrorCode {
  MixedParity,
  BadExponent,
  NonDivisible,
  Inhomogeneous,
  NotAComplex,
  UnsupportedDegree,
  UnsupportedDim,
  NonIntegralGenus,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jfl
