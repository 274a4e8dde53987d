#include "jfl/error.hpp"

#include "jfl/integer.hpp"

namespace jfl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedParity: return "MixedParity";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::Inhomogeneous: return "Inhomogeneous";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::UnsupportedDim: return "UnsupportedDim";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace jfl
