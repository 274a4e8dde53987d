#pragma once

#include <functional>
#include <optional>

#include "jfl/error.hpp"
#include "jfl/series.hpp"

namespace test {

// The code of the jfl::Error thrown by f, if any.
inline std::optional<jfl::ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const jfl::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline jfl::QYSeries laurent_series(const jfl::Laurent& p, int truncation = 4) {
  std::vector<jfl::SeriesTerm> t;
  for (const auto& [y2, c] : p) t.push_back({0, y2, c});
  if (t.empty()) return jfl::QYSeries(truncation);
  return jfl::QYSeries::make(t, truncation);
}

}  // namespace test
