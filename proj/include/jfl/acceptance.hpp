#pragma once

// The acceptance claims AC1..AC9, each evaluated exactly and independently.

#include <string>
#include <vector>

#include <json.hpp>

namespace jfl {

struct Claim {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<Claim> run_acceptance();
std::string to_text(const Claim& c, bool with_timing = false);
nlohmann::ordered_json to_json(const std::vector<Claim>& claims);

}  // namespace jfl
