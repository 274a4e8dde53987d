#include <cstring>
#include <iostream>

#include "jfl/acceptance.hpp"

int main(int argc, char** argv) {
  const bool timing = argc > 1 && std::strcmp(argv[1], "--timing") == 0;
  int failed = 0;
  for (const auto& c : jfl::run_acceptance()) {
    std::cout << jfl::to_text(c, timing) << "\n";
    failed += c.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
