#pragma once

// Seeded randomized property suites. Each suite runs a fixed number of cases and records the
// first counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jfl {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct PropertyConfig {
  std::uint64_t seed = 20261014;
  std::size_t cases = 1000;
};

PropertyResult check_series_ring_axioms(const PropertyConfig& cfg = {});
PropertyResult check_series_linearity(const PropertyConfig& cfg = {});
PropertyResult check_exact_divide_roundtrip(const PropertyConfig& cfg = {});
PropertyResult check_normal_form_homomorphism(const PropertyConfig& cfg = {});
PropertyResult check_kernel_certification(const PropertyConfig& cfg = {});
PropertyResult check_smith_postconditions(const PropertyConfig& cfg = {});
PropertyResult check_exact_complex_homology(const PropertyConfig& cfg = {});
PropertyResult check_d3_squared_zero(const PropertyConfig& cfg = {});
PropertyResult check_signed_leibniz(const PropertyConfig& cfg = {});
PropertyResult check_genus_properties(const PropertyConfig& cfg = {});

std::vector<PropertyResult> run_all_properties(const PropertyConfig& cfg = {});

}  // namespace jfl
