#pragma once

// Named verification batches. Each batch compares a closed form or a fast
// engine against an independent computation and reports the first
// counterexample it meets.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "involution_lab/enumeration.hpp"

namespace involution_lab {

/// Overrides for a batch's default ranges; unset fields keep the defaults.
struct CheckParams {
  std::optional<std::uint32_t> p;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint32_t> s_max;
  std::optional<std::uint64_t> m_max;
  EnumerationLimits limits{};
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;  // what was checked
  std::optional<std::string> counterexample;
};

/// Every batch name in run order (not including "all").
std::span<const std::string_view> check_names();

bool is_check_name(std::string_view name);

/// Runs one batch, or every batch for "all". Throws ArgumentError for an
/// unknown name or out-of-range parameters; ResourceError propagates when a
/// brute-force stage exceeds its cap.
std::vector<CheckOutcome> run_check(std::string_view name, const CheckParams& params = {});

}  // namespace involution_lab
