#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace sptcrank {

/// Outcome of one exact verification. `first_failure` is the first q-power
/// (or other index named in `detail`) at which the check failed.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::size_t checked = 0;
  std::string detail;
};

}  // namespace sptcrank
