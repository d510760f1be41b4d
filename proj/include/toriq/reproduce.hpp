#pragma once

#include <string>
#include <vector>

namespace toriq {

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Identifiers of the bundled worked cases.
const std::vector<std::string>& reproduce_cases();
// Runs one case; std::invalid_argument for an unknown identifier.
std::vector<ReproCheck> reproduce(const std::string& id);

}  // namespace toriq
