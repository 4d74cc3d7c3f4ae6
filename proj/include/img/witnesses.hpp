#pragma once

#include <string>
#include <vector>

#include "img/kneading.hpp"

namespace img {

struct WitnessLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Checkable ingredients of the (weak) branchness proofs. This does not decide
/// branchness; it reports each ingredient as pass/fail.
struct WitnessReport {
  std::string summary;
  std::vector<WitnessLine> lines;
  bool all_pass() const;
};

WitnessReport branch_witnesses(const KneadingGroup& group);

}  // namespace img
