#pragma once

// Exhaustive machine check of the general position constructions.

#include <hypform/general_position.hpp>

#include <string>
#include <vector>

namespace hypform {

struct EnumeratedCase {
  std::size_t n = 0;
  /// "p=3,2r=2" or "(l,p,q)=(0,1,2)".
  std::string first;
  std::string second;
  std::string entry;
  bool passed = false;
  bool repaired = false;
  std::string detail;  // repair reason or failure message
};

struct EnumerationReport {
  FormKind kind = FormKind::sp;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t repaired = 0;
  std::vector<EnumeratedCase> cases;
  bool ok() const { return fail == 0; }
};

/// Every admissible pair of invariants with dim W1 + dim W2 = 2n for
/// n_min <= n <= n_max, each built, then re-checked independently of the
/// construction. n = 0 and n = 1 contribute no cases.
EnumerationReport enumerate_validate(FormKind kind, std::size_t n_min, std::size_t n_max);

}  // namespace hypform
