#ifndef BAIRE_VERIFY_HPP
#define BAIRE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace baire {

struct SuiteResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the numbered verification criteria (1..10); empty list means all.
std::vector<SuiteResult> run_criteria(uint64_t seed, std::vector<int> which);

// Maps a suite name (ordinals|derivation|degrees|reductions|all) onto
// criterion numbers; throws on unknown names.
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace baire

#endif
