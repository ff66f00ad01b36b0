#include <cstdio>

#include "baire/verify.hpp"

int main() {
  auto results = baire::run_criteria(1, {});
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL",
                r.criterion, r.name.c_str(), r.detail.c_str(), r.seconds);
    if (!r.pass) ++failures;
  }
  return failures;
}
