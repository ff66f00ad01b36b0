#ifndef BAIRE_BRUTE_HPP
#define BAIRE_BRUTE_HPP

#include <string>
#include <vector>

#include "baire/derivation.hpp"
#include "baire/expr.hpp"

namespace baire {

// Finite-depth approximation of the optimal derivation sequence, computed on
// the algebra of depth-d cylinders plus tracked special points. This is the
// independent oracle for the symbolic engine; it never consults it.
struct BruteStage {
  std::vector<std::string> cylinders;
  std::vector<Point> specials;
};

struct ResidueApprox {
  size_t depth = 0;
  bool exact = false;
  bool settled = true;  // residue reached empty (vs a nonempty fixpoint)
  RegionMask last_mask = 0;
  std::vector<BruteStage> stages;  // stage 0 is the whole space
};

ResidueApprox brute_derive(const ExprPtr& f, const Pair& pr, size_t depth);

// Stage count of brute_derive with its exactness flag. When the residue hits
// a nonempty fixpoint the count is only a lower bound and exact is false.
std::pair<Ordinal, bool> brute_alpha(const ExprPtr& f, const Pair& pr,
                                     size_t depth);

size_t default_brute_depth(const ExprPtr& f);

// Verifies Q^{v#u} within P_C^v union P_D^u for the pairwise-intersection
// family of the two split families, over all finite stages in range.
struct L1Result {
  bool ok = true;
  std::string counterexample;
};
L1Result check_L1(const ExprPtr& f, const Pair& prf, const ExprPtr& g,
                  const Pair& prg, size_t depth);

std::string residue_trace_jsonl(const ResidueApprox& ra);

}  // namespace baire

#endif
