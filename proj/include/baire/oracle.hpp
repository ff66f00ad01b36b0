#ifndef BAIRE_ORACLE_HPP
#define BAIRE_ORACLE_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "baire/derivation.hpp"
#include "baire/expr.hpp"

namespace baire {

// Queryable view of the canonical optimal mind-change sequence of the subject
// at one pair: triples (mu, sigma, i) with [sigma]'s stage-mu survivors inside
// C_i. Along extensions of a prefix the emitted stages strictly decrease.
struct MindChangeOracle {
  ExprPtr subject;
  Pair pair;

  struct Triple {
    Ordinal mu;
    std::string sigma;
    int side;
  };
  std::vector<Triple> observe(const std::string& prefix) const;
};

// Queryable view of a scaffolding sequence for the target: witnesses inside
// residues that escape one set of the split family.
struct ScaffoldOracle {
  ExprPtr target;
  Pair pair;

  // B in P^nu, inside [sigma], outside D_i; absent exactly when the inclusion
  // P^nu cap [sigma] subset D_i holds.
  std::optional<Point> query(const Ordinal& nu, const std::string& sigma,
                             int i) const;
};

}  // namespace baire

#endif
