#ifndef BAIRE_DERIVATION_HPP
#define BAIRE_DERIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baire/expr.hpp"

namespace baire {

enum class Region { low = 0, mid = 1, high = 2 };

using RegionMask = unsigned;
constexpr RegionMask kLowBit = 1, kMidBit = 2, kHighBit = 4;

Region region_of(const Rat& y, const Pair& pr);
inline RegionMask region_bit(Region r) { return 1u << static_cast<int>(r); }

// Set indices follow the fixed convention: C_0 = f^{-1}((-inf, p+eps)) where
// answer 1 is correct, C_1 = f^{-1}((p-eps, inf)) where answer 0 is correct.
inline RegionMask set_mask(int i) {
  return i == 0 ? (kLowBit | kMidBit) : (kMidBit | kHighBit);
}
inline bool region_in_set(Region r, int i) {
  return (region_bit(r) & set_mask(i)) != 0;
}
// The answer bit guaranteed correct on C_i.
inline int set_answer(int i) { return i == 0 ? 1 : 0; }

// Which regions the survivors of P^mu meet, as a step function of mu.
// Keys strictly increase starting at 0; masks are non-increasing; the final
// mask is 0 (the derivation empties every residue).
using MaskSeg = std::vector<std::pair<Ordinal, RegionMask>>;

RegionMask mask_at(const MaskSeg& m, const Ordinal& mu);
Ordinal first_empty(const MaskSeg& m);
Ordinal first_subset(const MaskSeg& m, RegionMask allowed);

// Per-(p,eps) summary of the optimal derivation sequence.
struct Profile {
  Pair pair;
  Ordinal alpha;
  Ordinal mu_low;   // least mu with f(P^mu) in (-inf, p+eps)
  Ordinal mu_high;  // least mu with f(P^mu) in (p-eps, inf)
  RegionMask last_sides = 0;
};

// Symbolic derivation engine. The `declared` flag selects the degree-level
// view in which a limit-rank Canon node reports its declared rank; the honest
// view reports the derivation of the node's expansion and is the one the
// executable reductions run on.
class Deriver {
 public:
  explicit Deriver(bool declared) : declared_(declared) {}

  MaskSeg cyl_mask(const ExprPtr& e, const Pair& pr, const std::string& sigma,
                   const PointSet& excl);
  // Regions met by punctured neighborhoods of z, in the small-neighborhood
  // limit, per stage.
  MaskSeg local_mask(const ExprPtr& e, const Pair& pr, const Point& z);
  // Least mu with x outside P^mu; always a successor.
  Ordinal point_exit(const ExprPtr& e, const Pair& pr, const Point& x);
  // A stage-mu survivor of [sigma] with value in region r, avoiding excl.
  std::optional<Point> find_witness(const ExprPtr& e, const Pair& pr,
                                    const std::string& sigma,
                                    const PointSet& excl, Region r,
                                    const Ordinal& mu);

  struct CylExit {
    Ordinal mu;  // least stage at which [sigma]'s survivors are one-sided
    int side;    // a set index valid at that stage (0 preferred)
  };
  CylExit cyl_exit(const ExprPtr& e, const Pair& pr, const std::string& sigma);

  Profile profile(const ExprPtr& e, const Pair& pr);

  bool declared() const { return declared_; }

 private:
  Ordinal stack_limit_exit(const StackE& st, const Pair& pr);
  Ordinal spike_exit(const ExprPtr& child, const Pair& pr, const Point& z,
                     Region rv);

  bool declared_;
  std::map<std::string, MaskSeg> mask_memo_;
  std::map<std::string, Ordinal> ord_memo_;
};

// Thread-local engines for the free-function API.
Deriver& declared_deriver();
Deriver& honest_deriver();

// Library-level operations (declared view).
Profile derive_profile(const ExprPtr& e, const Pair& pr);
Ordinal alpha_rank(const ExprPtr& e);
Ordinal point_rank(const ExprPtr& e, const Pair& pr, const Point& x);
std::vector<Pair> maximal_pairs(const ExprPtr& e);
Sidedness classify(const ExprPtr& e);

// alpha(f, p, eps) in the honest view (what the reductions run against).
Profile honest_profile(const ExprPtr& e, const Pair& pr);
Ordinal honest_alpha_rank(const ExprPtr& e);
Sidedness honest_classify(const ExprPtr& e);

}  // namespace baire

#endif
