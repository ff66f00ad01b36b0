#ifndef BAIRE_EXPR_HPP
#define BAIRE_EXPR_HPP

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "baire/ordinal.hpp"
#include "baire/point.hpp"
#include "baire/rational.hpp"

namespace baire {

enum class Sidedness { two, left, right, one_neither, limit, continuous };

std::string sidedness_str(Sidedness s);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstE {
  Rat v;
};
struct AffineE {
  Rat a, b;
  ExprPtr f;
};
struct GlueE {
  ExprPtr f0, f1;
};
struct SpikeE {
  ExprPtr f;
  Point z;
  Rat v;
};
struct CycleSeq {
  std::vector<ExprPtr> items;
};
struct FundSeq {
  Ordinal limit;
  Sidedness side;
};
struct StackE {
  std::variant<CycleSeq, FundSeq> seq;
  Rat v;
};
struct SumE {
  ExprPtr f, g;
};
struct ProdE {
  ExprPtr f, g;
};
struct CanonE {
  Ordinal rank;
  Sidedness side;
};

struct Expr {
  std::variant<ConstE, AffineE, GlueE, SpikeE, StackE, SumE, ProdE, CanonE> node;
};

ExprPtr mk_const(Rat v);
ExprPtr mk_affine(Rat a, Rat b, ExprPtr f);
ExprPtr mk_glue(ExprPtr f0, ExprPtr f1);
ExprPtr mk_spike(ExprPtr f, Point z, Rat v);
ExprPtr mk_stack_cycle(std::vector<ExprPtr> items, Rat v);
ExprPtr mk_stack_fund(Ordinal limit, Sidedness side, Rat v);
ExprPtr mk_sum(ExprPtr f, ExprPtr g);
ExprPtr mk_prod(ExprPtr f, ExprPtr g);
// Canonical function of the given rank and sidedness; validates compatibility.
ExprPtr mk_canon(Ordinal rank, Sidedness side);

ExprPtr mk_neg(ExprPtr f);  // Affine(-1, 0, f)

// One-level structural expansion of a Canon node (children may be Canon).
ExprPtr canon_expand(const Ordinal& rank, Sidedness side);
// The n-th copy of a stack sequence.
ExprPtr stack_copy(const StackE& st, unsigned long long n);
// Number of distinct copy classes for a Cycle; 0 marks a Fund sequence.
size_t cycle_len(const StackE& st);

Rat eval(const ExprPtr& e, const Point& x);

struct RangeInfo {
  std::set<Rat> values;
  bool exact = true;
};
RangeInfo range_of(const ExprPtr& e);
bool is_constant(const ExprPtr& e);

struct Pair {
  Rat p;
  Rat eps;
  friend bool operator==(const Pair& a, const Pair& b) {
    return a.p == b.p && a.eps == b.eps;
  }
  friend bool operator<(const Pair& a, const Pair& b) {
    if (!(a.p == b.p)) return a.p < b.p;
    return a.eps < b.eps;
  }
  std::string str() const { return "(" + p.str() + ", " + eps.str() + ")"; }
};

// One representative (p, eps) per region-partition class of the finite range.
std::vector<Pair> critical_pairs(const ExprPtr& e);

// A point attaining the given value, if one is found structurally.
// Excluded points are avoided (they may attain other values).
struct PointSet {
  std::vector<Point> pts;
  bool contains(const Point& q) const;
  PointSet with(const Point& q) const;
  PointSet translated(const std::string& prefix_removed) const;
};
Point pick_point_in(const std::string& sigma, const PointSet& excluded);
bool find_value_witness(const ExprPtr& e, const Rat& v, const PointSet& excluded,
                        Point& out);

size_t structural_depth(const ExprPtr& e);
bool has_stack(const ExprPtr& e);
bool has_sum_or_prod(const ExprPtr& e);
// Max word length over all Spike points (stack-free expressions only).
size_t max_spike_word(const ExprPtr& e);

// Replaces every stack by its first n copies glued over a Const filler;
// expands Canon nodes. Result is stack-free.
ExprPtr truncate_stacks(const ExprPtr& e, unsigned long long n);

// Structural semicontinuity checks; throw unsupported_error on Sum/Prod.
bool is_lsc(const ExprPtr& e);
bool is_usc(const ExprPtr& e);
// Values attained in every punctured neighborhood of z.
std::set<Rat> local_values(const ExprPtr& e, const Point& z);

std::string format_expr(const ExprPtr& e);
uint64_t expr_hash(const ExprPtr& e);

}  // namespace baire

#endif
