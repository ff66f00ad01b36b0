#include "baire/expr.hpp"

#include <algorithm>

namespace baire {

std::string sidedness_str(Sidedness s) {
  switch (s) {
    case Sidedness::two: return "two";
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
    case Sidedness::one_neither: return "one";
    case Sidedness::limit: return "limit";
    case Sidedness::continuous: return "cont";
  }
  return "?";
}

namespace {
ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
}  // namespace

ExprPtr mk_const(Rat v) { return make(Expr{ConstE{v}}); }

ExprPtr mk_affine(Rat a, Rat b, ExprPtr f) {
  if (a.num == 0) throw precondition_error("affine coefficient a must be nonzero");
  return make(Expr{AffineE{a, b, std::move(f)}});
}

ExprPtr mk_glue(ExprPtr f0, ExprPtr f1) {
  return make(Expr{GlueE{std::move(f0), std::move(f1)}});
}

ExprPtr mk_spike(ExprPtr f, Point z, Rat v) {
  // Collapse an immediate re-override of the same point.
  if (auto* sp = std::get_if<SpikeE>(&f->node); sp && sp->z == z)
    return make(Expr{SpikeE{sp->f, z, v}});
  return make(Expr{SpikeE{std::move(f), std::move(z), v}});
}

ExprPtr mk_stack_cycle(std::vector<ExprPtr> items, Rat v) {
  if (items.empty()) throw precondition_error("cycle requires at least one item");
  return make(Expr{StackE{CycleSeq{std::move(items)}, v}});
}

ExprPtr mk_stack_fund(Ordinal limit, Sidedness side, Rat v) {
  if (!limit.is_limit()) throw precondition_error("fund requires a limit ordinal");
  if (side != Sidedness::left && side != Sidedness::right)
    throw precondition_error("fund side must be left or right");
  return make(Expr{StackE{FundSeq{std::move(limit), side}, v}});
}

ExprPtr mk_sum(ExprPtr f, ExprPtr g) {
  return make(Expr{SumE{std::move(f), std::move(g)}});
}
ExprPtr mk_prod(ExprPtr f, ExprPtr g) {
  return make(Expr{ProdE{std::move(f), std::move(g)}});
}

ExprPtr mk_canon(Ordinal rank, Sidedness side) {
  if (rank.is_zero()) throw precondition_error("canon rank must be >= 1");
  bool ok;
  if (rank == Ordinal(1)) {
    ok = side == Sidedness::continuous;
  } else if (rank.is_limit()) {
    ok = side == Sidedness::limit;
  } else {
    ok = side == Sidedness::two || side == Sidedness::left ||
         side == Sidedness::right || side == Sidedness::one_neither;
  }
  if (!ok)
    throw precondition_error("canon side " + sidedness_str(side) +
                             " incompatible with rank " + rank.str());
  return make(Expr{CanonE{std::move(rank), side}});
}

ExprPtr mk_neg(ExprPtr f) { return mk_affine(Rat(-1), Rat(0), std::move(f)); }

ExprPtr canon_expand(const Ordinal& rank, Sidedness side) {
  if (rank == Ordinal(1)) return mk_glue(mk_const(Rat(0)), mk_const(Rat(1)));
  if (rank.is_limit()) return mk_stack_fund(rank, Sidedness::left, Rat(0));
  Ordinal nu = pred(rank);
  switch (side) {
    case Sidedness::left:
      if (nu == Ordinal(1)) return mk_spike(mk_const(Rat(1)), Point::zeros(), Rat(0));
      if (nu.is_limit()) return mk_stack_fund(nu, Sidedness::right, Rat(0));
      return mk_stack_cycle({mk_canon(nu, Sidedness::right)}, Rat(0));
    case Sidedness::right:
      if (nu == Ordinal(1)) return mk_spike(mk_const(Rat(0)), Point::zeros(), Rat(1));
      if (nu.is_limit()) return mk_stack_fund(nu, Sidedness::left, Rat(1));
      return mk_stack_cycle({mk_canon(nu, Sidedness::left)}, Rat(1));
    case Sidedness::two:
      return mk_glue(mk_canon(rank, Sidedness::left), mk_canon(rank, Sidedness::right));
    case Sidedness::one_neither:
      return mk_glue(mk_canon(rank, Sidedness::left),
                     mk_affine(Rat(1), Rat(-1), mk_canon(rank, Sidedness::right)));
    default:
      throw precondition_error("cannot expand canon side for this rank");
  }
}

ExprPtr stack_copy(const StackE& st, unsigned long long n) {
  if (const auto* cy = std::get_if<CycleSeq>(&st.seq))
    return cy->items[n % cy->items.size()];
  const auto& fu = std::get<FundSeq>(st.seq);
  return mk_canon(successor(fund_seq(fu.limit, n)), fu.side);
}

size_t cycle_len(const StackE& st) {
  if (const auto* cy = std::get_if<CycleSeq>(&st.seq)) return cy->items.size();
  return 0;
}

Rat eval(const ExprPtr& e, const Point& x) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) return c->v;
  if (const auto* a = std::get_if<AffineE>(&e->node))
    return a->a * eval(a->f, x) + a->b;
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return eval(x.bit_at(0) == 0 ? g->f0 : g->f1, x.drop(1));
  if (const auto* s = std::get_if<SpikeE>(&e->node))
    return x == s->z ? s->v : eval(s->f, x);
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (x == Point::ones()) return st->v;
    size_t a = 0;
    while (x.bit_at(a) == 1) ++a;
    return eval(stack_copy(*st, a), x.drop(a + 1));
  }
  if (const auto* s = std::get_if<SumE>(&e->node))
    return eval(s->f, x) + eval(s->g, x);
  if (const auto* p = std::get_if<ProdE>(&e->node))
    return eval(p->f, x) * eval(p->g, x);
  const auto& cn = std::get<CanonE>(e->node);
  return eval(canon_expand(cn.rank, cn.side), x);
}

namespace {

void collect_range(const ExprPtr& e, const PointSet& excl, std::set<Rat>& out,
                   bool& exact);

void affine_map_into(const Rat& a, const Rat& b, const std::set<Rat>& in,
                     std::set<Rat>& out) {
  for (const auto& v : in) out.insert(a * v + b);
}

void collect_range(const ExprPtr& e, const PointSet& excl, std::set<Rat>& out,
                   bool& exact) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    out.insert(c->v);  // excluded points are finite; a bulk value is attained
    return;
  }
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    std::set<Rat> sub;
    collect_range(a->f, excl, sub, exact);
    affine_map_into(a->a, a->b, sub, out);
    return;
  }
  if (const auto* g = std::get_if<GlueE>(&e->node)) {
    collect_range(g->f0, excl.translated("0"), out, exact);
    collect_range(g->f1, excl.translated("1"), out, exact);
    return;
  }
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    if (!excl.contains(s->z)) out.insert(s->v);
    collect_range(s->f, excl.with(s->z), out, exact);
    return;
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (!excl.contains(Point::ones())) out.insert(st->v);
    size_t len = cycle_len(*st);
    if (len > 0) {
      // Every class occurs at infinitely many positions; pick for each class a
      // position whose cylinder is free of excluded points.
      for (size_t j = 0; j < len; ++j) {
        size_t n = j;
        while (true) {
          std::string pre(n, '1');
          pre.push_back('0');
          bool hit = false;
          for (const auto& q : excl.pts)
            if (q.in_cylinder(pre)) hit = true;
          if (!hit) break;
          n += len;
        }
        collect_range(stack_copy(*st, n), PointSet{}, out, exact);
      }
    } else {
      // Canonical tower copies share one range; two representatives suffice.
      collect_range(stack_copy(*st, 0), PointSet{}, out, exact);
      collect_range(stack_copy(*st, 1), PointSet{}, out, exact);
    }
    return;
  }
  if (const auto* s = std::get_if<SumE>(&e->node)) {
    std::set<Rat> rf, rg;
    collect_range(s->f, PointSet{}, rf, exact);
    collect_range(s->g, PointSet{}, rg, exact);
    for (const auto& u : rf)
      for (const auto& w : rg) out.insert(u + w);
    exact = false;
    return;
  }
  if (const auto* p = std::get_if<ProdE>(&e->node)) {
    std::set<Rat> rf, rg;
    collect_range(p->f, PointSet{}, rf, exact);
    collect_range(p->g, PointSet{}, rg, exact);
    for (const auto& u : rf)
      for (const auto& w : rg) out.insert(u * w);
    exact = false;
    return;
  }
  const auto& cn = std::get<CanonE>(e->node);
  collect_range(canon_expand(cn.rank, cn.side), excl, out, exact);
}

}  // namespace

RangeInfo range_of(const ExprPtr& e) {
  RangeInfo r;
  collect_range(e, PointSet{}, r.values, r.exact);
  return r;
}

bool is_constant(const ExprPtr& e) { return range_of(e).values.size() == 1; }

std::vector<Pair> critical_pairs(const ExprPtr& e) {
  RangeInfo r = range_of(e);
  std::vector<Rat> v(r.values.begin(), r.values.end());
  const size_t m = v.size();
  std::set<Pair> out;
  if (m < 2) return {};
  Rat half(1, 2), quarter(1, 4);
  for (size_t i = 0; i + 1 < m; ++i) {
    // Both cuts in the same gap (v_i | v_{i+1}); no mid values.
    out.insert(Pair{(v[i] + v[i + 1]) * half, (v[i + 1] - v[i]) * quarter});
    // Lower cut in an earlier gap: values v_j..v_i land in the mid region.
    for (size_t j = 1; j <= i; ++j) {
      Rat hi = (v[i] + v[i + 1]) * half;   // p + eps
      Rat lo = (v[j - 1] + v[j]) * half;   // p - eps
      out.insert(Pair{(hi + lo) * half, (hi - lo) * half});
    }
  }
  return {out.begin(), out.end()};
}

bool PointSet::contains(const Point& q) const {
  return std::find(pts.begin(), pts.end(), q) != pts.end();
}

PointSet PointSet::with(const Point& q) const {
  PointSet r = *this;
  if (!r.contains(q)) r.pts.push_back(q);
  return r;
}

PointSet PointSet::translated(const std::string& prefix_removed) const {
  PointSet r;
  for (const auto& q : pts)
    if (q.in_cylinder(prefix_removed)) r.pts.push_back(q.drop(prefix_removed.size()));
  return r;
}

Point pick_point_in(const std::string& sigma, const PointSet& excluded) {
  std::string w = sigma;
  for (size_t guard = 0; guard <= excluded.pts.size() + 2; ++guard) {
    for (int t = 0; t < 2; ++t) {
      Point cand(w, t);
      if (!excluded.contains(cand) && cand.in_cylinder(sigma)) return cand;
    }
    w.push_back('0');
  }
  throw error("pick_point_in failed");  // unreachable: exclusions are finite
}

bool find_value_witness(const ExprPtr& e, const Rat& v, const PointSet& excl,
                        Point& out) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    if (!(c->v == v)) return false;
    out = pick_point_in("", excl);
    return true;
  }
  if (const auto* a = std::get_if<AffineE>(&e->node))
    return find_value_witness(a->f, (v - a->b) / a->a, excl, out);
  if (const auto* g = std::get_if<GlueE>(&e->node)) {
    Point sub;
    if (find_value_witness(g->f0, v, excl.translated("0"), sub)) {
      out = sub.prepend("0");
      return true;
    }
    if (find_value_witness(g->f1, v, excl.translated("1"), sub)) {
      out = sub.prepend("1");
      return true;
    }
    return false;
  }
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    if (s->v == v && !excl.contains(s->z)) {
      out = s->z;
      return true;
    }
    return find_value_witness(s->f, v, excl.with(s->z), out);
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (st->v == v && !excl.contains(Point::ones())) {
      out = Point::ones();
      return true;
    }
    size_t len = cycle_len(*st);
    size_t tries = len > 0 ? len + excl.pts.size() + 1 : 3;
    for (size_t n = 0; n < tries; ++n) {
      std::string pre(n, '1');
      pre.push_back('0');
      Point sub;
      if (find_value_witness(stack_copy(*st, n), v, excl.translated(pre), sub)) {
        out = sub.prepend(pre);
        return true;
      }
    }
    return false;
  }
  if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node))
    throw unsupported_error("value witness for sum/prod is not supported");
  const auto& cn = std::get<CanonE>(e->node);
  return find_value_witness(canon_expand(cn.rank, cn.side), v, excl, out);
}

size_t structural_depth(const ExprPtr& e) {
  if (std::get_if<ConstE>(&e->node)) return 1;
  if (const auto* a = std::get_if<AffineE>(&e->node))
    return 1 + structural_depth(a->f);
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return 1 + std::max(structural_depth(g->f0), structural_depth(g->f1));
  if (const auto* s = std::get_if<SpikeE>(&e->node))
    return 1 + std::max(structural_depth(s->f), s->z.word.size());
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    size_t d = 0;
    if (const auto* cy = std::get_if<CycleSeq>(&st->seq))
      for (const auto& it : cy->items) d = std::max(d, structural_depth(it));
    return 1 + d;
  }
  if (const auto* s = std::get_if<SumE>(&e->node))
    return 1 + std::max(structural_depth(s->f), structural_depth(s->g));
  if (const auto* p = std::get_if<ProdE>(&e->node))
    return 1 + std::max(structural_depth(p->f), structural_depth(p->g));
  return 2;
}

bool has_stack(const ExprPtr& e) {
  if (std::get_if<ConstE>(&e->node)) return false;
  if (const auto* a = std::get_if<AffineE>(&e->node)) return has_stack(a->f);
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return has_stack(g->f0) || has_stack(g->f1);
  if (const auto* s = std::get_if<SpikeE>(&e->node)) return has_stack(s->f);
  if (std::get_if<StackE>(&e->node)) return true;
  if (const auto* s = std::get_if<SumE>(&e->node))
    return has_stack(s->f) || has_stack(s->g);
  if (const auto* p = std::get_if<ProdE>(&e->node))
    return has_stack(p->f) || has_stack(p->g);
  const auto& cn = std::get<CanonE>(e->node);
  return cmp(cn.rank, Ordinal(2)) == Order::greater;
}

bool has_sum_or_prod(const ExprPtr& e) {
  if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node)) return true;
  if (const auto* a = std::get_if<AffineE>(&e->node)) return has_sum_or_prod(a->f);
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return has_sum_or_prod(g->f0) || has_sum_or_prod(g->f1);
  if (const auto* s = std::get_if<SpikeE>(&e->node)) return has_sum_or_prod(s->f);
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (const auto* cy = std::get_if<CycleSeq>(&st->seq))
      for (const auto& it : cy->items)
        if (has_sum_or_prod(it)) return true;
  }
  return false;
}

size_t max_spike_word(const ExprPtr& e) {
  if (const auto* a = std::get_if<AffineE>(&e->node)) return max_spike_word(a->f);
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return std::max(1 + max_spike_word(g->f0), 1 + max_spike_word(g->f1));
  if (const auto* s = std::get_if<SpikeE>(&e->node))
    return std::max(s->z.word.size(), max_spike_word(s->f));
  if (const auto* s = std::get_if<SumE>(&e->node))
    return std::max(max_spike_word(s->f), max_spike_word(s->g));
  if (const auto* p = std::get_if<ProdE>(&e->node))
    return std::max(max_spike_word(p->f), max_spike_word(p->g));
  if (const auto* cn = std::get_if<CanonE>(&e->node)) {
    if (cmp(cn->rank, Ordinal(2)) != Order::greater)
      return max_spike_word(canon_expand(cn->rank, cn->side));
  }
  return 0;
}

ExprPtr truncate_stacks(const ExprPtr& e, unsigned long long n) {
  if (std::get_if<ConstE>(&e->node)) return e;
  if (const auto* a = std::get_if<AffineE>(&e->node))
    return mk_affine(a->a, a->b, truncate_stacks(a->f, n));
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return mk_glue(truncate_stacks(g->f0, n), truncate_stacks(g->f1, n));
  if (const auto* s = std::get_if<SpikeE>(&e->node))
    return mk_spike(truncate_stacks(s->f, n), s->z, s->v);
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    ExprPtr acc = mk_const(st->v);
    for (unsigned long long i = n; i-- > 0;)
      acc = mk_glue(truncate_stacks(stack_copy(*st, i), n), acc);
    return acc;
  }
  if (const auto* s = std::get_if<SumE>(&e->node))
    return mk_sum(truncate_stacks(s->f, n), truncate_stacks(s->g, n));
  if (const auto* p = std::get_if<ProdE>(&e->node))
    return mk_prod(truncate_stacks(p->f, n), truncate_stacks(p->g, n));
  const auto& cn = std::get<CanonE>(e->node);
  return truncate_stacks(canon_expand(cn.rank, cn.side), n);
}

std::set<Rat> local_values(const ExprPtr& e, const Point& z) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) return {c->v};
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    std::set<Rat> out;
    affine_map_into(a->a, a->b, local_values(a->f, z), out);
    return out;
  }
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return local_values(z.bit_at(0) == 0 ? g->f0 : g->f1, z.drop(1));
  if (const auto* s = std::get_if<SpikeE>(&e->node)) return local_values(s->f, z);
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (z == Point::ones()) {
      std::set<Rat> out;
      bool exact = true;
      size_t len = cycle_len(*st);
      size_t reps = len > 0 ? len : 2;
      for (size_t j = 0; j < reps; ++j)
        collect_range(stack_copy(*st, j), PointSet{}, out, exact);
      return out;
    }
    size_t a = 0;
    while (z.bit_at(a) == 1) ++a;
    return local_values(stack_copy(*st, a), z.drop(a + 1));
  }
  if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node))
    throw unsupported_error("local values for sum/prod are not supported");
  const auto& cn = std::get<CanonE>(e->node);
  return local_values(canon_expand(cn.rank, cn.side), z);
}

namespace {

// lower=true checks lower semicontinuity; false, upper. Excluded points are
// shadowed by overrides higher up and contribute nothing here.
bool semicontinuous(const ExprPtr& e, bool lower, const PointSet& excl) {
  if (std::get_if<ConstE>(&e->node)) return true;
  if (const auto* a = std::get_if<AffineE>(&e->node))
    return semicontinuous(a->f, a->a > Rat(0) ? lower : !lower, excl);
  if (const auto* g = std::get_if<GlueE>(&e->node))
    return semicontinuous(g->f0, lower, excl.translated("0")) &&
           semicontinuous(g->f1, lower, excl.translated("1"));
  auto value_ok = [&](const Rat& v, const std::set<Rat>& loc) {
    return lower ? v <= *loc.begin() : v >= *loc.rbegin();
  };
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    if (excl.contains(s->z)) return semicontinuous(s->f, lower, excl);
    if (!semicontinuous(s->f, lower, excl.with(s->z))) return false;
    return value_ok(s->v, local_values(s->f, s->z));
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (excl.pts.empty()) {
      if (cycle_len(*st) > 0) {
        for (const auto& it : std::get<CycleSeq>(st->seq).items)
          if (!semicontinuous(it, lower, PointSet{})) return false;
      } else {
        // Tower copies of rank >= 3 are never semicontinuous; checking until
        // the copy rank passes 2 decides all of them.
        for (unsigned long long n = 0;; ++n) {
          ExprPtr c = stack_copy(*st, n);
          if (!semicontinuous(c, lower, PointSet{})) return false;
          if (cmp(std::get<CanonE>(c->node).rank, Ordinal(2)) == Order::greater)
            break;
        }
      }
    } else {
      // Copies touched by exclusions get them translated; one clean instance
      // of each class covers the untouched positions.
      size_t len = cycle_len(*st);
      size_t reps = len > 0 ? len : 2;
      for (size_t j = 0; j < reps; ++j)
        if (!semicontinuous(stack_copy(*st, j), lower, PointSet{})) return false;
      if (len == 0 && !semicontinuous(e, lower, PointSet{})) return false;
      for (const auto& q : excl.pts) {
        if (q == Point::ones()) continue;
        size_t n = 0;
        while (q.bit_at(n) == 1) ++n;
        std::string pre(n, '1');
        pre.push_back('0');
        if (!semicontinuous(stack_copy(*st, n), lower, excl.translated(pre)))
          return false;
      }
    }
    if (excl.contains(Point::ones())) return true;
    return value_ok(st->v, local_values(e, Point::ones()));
  }
  if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node))
    throw unsupported_error("semicontinuity of sum/prod is not supported");
  const auto& cn = std::get<CanonE>(e->node);
  return semicontinuous(canon_expand(cn.rank, cn.side), lower, excl);
}

}  // namespace

bool is_lsc(const ExprPtr& e) { return semicontinuous(e, true, PointSet{}); }

bool is_usc(const ExprPtr& e) { return semicontinuous(e, false, PointSet{}); }

namespace {

void format_into(const ExprPtr& e, std::string& out) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    out += "const " + c->v.str();
    return;
  }
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    out += "affine(" + a->a.str() + ", " + a->b.str() + ", ";
    format_into(a->f, out);
    out += ")";
    return;
  }
  if (const auto* g = std::get_if<GlueE>(&e->node)) {
    out += "glue(";
    format_into(g->f0, out);
    out += ", ";
    format_into(g->f1, out);
    out += ")";
    return;
  }
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    out += "spike(";
    format_into(s->f, out);
    out += ", " + s->z.str() + ", " + s->v.str() + ")";
    return;
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    out += "stack(";
    if (const auto* cy = std::get_if<CycleSeq>(&st->seq)) {
      out += "cycle[";
      for (size_t i = 0; i < cy->items.size(); ++i) {
        if (i) out += ", ";
        format_into(cy->items[i], out);
      }
      out += "]";
    } else {
      const auto& fu = std::get<FundSeq>(st->seq);
      out += "fund(" + fu.limit.str() + ", " + sidedness_str(fu.side) + ")";
    }
    out += ", " + st->v.str() + ")";
    return;
  }
  if (const auto* s = std::get_if<SumE>(&e->node)) {
    out += "sum(";
    format_into(s->f, out);
    out += ", ";
    format_into(s->g, out);
    out += ")";
    return;
  }
  if (const auto* p = std::get_if<ProdE>(&e->node)) {
    out += "prod(";
    format_into(p->f, out);
    out += ", ";
    format_into(p->g, out);
    out += ")";
    return;
  }
  const auto& cn = std::get<CanonE>(e->node);
  out += "canon(" + cn.rank.str() + ", " + sidedness_str(cn.side) + ")";
}

}  // namespace

std::string format_expr(const ExprPtr& e) {
  std::string out;
  format_into(e, out);
  return out;
}

uint64_t expr_hash(const ExprPtr& e) {
  // FNV-1a over the canonical text
  uint64_t h = 1469598103934665603ull;
  for (char c : format_expr(e)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace baire
