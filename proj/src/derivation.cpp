#include "baire/derivation.hpp"

#include <algorithm>

#include "baire/brute.hpp"

namespace baire {

Region region_of(const Rat& y, const Pair& pr) {
  if (y <= pr.p - pr.eps) return Region::low;
  if (y >= pr.p + pr.eps) return Region::high;
  return Region::mid;
}

RegionMask mask_at(const MaskSeg& m, const Ordinal& mu) {
  RegionMask r = 0;
  for (const auto& [k, v] : m) {
    if (cmp(k, mu) == Order::greater) break;
    r = v;
  }
  return r;
}

Ordinal first_empty(const MaskSeg& m) { return first_subset(m, 0); }

Ordinal first_subset(const MaskSeg& m, RegionMask allowed) {
  for (const auto& [k, v] : m)
    if ((v & ~allowed) == 0) return k;
  throw error("mask step function does not terminate");
}

namespace {

Pair affine_pre(const AffineE& a, const Pair& pr) {
  Rat p2 = (pr.p - a.b) / a.a;
  Rat e2 = pr.eps / a.a;
  if (e2 < Rat(0)) e2 = -e2;
  return Pair{p2, e2};
}

RegionMask flip_mask(RegionMask m) {
  RegionMask r = m & kMidBit;
  if (m & kLowBit) r |= kHighBit;
  if (m & kHighBit) r |= kLowBit;
  return r;
}

Region flip_region(Region r) {
  if (r == Region::low) return Region::high;
  if (r == Region::high) return Region::low;
  return Region::mid;
}

MaskSeg normalize(MaskSeg s) {
  MaskSeg out;
  for (auto& kv : s) {
    if (!out.empty() && cmp(out.back().first, kv.first) == Order::equal) {
      out.back().second = kv.second;
      if (out.size() >= 2 && out[out.size() - 2].second == kv.second)
        out.pop_back();
      continue;
    }
    if (!out.empty() && out.back().second == kv.second) continue;
    out.push_back(kv);
  }
  return out;
}

MaskSeg merge_or(const MaskSeg& x, const MaskSeg& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  std::vector<Ordinal> keys;
  for (const auto& kv : x) keys.push_back(kv.first);
  for (const auto& kv : y) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(),
            [](const Ordinal& a, const Ordinal& b) { return a < b; });
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const Ordinal& a, const Ordinal& b) { return a == b; }),
             keys.end());
  MaskSeg out;
  for (const auto& k : keys) out.push_back({k, mask_at(x, k) | mask_at(y, k)});
  return normalize(std::move(out));
}

// An isolated point with the given region, surviving on [0, until).
MaskSeg atom_seg(Region r, const Ordinal& until) {
  return {{Ordinal(), region_bit(r)}, {until, 0}};
}

MaskSeg clip_at(const MaskSeg& m, const Ordinal& at) {
  MaskSeg out;
  for (const auto& kv : m) {
    if (cmp(kv.first, at) != Order::less) break;
    out.push_back(kv);
  }
  out.push_back({at, 0});
  return normalize(std::move(out));
}

MaskSeg flip_seg(MaskSeg m) {
  for (auto& kv : m) kv.second = flip_mask(kv.second);
  return m;
}

std::string pair_key(const Pair& pr) { return pr.p.str() + ";" + pr.eps.str(); }

std::string excl_key(const PointSet& excl) {
  std::vector<std::string> v;
  for (const auto& q : excl.pts) v.push_back(q.str());
  std::sort(v.begin(), v.end());
  std::string out;
  for (auto& s : v) out += s + ",";
  return out;
}

size_t leading_ones(const std::string& s) {
  size_t a = 0;
  while (a < s.size() && s[a] == '1') ++a;
  return a;
}

bool fund_master_pattern(const Pair& pr) {
  return region_of(Rat(0), pr) == Region::low &&
         region_of(Rat(1), pr) == Region::high;
}

RegionMask fund_flat_mask(const Pair& pr) {
  return region_bit(region_of(Rat(0), pr)) | region_bit(region_of(Rat(1), pr));
}

bool cylinder_free_of(const std::string& pre, const PointSet& excl) {
  for (const auto& q : excl.pts)
    if (q.in_cylinder(pre)) return false;
  return true;
}

std::string stack_text(const StackE& st) {
  return format_expr(std::make_shared<const Expr>(Expr{st}));
}

}  // namespace

MaskSeg Deriver::cyl_mask(const ExprPtr& e, const Pair& pr,
                          const std::string& sigma, const PointSet& excl) {
  std::string key = "C|" + format_expr(e) + "|" + pair_key(pr) + "|" + sigma +
                    "|" + excl_key(excl);
  if (auto it = mask_memo_.find(key); it != mask_memo_.end()) return it->second;
  MaskSeg out;

  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    out = atom_seg(region_of(c->v, pr), Ordinal(1));
  } else if (const auto* a = std::get_if<AffineE>(&e->node)) {
    out = cyl_mask(a->f, affine_pre(*a, pr), sigma, excl);
    if (a->a < Rat(0)) out = flip_seg(std::move(out));
  } else if (const auto* g = std::get_if<GlueE>(&e->node)) {
    if (!sigma.empty()) {
      const ExprPtr& half = sigma[0] == '0' ? g->f0 : g->f1;
      out = cyl_mask(half, pr, sigma.substr(1),
                     excl.translated(sigma.substr(0, 1)));
    } else {
      out = merge_or(cyl_mask(g->f0, pr, "", excl.translated("0")),
                     cyl_mask(g->f1, pr, "", excl.translated("1")));
    }
  } else if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    if (!s->z.in_cylinder(sigma) || excl.contains(s->z)) {
      out = cyl_mask(s->f, pr, sigma, excl);
    } else {
      MaskSeg punct = cyl_mask(s->f, pr, sigma, excl.with(s->z));
      Region rv = region_of(s->v, pr);
      Ordinal t = spike_exit(s->f, pr, s->z, rv);
      out = merge_or(punct, atom_seg(rv, successor(t)));
    }
  } else if (const auto* st = std::get_if<StackE>(&e->node)) {
    size_t a = leading_ones(sigma);
    if (a < sigma.size()) {
      out = cyl_mask(stack_copy(*st, a), pr, sigma.substr(a + 1),
                     excl.translated(sigma.substr(0, a + 1)));
    } else {
      MaskSeg uni;
      if (size_t len = cycle_len(*st); len > 0) {
        for (size_t j = 0; j < len; ++j)
          uni = merge_or(uni, cyl_mask(stack_copy(*st, j), pr, "", PointSet{}));
      } else {
        const auto& fu = std::get<FundSeq>(st->seq);
        if (fund_master_pattern(pr)) {
          uni = {{Ordinal(), kLowBit | kHighBit}, {fu.limit, 0}};
        } else {
          uni = {{Ordinal(), fund_flat_mask(pr)}, {Ordinal(1), 0}};
        }
      }
      if (!excl.contains(Point::ones())) {
        Ordinal t = stack_limit_exit(*st, pr);
        uni = merge_or(uni, atom_seg(region_of(st->v, pr), successor(t)));
      }
      out = std::move(uni);
    }
  } else if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node)) {
    throw unsupported_error("symbolic derivation of sum/prod is not supported");
  } else {
    const auto& cn = std::get<CanonE>(e->node);
    MaskSeg inner = cyl_mask(canon_expand(cn.rank, cn.side), pr, sigma, excl);
    out = (declared_ && cn.rank.is_limit()) ? clip_at(inner, cn.rank)
                                            : std::move(inner);
  }

  out = normalize(std::move(out));
  mask_memo_[key] = out;
  return out;
}

MaskSeg Deriver::local_mask(const ExprPtr& e, const Pair& pr, const Point& z) {
  std::string key = "L|" + format_expr(e) + "|" + pair_key(pr) + "|" + z.str();
  if (auto it = mask_memo_.find(key); it != mask_memo_.end()) return it->second;
  MaskSeg out;

  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    out = atom_seg(region_of(c->v, pr), Ordinal(1));
  } else if (const auto* a = std::get_if<AffineE>(&e->node)) {
    out = local_mask(a->f, affine_pre(*a, pr), z);
    if (a->a < Rat(0)) out = flip_seg(std::move(out));
  } else if (const auto* g = std::get_if<GlueE>(&e->node)) {
    out = local_mask(z.bit_at(0) == 0 ? g->f0 : g->f1, pr, z.drop(1));
  } else if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    // z's own puncture is implicit; any other spike point eventually falls
    // outside shrinking neighborhoods of z.
    out = local_mask(s->f, pr, z);
  } else if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (z == Point::ones()) {
      if (size_t len = cycle_len(*st); len > 0) {
        for (size_t j = 0; j < len; ++j)
          out = merge_or(out, cyl_mask(stack_copy(*st, j), pr, "", PointSet{}));
      } else {
        const auto& fu = std::get<FundSeq>(st->seq);
        if (fund_master_pattern(pr)) {
          out = {{Ordinal(), kLowBit | kHighBit}, {fu.limit, 0}};
        } else {
          out = {{Ordinal(), fund_flat_mask(pr)}, {Ordinal(1), 0}};
        }
      }
    } else {
      size_t a = 0;
      while (z.bit_at(a) == 1) ++a;
      out = local_mask(stack_copy(*st, a), pr, z.drop(a + 1));
    }
  } else if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node)) {
    throw unsupported_error("symbolic derivation of sum/prod is not supported");
  } else {
    const auto& cn = std::get<CanonE>(e->node);
    MaskSeg inner = local_mask(canon_expand(cn.rank, cn.side), pr, z);
    out = (declared_ && cn.rank.is_limit()) ? clip_at(inner, cn.rank)
                                            : std::move(inner);
  }

  out = normalize(std::move(out));
  mask_memo_[key] = out;
  return out;
}

Ordinal Deriver::spike_exit(const ExprPtr& child, const Pair& pr, const Point& z,
                            Region rv) {
  MaskSeg lm = local_mask(child, pr, z);
  for (const auto& [k, m] : lm)
    for (int i = 0; i < 2; ++i)
      if (region_in_set(rv, i) && (m & ~set_mask(i)) == 0) return k;
  throw error("spike exit stage not found");
}

Ordinal Deriver::stack_limit_exit(const StackE& st, const Pair& pr) {
  std::string key = "X|" + stack_text(st) + "|" + pair_key(pr);
  if (auto it = ord_memo_.find(key); it != ord_memo_.end()) return it->second;

  Region rv = region_of(st.v, pr);
  bool have = false;
  Ordinal best;
  size_t len = cycle_len(st);
  for (int i = 0; i < 2; ++i) {
    if (!region_in_set(rv, i)) continue;
    Ordinal thr;
    if (len > 0) {
      // The limit point leaves once every cycle class is inside C_i.
      for (size_t j = 0; j < len; ++j) {
        Ordinal t =
            first_subset(cyl_mask(stack_copy(st, j), pr, "", PointSet{}),
                         set_mask(i));
        if (j == 0 || cmp(t, thr) == Order::greater) thr = t;
      }
    } else {
      const auto& fu = std::get<FundSeq>(st.seq);
      if (fund_master_pattern(pr)) {
        thr = fu.limit;  // copy exit stages are cofinal in the limit
      } else {
        thr = (fund_flat_mask(pr) & ~set_mask(i)) == 0 ? Ordinal() : Ordinal(1);
      }
    }
    if (!have || cmp(thr, best) == Order::less) {
      best = thr;
      have = true;
    }
  }
  if (!have) throw error("stack limit value fits no side");
  ord_memo_[key] = best;
  return best;
}

Ordinal Deriver::point_exit(const ExprPtr& e, const Pair& pr, const Point& x) {
  std::string key = "P|" + format_expr(e) + "|" + pair_key(pr) + "|" + x.str();
  if (auto it = ord_memo_.find(key); it != ord_memo_.end()) return it->second;
  Ordinal out;
  if (std::get_if<ConstE>(&e->node)) {
    out = Ordinal(1);
  } else if (const auto* a = std::get_if<AffineE>(&e->node)) {
    out = point_exit(a->f, affine_pre(*a, pr), x);
  } else if (const auto* g = std::get_if<GlueE>(&e->node)) {
    out = point_exit(x.bit_at(0) == 0 ? g->f0 : g->f1, pr, x.drop(1));
  } else if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    out = x == s->z
              ? successor(spike_exit(s->f, pr, s->z, region_of(s->v, pr)))
              : point_exit(s->f, pr, x);
  } else if (const auto* st = std::get_if<StackE>(&e->node)) {
    if (x == Point::ones()) {
      out = successor(stack_limit_exit(*st, pr));
    } else {
      size_t a = 0;
      while (x.bit_at(a) == 1) ++a;
      out = point_exit(stack_copy(*st, a), pr, x.drop(a + 1));
    }
  } else if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node)) {
    throw unsupported_error("symbolic point rank of sum/prod is not supported");
  } else {
    const auto& cn = std::get<CanonE>(e->node);
    out = point_exit(canon_expand(cn.rank, cn.side), pr, x);
  }
  ord_memo_[key] = out;
  return out;
}

std::optional<Point> Deriver::find_witness(const ExprPtr& e, const Pair& pr,
                                           const std::string& sigma,
                                           const PointSet& excl, Region r,
                                           const Ordinal& mu) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    if (region_of(c->v, pr) == r && cmp(mu, Ordinal(1)) == Order::less)
      return pick_point_in(sigma, excl);
    return std::nullopt;
  }
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    Region r2 = a->a < Rat(0) ? flip_region(r) : r;
    return find_witness(a->f, affine_pre(*a, pr), sigma, excl, r2, mu);
  }
  if (const auto* g = std::get_if<GlueE>(&e->node)) {
    if (!sigma.empty()) {
      const ExprPtr& half = sigma[0] == '0' ? g->f0 : g->f1;
      auto sub = find_witness(half, pr, sigma.substr(1),
                              excl.translated(sigma.substr(0, 1)), r, mu);
      if (sub) return sub->prepend(sigma.substr(0, 1));
      return std::nullopt;
    }
    if (auto sub = find_witness(g->f0, pr, "", excl.translated("0"), r, mu))
      return sub->prepend("0");
    if (auto sub = find_witness(g->f1, pr, "", excl.translated("1"), r, mu))
      return sub->prepend("1");
    return std::nullopt;
  }
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    if (!s->z.in_cylinder(sigma) || excl.contains(s->z))
      return find_witness(s->f, pr, sigma, excl, r, mu);
    Region rv = region_of(s->v, pr);
    if (rv == r) {
      Ordinal t = spike_exit(s->f, pr, s->z, rv);
      if (cmp(mu, t) != Order::greater) return s->z;
    }
    return find_witness(s->f, pr, sigma, excl.with(s->z), r, mu);
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    size_t a = leading_ones(sigma);
    if (a < sigma.size()) {
      std::string pre = sigma.substr(0, a + 1);
      auto sub = find_witness(stack_copy(*st, a), pr, sigma.substr(a + 1),
                              excl.translated(pre), r, mu);
      if (sub) return sub->prepend(pre);
      return std::nullopt;
    }
    if (region_of(st->v, pr) == r && !excl.contains(Point::ones()) &&
        cmp(mu, stack_limit_exit(*st, pr)) != Order::greater)
      return Point::ones();
    if (size_t len = cycle_len(*st); len > 0) {
      for (size_t j = 0; j < len; ++j) {
        unsigned long long n = a + ((j + len - a % len) % len);
        std::string pre(static_cast<size_t>(n), '1');
        pre.push_back('0');
        while (!cylinder_free_of(pre, excl)) {
          n += len;
          pre = std::string(static_cast<size_t>(n), '1');
          pre.push_back('0');
        }
        auto sub =
            find_witness(stack_copy(*st, n), pr, "", PointSet{}, r, mu);
        if (sub) return sub->prepend(pre);
      }
      return std::nullopt;
    }
    const auto& fu = std::get<FundSeq>(st->seq);
    if (cmp(mu, fu.limit) != Order::less) return std::nullopt;
    unsigned long long n = a;
    while (true) {
      std::string pre(static_cast<size_t>(n), '1');
      pre.push_back('0');
      if (cylinder_free_of(pre, excl)) {
        auto sub = find_witness(stack_copy(*st, n), pr, "", PointSet{}, r, mu);
        if (sub) return sub->prepend(pre);
        // Copies deeper in the sequence only grow their residues; once a copy
        // outlasting stage mu lacks the region, all of them do.
        Ordinal s_n = successor(fund_seq(fu.limit, n));
        if (cmp(mu, pred(s_n)) == Order::less) return std::nullopt;
      }
      ++n;
      if (n > a + 4096) throw error("fund witness search overran");
    }
  }
  if (std::get_if<SumE>(&e->node) || std::get_if<ProdE>(&e->node))
    throw unsupported_error("witness search for sum/prod is not supported");
  const auto& cn = std::get<CanonE>(e->node);
  return find_witness(canon_expand(cn.rank, cn.side), pr, sigma, excl, r, mu);
}

Deriver::CylExit Deriver::cyl_exit(const ExprPtr& e, const Pair& pr,
                                   const std::string& sigma) {
  MaskSeg m = cyl_mask(e, pr, sigma, PointSet{});
  for (const auto& [k, v] : m) {
    if ((v & kHighBit) == 0) return {k, 0};
    if ((v & kLowBit) == 0) return {k, 1};
  }
  throw error("cylinder never becomes one-sided");
}

Profile Deriver::profile(const ExprPtr& e, const Pair& pr) {
  MaskSeg m = cyl_mask(e, pr, "", PointSet{});
  Profile out;
  out.pair = pr;
  out.alpha = first_empty(m);
  out.mu_low = first_subset(m, kLowBit | kMidBit);
  out.mu_high = first_subset(m, kMidBit | kHighBit);
  RegionMask last = 0;
  for (const auto& [k, v] : m) {
    if (v == 0) break;
    last = v;
  }
  out.last_sides = last;
  return out;
}

Deriver& declared_deriver() {
  thread_local Deriver d(true);
  return d;
}

Deriver& honest_deriver() {
  thread_local Deriver d(false);
  return d;
}

namespace {

void check_derivable(const ExprPtr& e, const Pair& pr) {
  if (!(pr.eps > Rat(0))) throw precondition_error("eps must be positive");
  if (has_sum_or_prod(e))
    throw unsupported_error("sum/prod expressions are brute-only");
}

Ordinal rank_via(Deriver& d, const ExprPtr& e) {
  if (has_sum_or_prod(e)) {
    // Delegate to the brute oracle; exactness is required.
    std::vector<Pair> pairs = critical_pairs(e);
    Ordinal best(1);
    for (const auto& pr : pairs) {
      auto [a, exact] = brute_alpha(e, pr, default_brute_depth(e));
      if (!exact)
        throw unsupported_error("brute rank of this expression is inexact");
      if (cmp(a, best) == Order::greater) best = a;
    }
    return best;
  }
  std::vector<Pair> pairs = critical_pairs(e);
  Ordinal best(1);
  for (const auto& pr : pairs) {
    Ordinal a = d.profile(e, pr).alpha;
    if (cmp(a, best) == Order::greater) best = a;
  }
  return best;
}

struct PairFact {
  Pair pr;
  Ordinal alpha;
  RegionMask last;
};

std::vector<PairFact> pair_facts(Deriver& d, const ExprPtr& e) {
  std::vector<PairFact> out;
  if (has_sum_or_prod(e)) {
    for (const auto& pr : critical_pairs(e)) {
      ResidueApprox ra = brute_derive(e, pr, default_brute_depth(e));
      if (!ra.exact)
        throw unsupported_error("brute classification of this expression is inexact");
      out.push_back({pr, Ordinal(ra.stages.size() - 1), ra.last_mask});
    }
    return out;
  }
  for (const auto& pr : critical_pairs(e)) {
    Profile p = d.profile(e, pr);
    out.push_back({pr, p.alpha, p.last_sides});
  }
  return out;
}

Sidedness classify_via(Deriver& d, const ExprPtr& e) {
  Ordinal rank = rank_via(d, e);
  if (rank == Ordinal(1)) return Sidedness::continuous;
  if (rank.is_limit()) return Sidedness::limit;
  bool any_max = false, all_no_high = true, all_no_low = true;
  for (const auto& pf : pair_facts(d, e)) {
    if (!(pf.alpha == rank)) continue;
    if ((pf.last & (kLowBit | kHighBit)) == 0) continue;
    any_max = true;
    if ((pf.last & kLowBit) && (pf.last & kHighBit)) return Sidedness::two;
    if (pf.last & kHighBit) all_no_high = false;
    if (pf.last & kLowBit) all_no_low = false;
  }
  if (!any_max) throw error("no maximal pair found for a successor rank");
  if (all_no_high) return Sidedness::left;
  if (all_no_low) return Sidedness::right;
  return Sidedness::one_neither;
}

}  // namespace

Profile derive_profile(const ExprPtr& e, const Pair& pr) {
  check_derivable(e, pr);
  return declared_deriver().profile(e, pr);
}

Ordinal alpha_rank(const ExprPtr& e) { return rank_via(declared_deriver(), e); }

Ordinal point_rank(const ExprPtr& e, const Pair& pr, const Point& x) {
  check_derivable(e, pr);
  return honest_deriver().point_exit(e, pr, x);
}

std::vector<Pair> maximal_pairs(const ExprPtr& e) {
  Ordinal rank = alpha_rank(e);
  if (!rank.is_successor())
    throw precondition_error("maximal pairs require a successor rank");
  std::vector<Pair> out;
  for (const auto& pf : pair_facts(declared_deriver(), e))
    if (pf.alpha == rank && (pf.last & (kLowBit | kHighBit)) != 0)
      out.push_back(pf.pr);
  return out;
}

Sidedness classify(const ExprPtr& e) {
  return classify_via(declared_deriver(), e);
}

Profile honest_profile(const ExprPtr& e, const Pair& pr) {
  check_derivable(e, pr);
  return honest_deriver().profile(e, pr);
}

Ordinal honest_alpha_rank(const ExprPtr& e) {
  return rank_via(honest_deriver(), e);
}

Sidedness honest_classify(const ExprPtr& e) {
  return classify_via(honest_deriver(), e);
}

}  // namespace baire
