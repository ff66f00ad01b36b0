#include "baire/brute.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace baire {

namespace {

void collect_specials(const ExprPtr& e, const std::string& prefix, size_t depth,
                      std::vector<Point>& out) {
  if (prefix.size() > depth + 2) return;
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    collect_specials(a->f, prefix, depth, out);
  } else if (const auto* g = std::get_if<GlueE>(&e->node)) {
    collect_specials(g->f0, prefix + "0", depth, out);
    collect_specials(g->f1, prefix + "1", depth, out);
  } else if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    out.push_back(s->z.prepend(prefix));
    collect_specials(s->f, prefix, depth, out);
  } else if (const auto* st = std::get_if<StackE>(&e->node)) {
    out.push_back(Point::ones().prepend(prefix));
    for (size_t n = 0; prefix.size() + n + 1 <= depth + 1; ++n) {
      std::string pre = prefix + std::string(n, '1') + "0";
      collect_specials(stack_copy(*st, n), pre, depth, out);
    }
  } else if (const auto* s = std::get_if<SumE>(&e->node)) {
    collect_specials(s->f, prefix, depth, out);
    collect_specials(s->g, prefix, depth, out);
  } else if (const auto* p = std::get_if<ProdE>(&e->node)) {
    collect_specials(p->f, prefix, depth, out);
    collect_specials(p->g, prefix, depth, out);
  } else if (const auto* cn = std::get_if<CanonE>(&e->node)) {
    collect_specials(canon_expand(cn->rank, cn->side), prefix, depth, out);
  }
}

// Structural range of f restricted to [w]; exact=false when the word runs out
// before the expression is resolved (deep glue trees or unbounded stacks).
void restrict_values(const ExprPtr& e, const std::string& w, std::set<Rat>& out,
                     bool& exact) {
  if (const auto* c = std::get_if<ConstE>(&e->node)) {
    out.insert(c->v);
    return;
  }
  if (const auto* a = std::get_if<AffineE>(&e->node)) {
    std::set<Rat> sub;
    restrict_values(a->f, w, sub, exact);
    for (const auto& v : sub) out.insert(a->a * v + a->b);
    return;
  }
  if (const auto* g = std::get_if<GlueE>(&e->node)) {
    if (w.empty()) {
      exact = false;
      restrict_values(g->f0, "", out, exact);
      restrict_values(g->f1, "", out, exact);
      return;
    }
    restrict_values(w[0] == '0' ? g->f0 : g->f1, w.substr(1), out, exact);
    return;
  }
  if (const auto* s = std::get_if<SpikeE>(&e->node)) {
    restrict_values(s->f, w, out, exact);  // spike values are tracked separately
    return;
  }
  if (const auto* st = std::get_if<StackE>(&e->node)) {
    size_t a = 0;
    while (a < w.size() && w[a] == '1') ++a;
    if (a < w.size()) {
      restrict_values(stack_copy(*st, a), w.substr(a + 1), out, exact);
      return;
    }
    // The all-ones face: copies beyond the horizon plus the limit value. Full
    // copy ranges keep untracked spike values visible.
    exact = false;
    out.insert(st->v);
    size_t len = cycle_len(*st);
    size_t reps = len > 0 ? len : 2;
    for (size_t j = 0; j < reps; ++j) {
      RangeInfo ri = range_of(stack_copy(*st, a + j));
      out.insert(ri.values.begin(), ri.values.end());
    }
    return;
  }
  if (const auto* s = std::get_if<SumE>(&e->node)) {
    std::set<Rat> rf, rg;
    restrict_values(s->f, w, rf, exact);
    restrict_values(s->g, w, rg, exact);
    for (const auto& u : rf)
      for (const auto& v : rg) out.insert(u + v);
    return;
  }
  if (const auto* p = std::get_if<ProdE>(&e->node)) {
    std::set<Rat> rf, rg;
    restrict_values(p->f, w, rf, exact);
    restrict_values(p->g, w, rg, exact);
    for (const auto& u : rf)
      for (const auto& v : rg) out.insert(u * v);
    return;
  }
  const auto& cn = std::get<CanonE>(e->node);
  restrict_values(canon_expand(cn.rank, cn.side), w, out, exact);
}

RegionMask regions_of_values(const std::set<Rat>& vals, const Pair& pr) {
  RegionMask m = 0;
  for (const auto& v : vals) m |= region_bit(region_of(v, pr));
  return m;
}

// The brute state shared by brute_derive and check_L1.
struct BruteWorld {
  size_t depth;
  std::vector<std::string> words;            // all depth-d cylinders
  std::vector<Point> specials;               // tracked points, deduped
  std::vector<bool> bulk_alive, spec_alive;  // current residue
  bool values_exact = true;

  // Per tracked function: bulk masks per word, value region per special.
  struct FnView {
    std::vector<RegionMask> bulk_mask;
    std::vector<Region> spec_region;
  };
  std::vector<FnView> fns;

  BruteWorld(std::vector<ExprPtr> exprs, std::vector<Pair> prs, size_t d)
      : depth(d) {
    for (size_t i = 0; i < (size_t{1} << depth); ++i) {
      std::string w;
      for (size_t b = 0; b < depth; ++b)
        w.push_back(((i >> (depth - 1 - b)) & 1) ? '1' : '0');
      words.push_back(w);
    }
    std::vector<Point> sp;
    for (const auto& e : exprs) collect_specials(e, "", depth, sp);
    std::sort(sp.begin(), sp.end());
    sp.erase(std::unique(sp.begin(), sp.end()), sp.end());
    specials = sp;
    bulk_alive.assign(words.size(), true);
    spec_alive.assign(specials.size(), true);
    for (size_t fi = 0; fi < exprs.size(); ++fi) {
      FnView v;
      for (const auto& w : words) {
        std::set<Rat> vals;
        bool ex = true;
        restrict_values(exprs[fi], w, vals, ex);
        if (!ex) values_exact = false;
        v.bulk_mask.push_back(regions_of_values(vals, prs[fi]));
      }
      for (const auto& z : specials)
        v.spec_region.push_back(region_of(eval(exprs[fi], z), prs[fi]));
      fns.push_back(std::move(v));
    }
  }

  size_t word_index(const std::string& w) const {
    size_t i = 0;
    for (char c : w) i = (i << 1) | (c == '1' ? 1 : 0);
    return i;
  }

  bool empty() const {
    for (bool b : bulk_alive)
      if (b) return false;
    for (bool b : spec_alive)
      if (b) return false;
    return true;
  }

  // Punctured neighborhood regions of special z under function fi: the bulk of
  // z's own depth-d cylinder (bulk values exclude all tracked points).
  RegionMask local_regions(size_t fi, size_t zi) const {
    size_t wi = word_index(specials[zi].prefix(depth));
    return bulk_alive[wi] ? fns[fi].bulk_mask[wi] : 0;
  }

  template <typename RemovableBulk, typename RemovableSpec>
  bool step(RemovableBulk rb, RemovableSpec rs) {
    std::vector<size_t> kill_b, kill_s;
    for (size_t i = 0; i < words.size(); ++i)
      if (bulk_alive[i] && rb(i)) kill_b.push_back(i);
    for (size_t i = 0; i < specials.size(); ++i)
      if (spec_alive[i] && rs(i)) kill_s.push_back(i);
    if (kill_b.empty() && kill_s.empty()) return false;
    for (size_t i : kill_b) bulk_alive[i] = false;
    for (size_t i : kill_s) spec_alive[i] = false;
    return true;
  }

  BruteStage snapshot() const {
    BruteStage st;
    for (size_t i = 0; i < words.size(); ++i)
      if (bulk_alive[i]) st.cylinders.push_back(words[i]);
    for (size_t i = 0; i < specials.size(); ++i)
      if (spec_alive[i]) st.specials.push_back(specials[i]);
    return st;
  }

  RegionMask live_mask(size_t fi) const {
    RegionMask m = 0;
    for (size_t i = 0; i < words.size(); ++i)
      if (bulk_alive[i]) m |= fns[fi].bulk_mask[i];
    for (size_t i = 0; i < specials.size(); ++i)
      if (spec_alive[i]) m |= region_bit(fns[fi].spec_region[i]);
    return m;
  }
};

bool one_sided(RegionMask m) {
  return (m & ~set_mask(0)) == 0 || (m & ~set_mask(1)) == 0;
}

}  // namespace

ResidueApprox brute_derive(const ExprPtr& f, const Pair& pr, size_t depth) {
  if (!(pr.eps > Rat(0))) throw precondition_error("eps must be positive");
  if (depth < 1) throw precondition_error("depth must be >= 1");
  BruteWorld w({f}, {pr}, depth);
  ResidueApprox ra;
  ra.depth = depth;
  ra.stages.push_back(w.snapshot());
  RegionMask prev_mask = w.live_mask(0);
  // Each pass removes one-sided bulks and specials whose value joins the
  // one-sided punctured neighborhood; guard bound is generous.
  for (size_t guard = 0; guard < (size_t{2} << depth) + 16; ++guard) {
    bool changed = w.step(
        [&](size_t i) { return one_sided(w.fns[0].bulk_mask[i]); },
        [&](size_t i) {
          RegionMask m =
              w.local_regions(0, i) | region_bit(w.fns[0].spec_region[i]);
          return one_sided(m);
        });
    if (!changed) break;
    ra.stages.push_back(w.snapshot());
    RegionMask cur = w.live_mask(0);
    if (cur != 0) prev_mask = cur;
  }
  ra.settled = w.empty();
  ra.last_mask = prev_mask;
  ra.exact = ra.settled && w.values_exact && !has_stack(f) &&
             max_spike_word(f) < depth;
  return ra;
}

std::pair<Ordinal, bool> brute_alpha(const ExprPtr& f, const Pair& pr,
                                     size_t depth) {
  ResidueApprox ra = brute_derive(f, pr, depth);
  return {Ordinal(ra.stages.size() - 1), ra.exact};
}

size_t default_brute_depth(const ExprPtr& f) {
  size_t d = structural_depth(f) + 4;
  return std::min<size_t>(d, 14);
}

L1Result check_L1(const ExprPtr& f, const Pair& prf, const ExprPtr& g,
                  const Pair& prg, size_t depth) {
  if (has_stack(f) || has_stack(g))
    throw precondition_error("check_L1 requires stack-free expressions");
  // Three derivations over one shared atom algebra: the f-family, the
  // g-family, and the family of pairwise intersections.
  BruteWorld wc({f, g}, {prf, prg}, depth);
  BruteWorld wd = wc;
  BruteWorld wq = wc;

  auto run = [&](BruteWorld& w, int mode) {
    std::vector<std::pair<std::vector<bool>, std::vector<bool>>> hist;
    hist.push_back({w.bulk_alive, w.spec_alive});
    for (size_t guard = 0; guard < (size_t{2} << depth) + 16; ++guard) {
      auto bulk_ok = [&](size_t i, int fi) {
        return one_sided(w.fns[fi].bulk_mask[i]);
      };
      auto spec_ok = [&](size_t i, int fi) {
        return one_sided(w.local_regions(fi, i) |
                         region_bit(w.fns[fi].spec_region[i]));
      };
      bool changed = w.step(
          [&](size_t i) {
            if (mode == 0) return bulk_ok(i, 0);
            if (mode == 1) return bulk_ok(i, 1);
            return bulk_ok(i, 0) && bulk_ok(i, 1);
          },
          [&](size_t i) {
            if (mode == 0) return spec_ok(i, 0);
            if (mode == 1) return spec_ok(i, 1);
            return spec_ok(i, 0) && spec_ok(i, 1);
          });
      if (!changed) break;
      hist.push_back({w.bulk_alive, w.spec_alive});
    }
    return hist;
  };

  auto hc = run(wc, 0);
  auto hd = run(wd, 1);
  auto hq = run(wq, 2);

  auto alive_at = [](const auto& hist, size_t stage, bool bulk, size_t i) {
    const auto& snap = stage < hist.size() ? hist[stage] : hist.back();
    return bulk ? snap.first[i] : snap.second[i];
  };

  L1Result res;
  for (size_t nu = 0; nu < hc.size(); ++nu) {
    for (size_t mu = 0; mu < hd.size(); ++mu) {
      size_t s = nu + mu;  // natural sum of finite ordinals
      for (size_t i = 0; i < wc.words.size(); ++i) {
        if (alive_at(hq, s, true, i) && !alive_at(hc, nu, true, i) &&
            !alive_at(hd, mu, true, i)) {
          res.ok = false;
          res.counterexample = "cylinder " + wc.words[i] + " at (" +
                               std::to_string(nu) + "," + std::to_string(mu) +
                               ")";
          return res;
        }
      }
      for (size_t i = 0; i < wc.specials.size(); ++i) {
        if (alive_at(hq, s, false, i) && !alive_at(hc, nu, false, i) &&
            !alive_at(hd, mu, false, i)) {
          res.ok = false;
          res.counterexample = "point " + wc.specials[i].str() + " at (" +
                               std::to_string(nu) + "," + std::to_string(mu) +
                               ")";
          return res;
        }
      }
    }
  }
  return res;
}

std::string residue_trace_jsonl(const ResidueApprox& ra) {
  std::string out;
  for (const auto& st : ra.stages) {
    nlohmann::json j;
    j["cylinders"] = st.cylinders;
    std::vector<std::string> sp;
    for (const auto& p : st.specials) sp.push_back(p.str());
    j["points"] = sp;
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace baire
