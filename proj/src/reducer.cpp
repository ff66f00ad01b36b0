#include "baire/reducer.hpp"

#include <algorithm>

#include "baire/degrees.hpp"
#include "baire/sepname.hpp"
#include "json.hpp"

namespace baire {

namespace {

// Strict-side-c witness (c = 0: value at or below q - delta; c = 1: at or
// above q + delta) inside P^mu cap [sigma].
std::optional<Point> side_witness(const ScaffoldOracle& sc, const Ordinal& mu,
                                  const std::string& sigma, int c) {
  return sc.query(mu, sigma, 1 - c);
}

struct MaxPair {
  Pair pr;
  RegionMask last;
};

std::vector<MaxPair> honest_max_pairs(const ExprPtr& g) {
  Deriver& d = honest_deriver();
  Ordinal rank = honest_alpha_rank(g);
  std::vector<MaxPair> out;
  for (const auto& pr : critical_pairs(g)) {
    Profile p = d.profile(g, pr);
    if (p.alpha == rank && (p.last_sides & (kLowBit | kHighBit)) != 0)
      out.push_back({pr, p.last_sides});
  }
  if (out.empty()) throw error("target has no maximal pair");
  return out;
}

// Per-run view of the subject's mind-change feed.
struct Feed {
  Deriver& d;
  const ExprPtr& f;
  Pair pr;
  const Point& a;
  Ordinal floor;  // |a| - 1: the feed's eventual bound

  Feed(const ExprPtr& f_, const Pair& pr_, const Point& a_)
      : d(honest_deriver()), f(f_), pr(pr_), a(a_) {
    floor = pred(d.point_exit(f, pr, a));
  }
  Deriver::CylExit at(size_t t) const { return d.cyl_exit(f, pr, a.prefix(t)); }
};


}  // namespace

std::string RunResult::json() const {
  nlohmann::json j;
  j["pair"] = {{"p", pair.p.str()}, {"eps", pair.eps.str()}};
  j["answer"] = answer;
  j["stabilized"] = stabilized;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& q : queries) {
    comps.push_back({{"component", q.component},
                     {"q", q.q.str()},
                     {"delta", q.delta.str()},
                     {"output_prefix", q.output_prefix},
                     {"output_point", q.output_point.str()},
                     {"bit", q.bit}});
  }
  j["components"] = comps;
  return j.dump();
}

Reducer Reducer::synth_m(ExprPtr f, ExprPtr g) {
  Verdict v = decide_m(f, g);
  if (!v.holds) throw not_reducible_error("not m-reducible: " + v.certificate);
  Reducer r(RedKind::m, std::move(f), std::move(g));
  for (const auto& pr : critical_pairs(r.f_)) r.plan_for(pr);
  return r;
}

Reducer Reducer::synth_tt1(ExprPtr f, ExprPtr g) {
  if (!decide_tt1(f, g)) throw not_reducible_error("not tt1-reducible");
  Reducer r(RedKind::tt1, std::move(f), std::move(g));
  for (const auto& pr : critical_pairs(r.f_)) r.plan_for(pr);
  return r;
}

Reducer Reducer::synth_tt(ExprPtr f, ExprPtr g) {
  if (!decide_tt(f, g)) throw not_reducible_error("not tt-reducible");
  if (alpha_rank(f) == Ordinal(1) || alpha_rank(g) == Ordinal(1))
    throw precondition_error("tt synthesis requires discontinuous functions");
  Reducer r(RedKind::tt, std::move(f), std::move(g));
  for (const auto& pr : critical_pairs(r.f_)) r.plan_for(pr);
  return r;
}

const Reducer::Plan& Reducer::plan_for(const Pair& pr) const {
  std::string key = pr.p.str() + "|" + pr.eps.str();
  auto it = plans_.find(key);
  if (it == plans_.end()) it = plans_.emplace(key, build_plan(pr)).first;
  return it->second;
}

Reducer::Plan Reducer::build_plan(const Pair& pr) const {
  if (!(pr.eps > Rat(0))) throw precondition_error("eps must be positive");
  Plan plan;
  Deriver& d = honest_deriver();

  auto build_m_plan = [&]() {
    MPlan pl;
    Ordinal rf = honest_alpha_rank(f_);
    if (rf == Ordinal(1)) {
      RangeInfo rg = range_of(g_);
      if (is_constant(f_)) {
        pl.const_source = true;
        int want = answer_policy(*range_of(f_).values.begin(), pr.p, pr.eps);
        Rat u = *rg.values.begin();
        Point b;
        if (!find_value_witness(g_, u, PointSet{}, b))
          throw error("no witness for a target value");
        pl.b_low = b;
        pl.target = want == 1 ? Pair{u + Rat(1), Rat(1, 2)}
                              : Pair{u - Rat(1), Rat(1, 2)};
        return pl;
      }
      if (rg.values.size() < 2)
        throw not_reducible_error("continuous nonconstant source, constant target");
      pl.continuous_source = true;
      Rat u = *rg.values.begin();
      Rat w = *rg.values.rbegin();
      if (!find_value_witness(g_, u, PointSet{}, pl.b_low) ||
          !find_value_witness(g_, w, PointSet{}, pl.b_high))
        throw error("no witnesses for target values");
      pl.target = Pair{(u + w) * Rat(1, 2), (w - u) * Rat(1, 4)};
      return pl;
    }

    Ordinal af = d.profile(f_, pr).alpha;
    Ordinal rg = honest_alpha_rank(g_);
    auto maxg = honest_max_pairs(g_);
    ScaffoldOracle sc;
    sc.target = g_;

    if (cmp(af, rg) == Order::less) {
      // Rank-gap branch (also realizes the limit clause pairwise): any
      // maximal target pair leaves the start invariant vacuous.
      const MaxPair& mp = maxg.front();
      pl.target = mp.pr;
      pl.nu = pred(rg);
      sc.pair = pl.target;
      int side = (mp.last & kLowBit) ? 0 : 1;
      auto b0 = side_witness(sc, pl.nu, "", side);
      if (!b0) throw error("missing start witness");
      pl.b0 = *b0;
      pl.start_mu = pl.nu;
      pl.start_side = side;
      pl.wait_start = false;
      return pl;
    }
    if (cmp(af, rg) == Order::greater)
      throw unsupported_error(
          "per-pair rank of the source exceeds the target's executable rank");

    Sidedness sf = honest_classify(f_);
    Sidedness sg = honest_classify(g_);
    pl.nu = pred(rg);
    if (sg == Sidedness::two) {
      for (const auto& mp : maxg)
        if ((mp.last & kLowBit) && (mp.last & kHighBit)) {
          pl.target = mp.pr;
          pl.wait_start = true;
          return pl;
        }
      throw error("two-sided target lost its witness pair");
    }
    int want = -1;
    if (sf != Sidedness::two && sg == Sidedness::one_neither) {
      RegionMask fl = d.profile(f_, pr).last_sides;
      want = (fl & kLowBit) ? 0 : (fl & kHighBit) ? 1 : -1;
    } else if (sf == sg &&
               (sf == Sidedness::left || sf == Sidedness::right)) {
      want = sf == Sidedness::left ? 0 : 1;
    } else {
      throw unsupported_error(
          "no executable m-construction for this pair within the class");
    }
    for (const auto& mp : maxg) {
      int flavor = (mp.last & kLowBit) ? 0 : 1;
      if (want != -1 && flavor != want) continue;
      pl.target = mp.pr;
      sc.pair = pl.target;
      auto b0 = side_witness(sc, pl.nu, "", flavor);
      if (!b0) throw error("missing start witness");
      pl.b0 = *b0;
      pl.start_mu = pl.nu;
      pl.start_side = flavor;
      pl.wait_start = false;
      return pl;
    }
    throw unsupported_error("target offers no maximal pair of the needed flavor");
  };

  if (kind_ == RedKind::m) {
    plan.m = build_m_plan();
    return plan;
  }

  if (kind_ == RedKind::tt1) {
    TT1Plan pl;
    try {
      pl.m = build_m_plan();
      pl.via_m = true;
      plan.tt1 = pl;
      return plan;
    } catch (const not_reducible_error&) {
    } catch (const unsupported_error&) {
    }
    Ordinal rf = honest_alpha_rank(f_);
    Ordinal rg = honest_alpha_rank(g_);
    if (cmp(rf, rg) == Order::greater)
      throw unsupported_error("executable ranks do not support a tt1 reduction");
    if (is_constant(g_)) {
      // Continuous source over a constant target: the input bits decide.
      if (!(rf == Ordinal(1)))
        throw not_reducible_error("discontinuous source, constant target");
      pl.const_target = true;
      pl.r = structural_depth(f_);
      std::vector<std::string> words{""};
      for (size_t b = 0; b < pl.r; ++b) {
        std::vector<std::string> nxt;
        for (const auto& w : words) {
          nxt.push_back(w + "0");
          nxt.push_back(w + "1");
        }
        words = std::move(nxt);
      }
      for (const auto& w : words)
        pl.answer_table[w] =
            answer_policy(eval(f_, Point(w, 0)), pr.p, pr.eps);
      Rat u = *range_of(g_).values.begin();
      pl.target = Pair{u + Rat(1), Rat(1, 2)};  // forces the oracle bit to 1
      pl.b0 = Point::zeros();
      plan.tt1 = pl;
      return plan;
    }
    auto maxg = honest_max_pairs(g_);
    const MaxPair& mp = maxg.front();
    pl.target = mp.pr;
    pl.g_side = (mp.last & kLowBit) ? 0 : 1;
    pl.nu = pred(rg);
    ScaffoldOracle sc{g_, pl.target};
    auto b0 = side_witness(sc, pl.nu, "", pl.g_side);
    if (!b0) throw error("missing start witness");
    pl.b0 = *b0;
    // Compactness depth: every depth-r cylinder must reveal a bound <= nu.
    Deriver& dh = honest_deriver();
    for (size_t r = 0; r <= 26; ++r) {
      bool ok = true;
      std::vector<std::string> words{""};
      for (size_t b = 0; b < r; ++b) {
        std::vector<std::string> nxt;
        for (const auto& w : words) {
          nxt.push_back(w + "0");
          nxt.push_back(w + "1");
        }
        words = std::move(nxt);
      }
      std::map<std::string, std::pair<Ordinal, int>> cover;
      for (const auto& w : words) {
        auto ce = dh.cyl_exit(f_, pr, w);
        if (cmp(ce.mu, pl.nu) == Order::greater) {
          ok = false;
          break;
        }
        cover[w] = {ce.mu, ce.side};
      }
      if (ok) {
        pl.r = r;
        pl.cover = std::move(cover);
        plan.tt1 = pl;
        return plan;
      }
    }
    throw error("tt1 cover depth exceeded the supported bound");
  }

  // kind == tt
  TTPlan pl;
  Ordinal rg = honest_alpha_rank(g_);
  if (cmp(rg, Ordinal(2)) == Order::less)
    throw precondition_error("tt synthesis requires a discontinuous target");
  auto maxg = honest_max_pairs(g_);
  const MaxPair& mp = maxg.front();
  pl.target = mp.pr;
  pl.nu = rg;
  ScaffoldOracle sc{g_, pl.target};
  Ordinal last = pred(pl.nu);
  if (auto low = side_witness(sc, last, "", 0)) {
    pl.b0 = *low;
    pl.b0_answer = 1;
  } else if (auto high = side_witness(sc, last, "", 1)) {
    pl.b0 = *high;
    pl.b0_answer = 0;
  } else {
    throw error("target's last residue offers no strictly sided point");
  }
  Ordinal af = honest_deriver().profile(f_, pr).alpha;
  bool found = false;
  for (size_t n = 1; n <= 64; ++n) {
    if (cmp(af, mul_nat(pl.nu, n)) == Order::less) {
      pl.n = n;
      found = true;
      break;
    }
  }
  if (!found)
    throw unsupported_error(
        "no finite query plan bounds the source's executable rank");
  plan.tt = pl;
  return plan;
}

RunResult Reducer::run_m(const MPlan& pl, const Pair& pr, const Point& a,
                         size_t fuel) const {
  RunResult res;
  res.pair = pr;
  const Pair& tg = pl.target;

  if (pl.const_source || pl.continuous_source) {
    Point b = pl.b_low;
    if (pl.continuous_source) {
      Rat v = eval(f_, a);
      if (v >= pr.p + pr.eps) b = pl.b_high;
    }
    Rat gv = eval(g_, b);
    int bit = answer_policy(gv, tg.p, tg.eps);
    res.queries.push_back({0, tg.p, tg.eps, b.prefix(8), b, bit});
    res.answer = bit;
    res.stabilized = true;
    return res;
  }

  ScaffoldOracle sc{g_, tg};
  Feed feed(f_, pr, a);
  Deriver& d = honest_deriver();

  Ordinal mu = pl.start_mu;
  int c = pl.start_side;
  Point b = pl.b0;
  std::string tau;
  bool started = !pl.wait_start;
  bool stab = false;

  for (size_t t = 0; t < fuel; ++t) {
    auto ev = feed.at(t);
    if (!started) {
      // Output nothing until the observed bound reaches the target's last
      // stage; both switch directions stay available from there on.
      if (cmp(ev.mu, pl.nu) != Order::greater) {
        mu = ev.mu;
        c = ev.side;
        auto w = side_witness(sc, pl.nu, tau, c);
        if (!w) throw error("scaffold witness missing at start");
        b = *w;
        started = true;
      }
    } else if (cmp(ev.mu, mu) == Order::less) {
      if (ev.side != c) {
        auto w = side_witness(sc, ev.mu, tau, ev.side);
        if (!w) throw error("scaffold witness missing at a switch");
        b = *w;
        c = ev.side;
      }
      mu = ev.mu;
      if (cmp(d.point_exit(g_, tg, b), mu) != Order::greater)
        throw error("transducer invariant violated: committed point too shallow");
    }
    if (started) {
      tau.push_back(static_cast<char>('0' + b.bit_at(tau.size())));
      if (cmp(ev.mu, feed.floor) != Order::greater) {
        stab = true;
        break;
      }
    }
  }

  Rat gv = eval(g_, b);
  if (region_of(gv, tg) == Region::mid)
    throw error("transducer invariant violated: output value not strictly sided");
  int bit = answer_policy(gv, tg.p, tg.eps);
  res.queries.push_back({0, tg.p, tg.eps, tau, b, bit});
  res.answer = bit;
  res.stabilized = stab;
  return res;
}

RunResult Reducer::run_tt1(const TT1Plan& pl, const Pair& pr, const Point& a,
                           size_t fuel) const {
  if (pl.via_m) return run_m(pl.m, pr, a, fuel);

  RunResult res;
  res.pair = pr;
  if (pl.const_target) {
    auto it = pl.answer_table.find(a.prefix(pl.r));
    if (it == pl.answer_table.end()) throw error("tt1 table is missing a cell");
    Rat gv = eval(g_, pl.b0);
    int bit = answer_policy(gv, pl.target.p, pl.target.eps);
    res.queries.push_back(
        {0, pl.target.p, pl.target.eps, pl.b0.prefix(4), pl.b0, bit});
    res.answer = it->second;
    res.stabilized = true;
    return res;
  }
  const Pair& tg = pl.target;
  ScaffoldOracle sc{g_, tg};
  Feed feed(f_, pr, a);
  Deriver& d = honest_deriver();

  auto cov = pl.cover.find(a.prefix(pl.r));
  if (cov == pl.cover.end()) throw error("tt1 cover is missing a cell");
  Ordinal mu = cov->second.first;
  int c = cov->second.second;
  bool inv = c != pl.g_side;
  Point b = pl.b0;
  std::string tau;
  bool stab = false;

  for (size_t t = 0; t < fuel; ++t) {
    auto ev = feed.at(t);
    if (cmp(ev.mu, mu) == Order::less) {
      if (ev.side != c) {
        int want = inv ? 1 - ev.side : ev.side;
        auto w = side_witness(sc, ev.mu, tau, want);
        if (!w) throw error("scaffold witness missing at a switch");
        b = *w;
        c = ev.side;
      }
      mu = ev.mu;
      if (cmp(d.point_exit(g_, tg, b), mu) != Order::greater)
        throw error("transducer invariant violated: committed point too shallow");
    }
    tau.push_back(static_cast<char>('0' + b.bit_at(tau.size())));
    if (cmp(ev.mu, feed.floor) != Order::greater) {
      stab = true;
      break;
    }
  }

  Rat gv = eval(g_, b);
  if (region_of(gv, tg) == Region::mid)
    throw error("transducer invariant violated: output value not strictly sided");
  int bit = answer_policy(gv, tg.p, tg.eps);
  res.queries.push_back({0, tg.p, tg.eps, tau, b, bit});
  res.answer = inv ? 1 - bit : bit;
  res.stabilized = stab;
  return res;
}

RunResult Reducer::run_tt(const TTPlan& pl, const Pair& pr, const Point& a,
                          size_t fuel) const {
  RunResult res;
  res.pair = pr;
  const Pair& tg = pl.target;
  ScaffoldOracle sc{g_, tg};
  Feed feed(f_, pr, a);

  const size_t n = pl.n;
  const int b0_side = pl.b0_answer == 1 ? 0 : 1;

  struct Det {
    Point b;
    std::string tau;
    bool fired = false;
  };
  enum class TrkState { waiting, active, dead };
  struct Trk {
    Point b;
    std::string tau;
    TrkState st = TrkState::waiting;
    Ordinal mu_rel;
    int c = 0;
    bool inv = false;
  };
  struct Ind {
    Point b;
    std::string tau;
    bool done = false;
  };
  std::vector<Det> det(n, Det{pl.b0, "", false});
  std::vector<Trk> trk(n, Trk{pl.b0, "", TrkState::waiting, Ordinal(), 0, false});
  std::vector<Ind> ind(n, Ind{pl.b0, "", false});

  std::vector<Ordinal> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = i == 0 ? Ordinal() : mul_nat(pl.nu, i);
    hi[i] = mul_nat(pl.nu, i + 1);
  }

  bool stab = false;
  for (size_t t = 0; t < fuel; ++t) {
    auto ev = feed.at(t);
    for (size_t i = 0; i < n; ++i) {
      if (!det[i].fired && cmp(ev.mu, hi[i]) == Order::less) {
        det[i].fired = true;
        auto w = side_witness(sc, Ordinal(), det[i].tau, 1 - b0_side);
        if (!w) throw error("detector witness missing");
        det[i].b = *w;
      }
      Trk& tk = trk[i];
      if (tk.st == TrkState::waiting && cmp(ev.mu, hi[i]) == Order::less) {
        if (cmp(ev.mu, lo[i]) == Order::less) {
          tk.st = TrkState::dead;
        } else {
          tk.st = TrkState::active;
          tk.mu_rel = left_subtract(lo[i], ev.mu);
          tk.c = ev.side;
          tk.inv = set_answer(ev.side) != pl.b0_answer;
          if (!ind[i].done) {
            ind[i].done = true;
            if (tk.inv) {
              auto w = side_witness(sc, Ordinal(), ind[i].tau, 1 - b0_side);
              if (!w) throw error("indicator witness missing");
              ind[i].b = *w;
            }
          }
        }
      } else if (tk.st == TrkState::active) {
        if (cmp(ev.mu, lo[i]) == Order::less) {
          tk.st = TrkState::dead;
        } else if (cmp(ev.mu, add(lo[i], tk.mu_rel)) == Order::less) {
          Ordinal rel = left_subtract(lo[i], ev.mu);
          if (ev.side != tk.c) {
            int want = tk.inv ? 1 - ev.side : ev.side;
            auto w = side_witness(sc, rel, tk.tau, want);
            if (!w) throw error("tracker witness missing at a switch");
            tk.b = *w;
            tk.c = ev.side;
          }
          tk.mu_rel = rel;
        }
      }
      det[i].tau.push_back(static_cast<char>('0' + det[i].b.bit_at(det[i].tau.size())));
      trk[i].tau.push_back(static_cast<char>('0' + trk[i].b.bit_at(trk[i].tau.size())));
      ind[i].tau.push_back(static_cast<char>('0' + ind[i].b.bit_at(ind[i].tau.size())));
    }
    if (cmp(ev.mu, feed.floor) != Order::greater) {
      stab = true;
      break;
    }
  }

  auto emit = [&](size_t comp, const Point& b, const std::string& tau) {
    Rat gv = eval(g_, b);
    if (region_of(gv, tg) == Region::mid)
      throw error("tt component output not strictly sided");
    int bit = answer_policy(gv, tg.p, tg.eps);
    res.queries.push_back({comp, tg.p, tg.eps, tau, b, bit});
    return bit;
  };

  std::vector<int> det_bits(n), trk_bits(n), ind_bits(n);
  for (size_t i = 0; i < n; ++i) det_bits[i] = emit(i, det[i].b, det[i].tau);
  for (size_t i = 0; i < n; ++i) trk_bits[i] = emit(n + i, trk[i].b, trk[i].tau);
  for (size_t i = 0; i < n; ++i) ind_bits[i] = emit(2 * n + i, ind[i].b, ind[i].tau);

  size_t istar = n;
  for (size_t i = 0; i < n; ++i)
    if (det_bits[i] != pl.b0_answer) {
      istar = i;
      break;
    }
  if (stab) {
    if (istar == n) throw error("no interval detector fired");
    if (trk[istar].st != TrkState::active)
      throw error("interval tracker did not engage");
    bool invert = ind_bits[istar] != pl.b0_answer;
    int bbit = trk_bits[istar];
    res.answer = invert ? 1 - bbit : bbit;
  } else if (istar < n) {
    res.answer = ind_bits[istar] != pl.b0_answer ? 1 - trk_bits[istar]
                                                 : trk_bits[istar];
  }
  res.stabilized = stab;
  return res;
}

RunResult Reducer::run(const Pair& pr, const Point& a, size_t fuel) const {
  if (fuel < 1) throw precondition_error("fuel must be >= 1");
  const Plan& pl = plan_for(pr);
  switch (kind_) {
    case RedKind::m:
      return run_m(pl.m, pr, a, fuel);
    case RedKind::tt1:
      return run_tt1(pl.tt1, pr, a, fuel);
    case RedKind::tt:
      return run_tt(pl.tt, pr, a, fuel);
  }
  throw error("unreachable");
}

size_t Reducer::query_count(const Pair& pr) const {
  if (kind_ == RedKind::tt) return 3 * plan_for(pr).tt.n;
  return 1;
}

VerifyReport verify_reduction(const Reducer& r, const std::vector<Point>& samples,
                              size_t fuel) {
  VerifyReport rep;
  std::vector<Pair> pairs = critical_pairs(r.source());
  if (pairs.empty()) pairs.push_back({Rat(0), Rat(1, 2)});
  for (const auto& pr : pairs) {
    for (const auto& a : samples) {
      RunResult rr;
      try {
        rr = r.run(pr, a, fuel);
      } catch (const error& e) {
        rep.violations.push_back("run failed at " + pr.str() + " on " + a.str() +
                                 ": " + e.what());
        continue;
      }
      ++rep.runs;
      if (!rr.stabilized) {
        rep.violations.push_back("run did not stabilize at " + pr.str() +
                                 " on " + a.str());
        continue;
      }
      if (rr.queries.size() != r.query_count(pr))
        rep.violations.push_back("unexpected query count at " + pr.str());
      for (const auto& q : rr.queries) {
        ++rep.oracle_bits;
        if (!answer_correct(eval(r.target(), q.output_point), q.q, q.delta, q.bit))
          rep.violations.push_back("incorrect oracle bit at " + pr.str() +
                                   " on " + a.str());
      }
      if (!answer_correct(eval(r.source(), a), pr.p, pr.eps, rr.answer))
        rep.violations.push_back("incorrect final answer at " + pr.str() +
                                 " on " + a.str());
    }
  }
  return rep;
}

}  // namespace baire
