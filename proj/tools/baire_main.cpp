#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "baire/brute.hpp"
#include "baire/degrees.hpp"
#include "baire/derivation.hpp"
#include "baire/parse.hpp"
#include "baire/reducer.hpp"
#include "baire/verify.hpp"

namespace {

using namespace baire;

Pair parse_pair_flag(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw precondition_error("--pair expects p,eps");
  Pair pr{parse_rational(s.substr(0, comma)),
          parse_rational(s.substr(comma + 1))};
  if (!(pr.eps > Rat(0))) throw precondition_error("eps must be positive");
  return pr;
}

int cmd_rank(const std::string& text, const std::string& trace) {
  ExprPtr f = parse_expr(text);
  Ordinal rank = alpha_rank(f);
  std::cout << rank.str() << "\n";
  std::vector<Pair> pairs = critical_pairs(f);
  for (const auto& pr : pairs) {
    if (has_sum_or_prod(f)) {
      auto [a, exact] = brute_alpha(f, pr, default_brute_depth(f));
      std::cout << "  " << pr.str() << " alpha=" << a.str()
                << (exact ? "" : " (lower bound)") << "\n";
      continue;
    }
    Profile p = derive_profile(f, pr);
    std::cout << "  " << pr.str() << " alpha=" << p.alpha.str() << " sides=";
    if (p.last_sides & kLowBit) std::cout << "L";
    if (p.last_sides & kMidBit) std::cout << "M";
    if (p.last_sides & kHighBit) std::cout << "H";
    std::cout << "\n";
  }
  if (!trace.empty()) {
    std::ofstream out(trace);
    for (const auto& pr : pairs) {
      ResidueApprox ra = brute_derive(f, pr, default_brute_depth(f));
      out << "{\"pair\": \"" << pr.str() << "\", \"exact\": "
          << (ra.exact ? "true" : "false") << "}\n";
      out << residue_trace_jsonl(ra);
    }
  }
  return 0;
}

int cmd_classify(const std::string& text) {
  std::cout << sidedness_str(classify(parse_expr(text))) << "\n";
  return 0;
}

int cmd_compare(const std::string& rel, const std::string& ft,
                const std::string& gt) {
  ExprPtr f = parse_expr(ft), g = parse_expr(gt);
  bool holds;
  std::string cert;
  if (rel == "m") {
    Verdict v = decide_m(f, g);
    holds = v.holds;
    cert = v.certificate;
  } else if (rel == "tt1") {
    holds = decide_tt1(f, g);
    cert = "rank comparison";
  } else if (rel == "tt") {
    holds = decide_tt(f, g);
    cert = "rank coarsening";
  } else if (rel == "T") {
    holds = decide_T(f, g);
    cert = "continuity rule";
  } else {
    throw precondition_error("unknown relation '" + rel + "'");
  }
  std::cout << (holds ? "reducible" : "not reducible") << " (" << cert << ")\n";
  return holds ? 0 : 1;
}

int cmd_reduce(const std::string& rel, const std::string& ft,
               const std::string& gt, const std::string& input,
               const std::string& pair_flag, const std::string& trace,
               size_t fuel) {
  ExprPtr f = parse_expr(ft), g = parse_expr(gt);
  Point a = parse_point(input);
  Reducer r = rel == "m"    ? Reducer::synth_m(f, g)
              : rel == "tt1" ? Reducer::synth_tt1(f, g)
              : rel == "tt"  ? Reducer::synth_tt(f, g)
                             : throw precondition_error("unknown relation");
  std::vector<Pair> pairs;
  if (!pair_flag.empty()) {
    pairs.push_back(parse_pair_flag(pair_flag));
  } else {
    pairs = critical_pairs(f);
    if (pairs.empty()) pairs.push_back({Rat(0), Rat(1, 2)});
  }
  std::string all;
  for (const auto& pr : pairs) {
    RunResult res = r.run(pr, a, fuel);
    std::string line = res.json();
    std::cout << line << "\n";
    all += line + "\n";
  }
  if (!trace.empty()) {
    std::ofstream out(trace);
    out << all;
  }
  return 0;
}

int cmd_diagram(const std::vector<std::string>& texts) {
  std::vector<ExprPtr> fs;
  for (const auto& t : texts) fs.push_back(parse_expr(t));
  std::cout << degree_diagram(fs);
  return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
  auto results = run_criteria(seed, suite_criteria(suite));
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL",
                r.criterion, r.name.c_str(), r.detail.c_str(), r.seconds);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bourgain ranks and topological reducibilities on Cantor space"};
  app.require_subcommand(1);

  std::string expr_text, expr_g, rel = "m", input, pair_flag, trace, suite = "all";
  std::vector<std::string> exprs;
  uint64_t seed = 1;
  size_t fuel = 256;

  auto* rank = app.add_subcommand("rank", "Bourgain rank and per-pair table");
  rank->add_option("expr", expr_text)->required();
  rank->add_option("--trace", trace, "write a derivation trace (JSON lines)");

  auto* cls = app.add_subcommand("classify", "sidedness classification");
  cls->add_option("expr", expr_text)->required();

  auto* cmp = app.add_subcommand("compare", "decide a reducibility");
  cmp->add_option("--rel", rel, "m|tt1|tt|T")->required();
  cmp->add_option("f", expr_text)->required();
  cmp->add_option("g", expr_g)->required();

  auto* red = app.add_subcommand("reduce", "synthesize and run a reduction");
  red->add_option("--rel", rel, "m|tt1|tt")->required();
  red->add_option("f", expr_text)->required();
  red->add_option("g", expr_g)->required();
  red->add_option("--input", input, "input point, e.g. 01~1")->required();
  red->add_option("--pair", pair_flag, "p,eps (default: all critical pairs)");
  red->add_option("--trace", trace, "write run results (JSON lines)");
  red->add_option("--fuel", fuel, "bit budget per run");

  auto* dia = app.add_subcommand("diagram", "emit the m-degree Hasse diagram");
  dia->add_option("exprs", exprs)->required()->expected(-1);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "ordinals|derivation|degrees|reductions|all");
  ver->add_option("--seed", seed, "corpus seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed()) return cmd_rank(expr_text, trace);
    if (cls->parsed()) return cmd_classify(expr_text);
    if (cmp->parsed()) return cmd_compare(rel, expr_text, expr_g);
    if (red->parsed())
      return cmd_reduce(rel, expr_text, expr_g, input, pair_flag, trace, fuel);
    if (dia->parsed()) return cmd_diagram(exprs);
    if (ver->parsed()) return cmd_verify(suite, seed);
  } catch (const baire::not_reducible_error& e) {
    std::cout << "not reducible (" << e.what() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
