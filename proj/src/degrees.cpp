#include "baire/degrees.hpp"

#include <algorithm>

namespace baire {

namespace {

bool rank_lt(const Ordinal& a, const Ordinal& b) {
  return cmp(a, b) == Order::less;
}

}  // namespace

Verdict decide_m(const ExprPtr& f, const ExprPtr& g) {
  Ordinal rf = alpha_rank(f);
  Ordinal rg = alpha_rank(g);
  if (rf == Ordinal(1)) {
    if (is_constant(f)) return {true, "constant source"};
    if (!is_constant(g)) return {true, "continuous source, nonconstant target"};
    return {false, "nonconstant continuous source, constant target"};
  }
  if (rg == Ordinal(1)) return {false, "discontinuous source, continuous target"};
  if (rank_lt(rf, rg)) return {true, "strict rank gap"};
  if (rank_lt(rg, rf)) return {false, "source rank exceeds target rank"};
  if (rf.is_limit()) return {true, "shared limit rank"};
  Sidedness sf = classify(f);
  Sidedness sg = classify(g);
  if (sg == Sidedness::two) return {true, "two-sided target"};
  if (sf != Sidedness::two && sg == Sidedness::one_neither)
    return {true, "one-sided source, unsided target"};
  if (sf == sg && (sf == Sidedness::left || sf == Sidedness::right))
    return {true, "matched sides"};
  return {false, "equal rank, incompatible sides"};
}

bool decide_tt1(const ExprPtr& f, const ExprPtr& g) {
  return cmp(alpha_rank(f), alpha_rank(g)) != Order::greater;
}

bool decide_tt(const ExprPtr& f, const ExprPtr& g) {
  Ordinal rf = alpha_rank(f);
  Ordinal rg = alpha_rank(g);
  if (rf == Ordinal(1)) return !is_constant(g) || is_constant(f);
  if (rg == Ordinal(1)) return false;
  return coarse_le(rf, rg);
}

bool decide_T(const ExprPtr& f, const ExprPtr& g) {
  if (alpha_rank(f) == Ordinal(1)) return true;
  return cmp(alpha_rank(g), Ordinal(1)) == Order::greater;
}

bool dichotomy_check(const ExprPtr& f, const ExprPtr& g) {
  if (decide_m(f, g).holds) return true;
  return decide_m(g, mk_neg(f)).holds;
}

DegreeGraph degree_graph(const std::vector<ExprPtr>& fs) {
  const size_t n = fs.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) le[i][j] = decide_m(fs[i], fs[j]).holds;

  // Quotient by mutual reducibility.
  DegreeGraph gr;
  std::vector<int> cls(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    size_t c = gr.classes.size();
    gr.classes.push_back({i});
    cls[i] = static_cast<int>(c);
    for (size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 && le[i][j] && le[j][i]) {
        gr.classes.back().push_back(j);
        cls[j] = static_cast<int>(c);
      }
  }

  // Stable class order: by expression hash of the smallest member.
  std::vector<size_t> order(gr.classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto class_key = [&](size_t c) {
    uint64_t best = 0;
    bool first = true;
    for (size_t idx : gr.classes[c]) {
      uint64_t h = expr_hash(fs[idx]);
      if (first || h < best) best = h;
      first = false;
    }
    return best;
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return class_key(a) < class_key(b);
  });
  std::vector<std::vector<size_t>> sorted;
  std::vector<int> remap(gr.classes.size());
  for (size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    sorted.push_back(gr.classes[order[k]]);
  }
  gr.classes = std::move(sorted);
  for (auto& c : cls) c = remap[c];

  const size_t m = gr.classes.size();
  std::vector<std::vector<bool>> cle(m, std::vector<bool>(m, false));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      cle[a][b] = le[gr.classes[a][0]][gr.classes[b][0]];

  // Transitive reduction of the strict order.
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      if (a == b || !cle[a][b]) continue;
      bool direct = true;
      for (size_t c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        if (cle[a][c] && cle[c][b] && !cle[c][a] && !cle[b][c]) {
          direct = false;
          break;
        }
      }
      if (direct) gr.edges.push_back({a, b});
    }

  for (size_t a = 0; a < m; ++a) {
    const ExprPtr& rep = fs[gr.classes[a][0]];
    gr.labels.push_back("rank=" + alpha_rank(rep).str() +
                        ", side=" + sidedness_str(classify(rep)));
  }
  return gr;
}

std::string degree_diagram(const std::vector<ExprPtr>& fs) {
  DegreeGraph gr = degree_graph(fs);
  std::string out = "digraph degrees {\n  rankdir=BT;\n";
  for (size_t a = 0; a < gr.classes.size(); ++a) {
    out += "  n" + std::to_string(a) + " [label=\"" + gr.labels[a] + "\"];\n";
  }
  for (const auto& [a, b] : gr.edges)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace baire
