#ifndef BAIRE_DEGREES_HPP
#define BAIRE_DEGREES_HPP

#include <string>
#include <vector>

#include "baire/derivation.hpp"
#include "baire/expr.hpp"

namespace baire {

struct Verdict {
  bool holds = false;
  std::string certificate;  // clause used, or why not
};

// f <=_m g decided from rank and sidedness data.
Verdict decide_m(const ExprPtr& f, const ExprPtr& g);
// f <=_tt1 g: pure rank comparison.
bool decide_tt1(const ExprPtr& f, const ExprPtr& g);
// f <=_tt g: the coarsened rank comparison, with continuity edge rules.
bool decide_tt(const ExprPtr& f, const ExprPtr& g);
// f <=_T g.
bool decide_T(const ExprPtr& f, const ExprPtr& g);

// decide_m(f,g) or decide_m(g,-f); must always hold.
bool dichotomy_check(const ExprPtr& f, const ExprPtr& g);

// Hasse diagram of the m-preorder on the given list (quotient by mutual
// reducibility, transitive reduction), as DOT text.
std::string degree_diagram(const std::vector<ExprPtr>& fs);

// The quotient structure behind the diagram, exposed for tests.
struct DegreeGraph {
  std::vector<std::vector<size_t>> classes;       // indices into the input list
  std::vector<std::pair<size_t, size_t>> edges;   // transitive reduction, a -> b
  std::vector<std::string> labels;                // rank=<ord>, side=<side>
};
DegreeGraph degree_graph(const std::vector<ExprPtr>& fs);

}  // namespace baire

#endif
