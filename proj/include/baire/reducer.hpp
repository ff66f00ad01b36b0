#ifndef BAIRE_REDUCER_HPP
#define BAIRE_REDUCER_HPP

#include <map>
#include <string>
#include <vector>

#include "baire/expr.hpp"
#include "baire/oracle.hpp"

namespace baire {

enum class RedKind { m, tt1, tt };

struct RunQuery {
  size_t component = 0;
  Rat q, delta;
  std::string output_prefix;
  Point output_point;
  int bit = 0;
};

struct RunResult {
  Pair pair;
  std::vector<RunQuery> queries;
  int answer = -1;
  bool stabilized = false;
  std::string json() const;
};

// A synthesized stream transducer realizing an m / tt1 / tt reduction from f
// to g. Plans are laid down per critical pair of f at synthesis time; running
// against another pair lays a plan down on demand.
class Reducer {
 public:
  static Reducer synth_m(ExprPtr f, ExprPtr g);
  static Reducer synth_tt1(ExprPtr f, ExprPtr g);
  static Reducer synth_tt(ExprPtr f, ExprPtr g);

  RunResult run(const Pair& pr, const Point& a, size_t fuel = 256) const;

  RedKind kind() const { return kind_; }
  const ExprPtr& source() const { return f_; }
  const ExprPtr& target() const { return g_; }
  // Number of oracle queries a run at this pair issues.
  size_t query_count(const Pair& pr) const;

 private:
  struct MPlan {
    // Prop-5.5 shape for continuous sources; const_source degenerates further.
    bool continuous_source = false;
    bool const_source = false;
    Point b_low, b_high;
    // General shape: stagewise transducer against the target pair.
    Pair target;
    Ordinal nu;       // alpha(g, q, delta) - 1
    bool wait_start;  // two-sided start: pick B at the first observed event
    Ordinal start_mu;
    int start_side = 0;
    Point b0;
  };
  struct TT1Plan {
    bool via_m = false;
    MPlan m;
    // Constant-target shape: the input bits alone fix the answer and the
    // single oracle query is forced.
    bool const_target = false;
    std::map<std::string, int> answer_table;
    Pair target;
    Ordinal nu;
    int g_side = 0;  // set index of the target's surviving flavor
    size_t r = 0;
    std::map<std::string, std::pair<Ordinal, int>> cover;
    Point b0;
  };
  struct TTPlan {
    Pair target;
    Ordinal nu;  // alpha(g, q, delta)
    size_t n = 0;
    Point b0;
    int b0_answer = 1;  // the unique correct answer at b0
  };
  struct Plan {
    MPlan m;
    TT1Plan tt1;
    TTPlan tt;
  };

  Reducer(RedKind k, ExprPtr f, ExprPtr g) : kind_(k), f_(f), g_(g) {}

  const Plan& plan_for(const Pair& pr) const;
  Plan build_plan(const Pair& pr) const;
  RunResult run_m(const MPlan& pl, const Pair& pr, const Point& a,
                  size_t fuel) const;
  RunResult run_tt1(const TT1Plan& pl, const Pair& pr, const Point& a,
                    size_t fuel) const;
  RunResult run_tt(const TTPlan& pl, const Pair& pr, const Point& a,
                   size_t fuel) const;

  RedKind kind_;
  ExprPtr f_, g_;
  mutable std::map<std::string, Plan> plans_;
};

struct VerifyReport {
  size_t runs = 0;
  size_t oracle_bits = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Runs the reducer on every sample at every critical pair of the source and
// checks that each oracle bit is a correct answer for the target at the
// queried point and that the final answer is correct for the source.
VerifyReport verify_reduction(const Reducer& r, const std::vector<Point>& samples,
                              size_t fuel = 256);

}  // namespace baire

#endif
