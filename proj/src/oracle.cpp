#include "baire/oracle.hpp"

namespace baire {

std::vector<MindChangeOracle::Triple> MindChangeOracle::observe(
    const std::string& prefix) const {
  Deriver& d = honest_deriver();
  std::vector<Triple> out;
  for (size_t t = 0; t <= prefix.size(); ++t) {
    std::string sigma = prefix.substr(0, t);
    auto ce = d.cyl_exit(subject, pair, sigma);
    if (out.empty() || cmp(ce.mu, out.back().mu) == Order::less)
      out.push_back({ce.mu, sigma, ce.side});
  }
  return out;
}

std::optional<Point> ScaffoldOracle::query(const Ordinal& nu,
                                           const std::string& sigma,
                                           int i) const {
  // B outside D_0 sits at or above q + delta; outside D_1, at or below q - delta.
  Region want = i == 0 ? Region::high : Region::low;
  return honest_deriver().find_witness(target, pair, sigma, PointSet{}, want, nu);
}

}  // namespace baire
