#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <map>
#include <stdexcept>
#include <vector>

#include "wcp/weyl.hpp"

namespace wcp::testing {

// Reflection in a positive root beta, expressed as w s_i w^{-1} for any w
// with w(alpha_i) = beta; every root is conjugate to a simple one.
inline WeylElem reflection_in_root(const WeylOps& W, const std::vector<WeylElem>& all,
                                   const RootVec& beta) {
  const RootSystem& rs = W.root_system();
  for (const WeylElem& w : all)
    for (int i = 1; i <= rs.rank(); ++i)
      if (w.act(rs.simple_root(i)) == beta) return w * W.simple_reflection(i) * W.inverse(w);
  throw std::logic_error("no expression of the root as w(alpha_i)");
}

// Bruhat order as the transitive closure of the covering relation
// u -> u t_beta with a length step of exactly one.
class BruhatOracle {
public:
  explicit BruhatOracle(const WeylOps& W) {
    elems_ = W.enumerate();
    for (size_t k = 0; k < elems_.size(); ++k) index_[elems_[k]] = k;
    std::vector<WeylElem> refl;
    for (const RootVec& beta : W.root_system().positive_roots())
      refl.push_back(reflection_in_root(W, elems_, beta));
    const size_t N = elems_.size();
    leq_.assign(N, std::vector<bool>(N, false));
    // Elements arrive sorted by length, so downward closures are complete by
    // the time they are needed.
    for (size_t k = 0; k < N; ++k) {
      leq_[k][k] = true;
      const int lk = W.length(elems_[k]);
      for (const WeylElem& t : refl) {
        const WeylElem lower = elems_[k] * t;
        if (W.length(lower) != lk - 1) continue;
        const size_t dn = index_.at(lower);
        for (size_t u = 0; u < N; ++u)
          if (leq_[u][dn]) leq_[u][k] = true;
      }
    }
  }

  bool operator()(const WeylElem& u, const WeylElem& w) const {
    return leq_[index_.at(u)][index_.at(w)];
  }

private:
  std::vector<WeylElem> elems_;
  std::map<WeylElem, size_t> index_;
  std::vector<std::vector<bool>> leq_;
};

} // namespace wcp::testing
