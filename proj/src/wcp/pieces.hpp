#pragma once

#include <vector>

#include "wcp/qpoly.hpp"
#include "wcp/weyl.hpp"

namespace wcp {

// Label (J, w) of the G-stable piece Z_{J,w}; requires w in W^J.
struct PieceLabel {
  SimpleSubset J;
  WeylElem w;
};

// One step of the sequence attached to a piece: subsets J_k, J'_k = Ad(y_k)J_k
// and elements u_k, y_k, v_k with v_0 = w_J, v_{k+1} = u_k^{-1} v_k,
// y_k = v_k w.
struct BetaStep {
  SimpleSubset J;
  SimpleSubset Jp;
  WeylElem u;
  WeylElem y;
  WeylElem v;
};

struct BetaChain {
  WeylElem w_J;              // w_0 w_0^J w^{-1}, the element the chain decomposes
  std::vector<BetaStep> steps;
  SimpleSubset terminal;     // J_infinity; the terminal Levi is L_{J_infinity}
  WeylElem terminal_y;       // equals w
};

class Pieces {
public:
  explicit Pieces(const RootSystem& rs) : rs_(rs), W_(rs) {}

  const WeylOps& weyl() const { return W_; }

  void require_min_rep(const WeylElem& w, SimpleSubset J) const;

  // w_J = w_0 w_0^J w^{-1}; lands in ^{J*}W with J* = Ad(w_0 w_0^J)J.
  WeylElem w_J_of(SimpleSubset J, const WeylElem& w) const;

  // The chain determined by (J, w_J, w_0 w_0^J); terminates with u = 1 and
  // stable J.  Throws logic_error if it fails to stabilise within 4|I|+4
  // steps (never expected to fire).
  BetaChain beta_sequence(SimpleSubset J, const WeylElem& w) const;

  SimpleSubset terminal_levi(SimpleSubset J, const WeylElem& w) const;

  // Poincare polynomial sum_{u in W} q^{l(u)}.
  QPoly poincare_poly(std::uint64_t bound = kDefaultEnumBound) const;

  // |Z_{J,w}|_q = (sum_{u in W} q^{l(u)}) (q-1)^{|J|} q^{l(w_0 w)}.
  QPoly piece_count_poly(const PieceLabel& p, std::uint64_t bound = kDefaultEnumBound) const;
  // Same with the Poincare polynomial precomputed (for summing over many pieces).
  QPoly piece_count_poly(const PieceLabel& p, const QPoly& poincare) const;

  // |Gbar|_q = (sum_w q^{l(w)}) (sum_w q^{l(w_0 w) + |L(w_0 w)|}).
  QPoly group_compactification_count(std::uint64_t bound = kDefaultEnumBound) const;

  // All (J, w in W^J); J by decreasing size then lexicographic index list,
  // w in enumeration order.
  std::vector<PieceLabel> enumerate_pieces(std::uint64_t bound = kDefaultEnumBound) const;

  // Subsets of I in the deterministic order used by enumerate_pieces.
  std::vector<SimpleSubset> subsets_by_size_desc() const;

private:
  const RootSystem& rs_;
  WeylOps W_;
};

} // namespace wcp
