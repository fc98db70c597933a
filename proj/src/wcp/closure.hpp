#pragma once

#include <optional>
#include <vector>

#include "wcp/pieces.hpp"

namespace wcp {

// Label [J, x, w] of a B x B-orbit of the compactification; x in W^J.
struct OrbitLabel {
  SimpleSubset J;
  WeylElem x;
  WeylElem w;
};

// Witness (u, v) for a positive closure answer.
struct ClosureWitness {
  WeylElem u;
  WeylElem v;
};

class Closure {
public:
  explicit Closure(const RootSystem& rs) : rs_(rs), W_(rs), pieces_(rs) {}

  const WeylOps& weyl() const { return W_; }

  // [J, u, v] = [J, x, v z^{-1}] with u = x z, x in W^J, z in W_J.
  OrbitLabel normalize_orbit(SimpleSubset J, const WeylElem& u, const WeylElem& v) const;

  // Closure criterion: b lies in the closure of a iff K subset J and there
  // are u in W_K, v in W_J intersect W^K with x v u^{-1} <= x', w' u <= w v
  // and l(w v) = l(w) + l(v).  Search is exhaustive with early exit.
  std::optional<ClosureWitness> orbit_closure_contains(
      const OrbitLabel& a, const OrbitLabel& b, std::uint64_t bound = kDefaultEnumBound) const;

  // All (J proper, w in W^J, supp(w) = I): the pieces of the boundary of the
  // closed unipotent variety (equally, of any Steinberg fiber closure).
  std::vector<PieceLabel> boundary_pieces(std::uint64_t bound = kDefaultEnumBound) const;

  // (sum_{w in W} q^{l(w)}) sum_{supp(w)=I} q^{l(w_0 w)+|L(w_0 w)|}.
  QPoly boundary_count_poly(std::uint64_t bound = kDefaultEnumBound) const;

  // Closure of the Coxeter piece Z_{I-{i}, w}: all (K subset I-{i},
  // w' in W^K, supp(w') = I).
  std::vector<PieceLabel> coxeter_piece_closure(int i, const WeylElem& w,
                                                std::uint64_t bound = kDefaultEnumBound) const;

private:
  const RootSystem& rs_;
  WeylOps W_;
  Pieces pieces_;
};

} // namespace wcp
