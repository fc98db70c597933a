#include "wcp/closure.hpp"

#include <stdexcept>

#include "wcp/coxeter.hpp"

namespace wcp {

OrbitLabel Closure::normalize_orbit(SimpleSubset J, const WeylElem& u, const WeylElem& v) const {
  const auto [x, z] = W_.coset_decompose(u, J);
  return {J, x, v * W_.inverse(z)};
}

std::optional<ClosureWitness> Closure::orbit_closure_contains(const OrbitLabel& a,
                                                              const OrbitLabel& b,
                                                              std::uint64_t bound) const {
  pieces_.require_min_rep(a.x, a.J);
  pieces_.require_min_rep(b.x, b.J);
  const SimpleSubset J = a.J, K = b.J;
  if (!K.subset_of(J)) return std::nullopt;

  const int lw = W_.length(a.w);
  const auto WK = W_.enumerate_parabolic(K, bound);
  for (const WeylElem& v : W_.enumerate_parabolic(J, bound)) {
    if (!W_.is_min_rep(v, K, Side::Right)) continue; // need v in W_J intersect W^K
    const WeylElem wv = a.w * v;
    if (W_.length(wv) != lw + W_.length(v)) continue;
    const WeylElem xv = a.x * v;
    for (const WeylElem& u : WK) {
      if (!W_.bruhat_leq(xv * W_.inverse(u), b.x)) continue;
      if (!W_.bruhat_leq(b.w * u, wv)) continue;
      return ClosureWitness{u, v};
    }
  }
  return std::nullopt;
}

std::vector<PieceLabel> Closure::boundary_pieces(std::uint64_t bound) const {
  const SimpleSubset I = rs_.full_set();
  std::vector<PieceLabel> out;
  const auto all = W_.enumerate(bound);
  for (const SimpleSubset& J : pieces_.subsets_by_size_desc()) {
    if (J == I) continue;
    for (const WeylElem& w : all)
      if (W_.support(w) == I && W_.is_min_rep(w, J, Side::Right)) out.push_back({J, w});
  }
  return out;
}

QPoly Closure::boundary_count_poly(std::uint64_t bound) const {
  const SimpleSubset I = rs_.full_set();
  const WeylElem w0 = W_.longest_element();
  QPoly inner = QPoly::zero();
  for (const WeylElem& w : W_.enumerate(bound)) {
    if (W_.support(w) != I) continue;
    const WeylElem w0w = w0 * w;
    inner += QPoly::q_power(W_.length(w0w) + W_.descents_right(w0w).size());
  }
  return pieces_.poincare_poly(bound) * inner;
}

std::vector<PieceLabel> Closure::coxeter_piece_closure(int i, const WeylElem& w,
                                                       std::uint64_t bound) const {
  if (i < 1 || i > rs_.rank()) throw std::invalid_argument("index out of range");
  SimpleSubset J = rs_.full_set();
  J.erase(i);
  if (!is_coxeter(W_, w)) throw std::invalid_argument("element is not a Coxeter element");
  pieces_.require_min_rep(w, J);

  std::vector<PieceLabel> out;
  for (const PieceLabel& p : boundary_pieces(bound))
    if (p.J.subset_of(J)) out.push_back(p);
  return out;
}

} // namespace wcp
