#include "wcp/pieces.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcp {

void Pieces::require_min_rep(const WeylElem& w, SimpleSubset J) const {
  if (!W_.is_min_rep(w, J, Side::Right))
    throw std::invalid_argument("element is not a minimal coset representative in W^J");
}

WeylElem Pieces::w_J_of(SimpleSubset J, const WeylElem& w) const {
  require_min_rep(w, J);
  return W_.longest_element() * W_.longest_element(J) * W_.inverse(w);
}

BetaChain Pieces::beta_sequence(SimpleSubset J, const WeylElem& w) const {
  require_min_rep(w, J);
  BetaChain chain;
  chain.w_J = w_J_of(J, w);

  WeylElem v = chain.w_J;                              // v_0 = w_J
  WeylElem y = W_.longest_element() * W_.longest_element(J); // y_0 = w_0 w_0^J
  SimpleSubset Jk = J;

  const int guard = 4 * rs_.rank() + 4;
  for (int k = 0; k <= guard; ++k) {
    auto Jp = W_.ad_image(y, Jk);
    if (!Jp) throw std::logic_error("Ad(y_k)J_k left the simple roots");

    const WeylElem u = W_.coset_decompose(v, Jk).x;
    const WeylElem u_inv = W_.inverse(u);
    const WeylElem y_next = u_inv * y;
    const WeylElem v_next = u_inv * v;

    // J_{k+1} = J_k intersect Ad(y_k^{-1} u_k) J_k: j survives iff
    // y_{k+1} = u_k^{-1} y_k carries alpha_j to a simple root of J_k.
    SimpleSubset J_next;
    for (int j : Jk.indices()) {
      const int image = W_.simple_index(y_next.act(rs_.simple_root(j)));
      if (image != 0 && Jk.contains(image)) J_next.insert(j);
    }

    chain.steps.push_back({Jk, *Jp, u, y, v});

    if (u.is_identity() && J_next == Jk) {
      if (!v_next.is_identity())
        throw std::logic_error("beta sequence stalled before exhausting w_J");
      chain.terminal = Jk;
      chain.terminal_y = y_next;
      return chain;
    }
    v = v_next;
    y = y_next;
    Jk = J_next;
  }
  throw std::logic_error("beta sequence failed to terminate within 4|I|+4 steps");
}

SimpleSubset Pieces::terminal_levi(SimpleSubset J, const WeylElem& w) const {
  return beta_sequence(J, w).terminal;
}

QPoly Pieces::poincare_poly(std::uint64_t bound) const {
  std::vector<Int> coeffs(rs_.positive_roots().size() + 1, Int(0));
  for (const WeylElem& w : W_.enumerate(bound)) ++coeffs[W_.length(w)];
  return QPoly(std::move(coeffs));
}

QPoly Pieces::piece_count_poly(const PieceLabel& p, std::uint64_t bound) const {
  return piece_count_poly(p, poincare_poly(bound));
}

QPoly Pieces::piece_count_poly(const PieceLabel& p, const QPoly& poincare) const {
  require_min_rep(p.w, p.J);
  const int l = W_.length(W_.longest_element() * p.w);
  return poincare * QPoly::q_minus_one_power(p.J.size()) * QPoly::q_power(l);
}

QPoly Pieces::group_compactification_count(std::uint64_t bound) const {
  const WeylElem w0 = W_.longest_element();
  QPoly inner = QPoly::zero();
  for (const WeylElem& w : W_.enumerate(bound)) {
    const WeylElem w0w = w0 * w;
    inner += QPoly::q_power(W_.length(w0w) + W_.descents_right(w0w).size());
  }
  return poincare_poly(bound) * inner;
}

std::vector<SimpleSubset> Pieces::subsets_by_size_desc() const {
  std::vector<SimpleSubset> subsets;
  for (std::uint32_t bits = 0; bits < (1u << rs_.rank()); ++bits)
    subsets.push_back(SimpleSubset(bits));
  std::sort(subsets.begin(), subsets.end(), [](const SimpleSubset& a, const SimpleSubset& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.indices() < b.indices();
  });
  return subsets;
}

std::vector<PieceLabel> Pieces::enumerate_pieces(std::uint64_t bound) const {
  std::vector<PieceLabel> out;
  const auto all = W_.enumerate(bound);
  for (const SimpleSubset& J : subsets_by_size_desc())
    for (const WeylElem& w : all)
      if (W_.is_min_rep(w, J, Side::Right)) out.push_back({J, w});
  return out;
}

} // namespace wcp
