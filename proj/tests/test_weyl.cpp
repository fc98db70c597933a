#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wcp/errors.hpp"
#include "wcp/weyl.hpp"

using namespace wcp;

namespace {

// Independent model of W(A_{n-1}) as permutations of {0..n-1}; s_i swaps
// i-1, i.  Used to cross-check the matrix representation.
struct Perm {
  std::vector<int> p;
  static Perm id(int n) {
    Perm x;
    x.p.resize(n);
    std::iota(x.p.begin(), x.p.end(), 0);
    return x;
  }
  Perm mul(const Perm& o) const { // (this.o)(k) = this(o(k))
    Perm out = *this;
    for (size_t k = 0; k < p.size(); ++k) out.p[k] = p[o.p[k]];
    return out;
  }
  int inversions() const {
    int inv = 0;
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) ++inv;
    return inv;
  }
  bool operator==(const Perm&) const = default;
};

Perm perm_of_word(int n, const Word& w) {
  Perm out = Perm::id(n);
  for (int letter : w) {
    Perm s = Perm::id(n);
    std::swap(s.p[letter - 1], s.p[letter]);
    out = out.mul(s);
  }
  return out;
}

} // namespace

TEST_CASE("words, braid relation, involution") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  CHECK(W.from_word({}) == W.identity());
  CHECK(W.from_word({1, 1}) == W.identity());
  CHECK(W.from_word({1, 2, 1}) == W.from_word({2, 1, 2}));
  CHECK_THROWS_AS(W.from_word({3}), std::invalid_argument);
}

TEST_CASE("matrix model agrees with the permutation model (A3)") {
  RootSystem rs = RootSystem::build("A3");
  WeylOps W(rs);
  std::map<std::vector<int>, WeylElem> seen;
  for (const WeylElem& w : W.enumerate()) {
    const Word word = W.reduced_word(w);
    const Perm p = perm_of_word(4, word);
    CHECK(W.length(w) == p.inversions());
    CHECK(!seen.count(p.p));
    seen[p.p] = w;
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("length and longest element") {
  RootSystem a2 = RootSystem::build("A2");
  WeylOps W(a2);
  CHECK(W.length(W.identity()) == 0);
  CHECK(W.length(W.longest_element()) == 3);
  CHECK(W.longest_element() == W.from_word({1, 2, 1}));

  RootSystem g2 = RootSystem::build("G2");
  WeylOps Wg(g2);
  CHECK(Wg.length(Wg.longest_element()) == 6);
  CHECK(Wg.longest_element(SimpleSubset::empty_set()) == Wg.identity());
  CHECK(Wg.longest_element(SimpleSubset::of({1})) == Wg.from_word({1}));
}

TEST_CASE("reduced word picks the smallest descent") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  CHECK(W.reduced_word(W.identity()).empty());
  CHECK(W.reduced_word(W.from_word({1, 2})) == Word{1, 2});
  CHECK(W.reduced_word(W.longest_element()) == Word{1, 2, 1});
}

TEST_CASE("descents") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  CHECK(W.descents_right(W.identity()).empty());
  CHECK(W.descents_right(W.longest_element()) == rs.full_set());
  CHECK(W.descents_left(W.longest_element()) == rs.full_set());
  // s1 s2 has right descent {2} and left descent {1}.
  const WeylElem w = W.from_word({1, 2});
  CHECK(W.descents_right(w) == SimpleSubset::of({2}));
  CHECK(W.descents_left(w) == SimpleSubset::of({1}));
}

TEST_CASE("support") {
  RootSystem rs = RootSystem::build("A3");
  WeylOps W(rs);
  CHECK(W.support(W.identity()).empty());
  CHECK(W.support(W.from_word({1, 2})) == SimpleSubset::of({1, 2}));
  CHECK(W.support(W.longest_element()) == rs.full_set());
}

TEST_CASE("minimal coset representatives") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  const SimpleSubset J = SimpleSubset::of({1});
  CHECK(W.is_min_rep(W.identity(), J, Side::Right));
  CHECK(W.is_min_rep(W.from_word({1, 2}), J, Side::Right));
  CHECK_FALSE(W.is_min_rep(W.from_word({2, 1}), J, Side::Right));
  CHECK(W.is_min_rep(W.from_word({2, 1}), J, Side::Left));
}

TEST_CASE("coset decomposition") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  const SimpleSubset J = SimpleSubset::of({1});
  auto [x, z] = W.coset_decompose(W.longest_element(), J);
  CHECK(x == W.from_word({1, 2}));
  CHECK(z == W.from_word({1}));

  auto [x2, z2] = W.coset_decompose(W.identity(), J);
  CHECK(x2 == W.identity());
  CHECK(z2 == W.identity());

  // Bijection W -> W^J x W_J with additive lengths, exhaustively for rank <= 3.
  for (const char* t : {"A3", "B3"}) {
    RootSystem r3 = RootSystem::build(t);
    WeylOps W3(r3);
    for (std::uint32_t bits = 0; bits < (1u << r3.rank()); ++bits) {
      const SimpleSubset Jb(bits);
      std::set<std::pair<WeylElem, WeylElem>> images;
      for (const WeylElem& w : W3.enumerate()) {
        auto [xx, zz] = W3.coset_decompose(w, Jb);
        CHECK(W3.is_min_rep(xx, Jb, Side::Right));
        CHECK(W3.in_parabolic(zz, Jb));
        CHECK(xx * zz == w);
        CHECK(W3.length(xx) + W3.length(zz) == W3.length(w));
        images.insert({xx, zz});
      }
      CHECK(images.size() == W3.enumerate().size());
    }
  }
}

TEST_CASE("minimal double coset representatives") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  const SimpleSubset J = SimpleSubset::of({1});
  CHECK(W.min_double_rep(W.identity(), J, J) == W.identity());
  // The double coset of w0 with J = K = {1} has minimal element s2.
  CHECK(W.min_double_rep(W.longest_element(), J, J) == W.from_word({2}));
  // Fixpoint on elements already minimal on both sides.
  for (const WeylElem& w : W.enumerate_double_reps(J, J))
    CHECK(W.min_double_rep(w, J, J) == w);
}

TEST_CASE("bruhat order") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  const WeylElem w0 = W.longest_element();
  for (const WeylElem& w : W.enumerate()) CHECK(W.bruhat_leq(W.identity(), w));
  CHECK(W.bruhat_leq(W.from_word({1, 2}), W.from_word({1, 2, 1})));
  CHECK_FALSE(W.bruhat_leq(W.from_word({1, 2}), W.from_word({2, 1})));
  CHECK(W.bruhat_leq(w0, w0));
  CHECK_FALSE(W.bruhat_leq(w0, W.from_word({1, 2})));
}

TEST_CASE("enumeration: orders, determinism, refusal") {
  RootSystem a2 = RootSystem::build("A2");
  WeylOps W(a2);
  const auto all = W.enumerate();
  CHECK(all.size() == 6);
  CHECK(all.front() == W.identity());
  CHECK(all == W.enumerate()); // deterministic

  const auto reps = W.enumerate_min_reps(SimpleSubset::of({1}), Side::Right);
  CHECK(reps.size() == 3);
  CHECK(reps[0] == W.identity());
  CHECK(reps[1] == W.from_word({2}));
  CHECK(reps[2] == W.from_word({1, 2}));

  RootSystem f4 = RootSystem::build("F4");
  WeylOps Wf(f4);
  CHECK(Wf.enumerate().size() == 1152);

  RootSystem e7 = RootSystem::build("E7");
  WeylOps We(e7);
  CHECK_THROWS_AS(We.enumerate(), BoundExceeded);
  CHECK_NOTHROW(We.enumerate_parabolic(SimpleSubset::of({1, 3, 4})));
}

TEST_CASE("|W^J| |W_J| = |W| for every J, rank <= 4") {
  for (const char* t : {"A4", "B4", "D4", "F4"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    const auto all = W.enumerate();
    for (std::uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
      const SimpleSubset J(bits);
      const size_t reps = W.enumerate_min_reps(J, Side::Right).size();
      const size_t par = W.enumerate_parabolic(J).size();
      CHECK(reps * par == all.size());
      CHECK(Int(par) == rs.parabolic_order(J));
    }
  }
}

TEST_CASE("length is subadditive with equality iff reduced concatenation (rank <= 3)") {
  RootSystem rs = RootSystem::build("B3");
  WeylOps W(rs);
  const auto all = W.enumerate();
  for (const WeylElem& u : all)
    for (const WeylElem& v : all) {
      const int l = W.length(u * v);
      CHECK(l <= W.length(u) + W.length(v));
      CHECK((l - (W.length(u) + W.length(v))) % 2 == 0);
    }
}

TEST_CASE("inverse and power") {
  RootSystem rs = RootSystem::build("G2");
  WeylOps W(rs);
  for (const WeylElem& w : W.enumerate()) {
    CHECK(w * W.inverse(w) == W.identity());
    CHECK(W.power(w, 3) == w * w * w);
    CHECK(W.power(w, -1) == W.inverse(w));
    CHECK(W.power(w, 0) == W.identity());
  }
}

TEST_CASE("coweight action preserves the pairing") {
  RootSystem rs = RootSystem::build("F4");
  WeylOps W(rs);
  const WeylElem w = W.from_word({1, 2, 3, 2, 4});
  const CoweightVec mu = rs.fundamental_coweight(2);
  for (int j = 1; j <= rs.rank(); ++j) {
    const Rat lhs = rs.pairing(W.act_coweight(w, mu), w.act(rs.simple_root(j)));
    CHECK(lhs == rs.pairing(mu, rs.simple_root(j)));
  }
}

#include "oracles.hpp"

TEST_CASE("bruhat order agrees with the covering-relation oracle (rank <= 3)") {
  for (const char* t : {"A2", "B2", "G2", "A3", "B3"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    const wcp::testing::BruhatOracle oracle(W);
    const auto all = W.enumerate();
    for (const WeylElem& u : all)
      for (const WeylElem& w : all) CHECK(W.bruhat_leq(u, w) == oracle(u, w));
  }
}

TEST_CASE("bruhat order is a partial order (rank <= 2 exhaustive)") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    const auto all = W.enumerate();
    for (const WeylElem& u : all) {
      CHECK(W.bruhat_leq(u, u));
      for (const WeylElem& v : all) {
        if (W.bruhat_leq(u, v) && W.bruhat_leq(v, u)) CHECK(u == v);
        for (const WeylElem& w : all)
          if (W.bruhat_leq(u, v) && W.bruhat_leq(v, w)) CHECK(W.bruhat_leq(u, w));
      }
    }
  }
}

TEST_CASE("descents vanish only at the identity; L(w0 w) always computable") {
  RootSystem rs = RootSystem::build("B3");
  WeylOps W(rs);
  const WeylElem w0 = W.longest_element();
  for (const WeylElem& w : W.enumerate()) {
    CHECK((W.descents_right(w).empty()) == (w == W.identity()));
    const SimpleSubset L = W.descents_right(w0 * w);
    if (!(w == W.identity())) CHECK(L != rs.full_set());
    // w in W^J iff J inside L(w0 w).
    for (std::uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
      const SimpleSubset J(bits);
      CHECK(W.is_min_rep(w, J, Side::Right) == J.subset_of(L));
    }
  }
}
