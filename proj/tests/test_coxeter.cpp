#include <doctest.h>

#include <set>

#include "wcp/coxeter.hpp"

using namespace wcp;

TEST_CASE("is_coxeter") {
  RootSystem a2 = RootSystem::build("A2");
  WeylOps W(a2);
  CHECK(is_coxeter(W, W.from_word({1, 2})));
  CHECK_FALSE(is_coxeter(W, W.longest_element()));
  RootSystem a3 = RootSystem::build("A3");
  WeylOps W3(a3);
  CHECK_FALSE(is_coxeter(W3, W3.from_word({1, 3})));
}

TEST_CASE("enumerate_coxeter counts and agreement with the W filter") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(enumerate_coxeter(WeylOps(a1)).size() == 1);
  RootSystem a2 = RootSystem::build("A2");
  CHECK(enumerate_coxeter(WeylOps(a2)).size() == 2);
  // A3 has 4 distinct Coxeter elements (one per orientation of the diagram).
  RootSystem a3 = RootSystem::build("A3");
  WeylOps W3(a3);
  const auto cox = enumerate_coxeter(W3);
  CHECK(cox.size() == 4);
  // Dedupe over all 3! = 6 orderings gives the same set.
  std::set<WeylElem> via_perms;
  std::vector<int> perm{1, 2, 3};
  do {
    via_perms.insert(W3.from_word(Word(perm.begin(), perm.end())));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(via_perms == std::set<WeylElem>(cox.begin(), cox.end()));

  for (const char* t : {"A4", "B4", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    std::set<WeylElem> filtered;
    for (const WeylElem& w : W.enumerate())
      if (is_coxeter(W, w)) filtered.insert(w);
    const auto gen = enumerate_coxeter(W);
    CHECK(std::set<WeylElem>(gen.begin(), gen.end()) == filtered);
  }
}

TEST_CASE("conjugating sequence") {
  RootSystem a2 = RootSystem::build("A2");
  WeylOps W(a2);
  const WeylElem c = W.from_word({1, 2}), c2 = W.from_word({2, 1});
  CHECK(conjugating_sequence(W, c, c, 1).empty());
  const Word g = conjugating_sequence(W, c, c2, 1);
  for (int letter : g) CHECK(letter != 1);
  const WeylElem ge = W.from_word(g);
  CHECK(ge * c * W.inverse(ge) == c2);

  RootSystem a3 = RootSystem::build("A3");
  WeylOps W3(a3);
  const Word g3 =
      conjugating_sequence(W3, W3.from_word({1, 2, 3}), W3.from_word({3, 2, 1}), 2);
  for (int letter : g3) CHECK(letter != 2);
}

TEST_CASE("coxeter_below") {
  RootSystem a2 = RootSystem::build("A2");
  WeylOps W(a2);
  const WeylElem c = W.from_word({1, 2});
  CHECK(coxeter_below(W, SimpleSubset::empty_set(), c) == c);
  const WeylElem below = coxeter_below(W, SimpleSubset::empty_set(), W.longest_element());
  CHECK(is_coxeter(W, below));
  CHECK(W.bruhat_leq(below, W.longest_element()));

  RootSystem a3 = RootSystem::build("A3");
  WeylOps W3(a3);
  const SimpleSubset J = SimpleSubset::of({1, 3});
  const WeylElem w = W3.from_word({2, 1, 3, 2});
  const WeylElem b3 = coxeter_below(W3, J, w);
  CHECK(is_coxeter(W3, b3));
  CHECK(W3.is_min_rep(b3, J, Side::Right));
  CHECK(W3.bruhat_leq(b3, w));

  CHECK_THROWS_AS(coxeter_below(W3, J, W3.from_word({2})), std::invalid_argument);
}

TEST_CASE("layers") {
  RootSystem a3 = RootSystem::build("A3");
  CHECK(layers(a3, 2) ==
        std::vector<SimpleSubset>{SimpleSubset::of({2}), SimpleSubset::of({1, 3})});
  CHECK(layers(a3, 1) == std::vector<SimpleSubset>{SimpleSubset::of({1}), SimpleSubset::of({2}),
                                                   SimpleSubset::of({3})});
  RootSystem g2 = RootSystem::build("G2");
  CHECK(layers(g2, 1) == std::vector<SimpleSubset>{SimpleSubset::of({1}), SimpleSubset::of({2})});
}

TEST_CASE("w^J from layers") {
  RootSystem a3 = RootSystem::build("A3");
  WeylOps W3(a3);
  CHECK(w_J_coxeter(W3, 2) == W3.from_word({1, 3, 2}));
  RootSystem g2 = RootSystem::build("G2");
  WeylOps Wg(g2);
  CHECK(w_J_coxeter(Wg, 1) == Wg.from_word({2, 1}));

  // Closed form for the A series: w^J = s_{[i+1, n-1]} s_{[1, i]}^{-1}.
  for (int n = 2; n <= 12; ++n) {
    RootSystem rs(SeriesRank{'A', n - 1});
    WeylOps W(rs);
    for (int i = 1; 2 * i <= n; ++i) {
      Word word;
      for (int k = n - 1; k >= i + 1; --k) word.push_back(k);
      for (int k = 1; k <= i; ++k) word.push_back(k);
      CHECK(w_J_coxeter(W, i) == W.from_word(word));
    }
  }

  // Coxeter in W^{I-{i}}, every type, rank <= 8.
  for (const char* t : {"A8", "B8", "C8", "D8", "E8", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    for (int i = 1; i <= rs.rank(); ++i) {
      SimpleSubset J = rs.full_set();
      J.erase(i);
      const WeylElem wj = w_J_coxeter(W, i);
      CHECK(is_coxeter(W, wj));
      CHECK(W.is_min_rep(wj, J, Side::Right));
    }
  }
}

TEST_CASE("layer chain closed forms") {
  for (const char* t : {"G2", "A3", "F4", "E6"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    for (int i = 1; i <= rs.rank(); ++i) {
      const Report rep = check_layer_chain_closed_forms(W, i);
      CHECK_MESSAGE(rep.pass(), rep.name);
    }
  }
}
