#include <doctest.h>

#include <map>
#include <set>

#include "wcp/closure.hpp"
#include "wcp/coxeter.hpp"

using namespace wcp;

TEST_CASE("normalize orbit") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  Closure C(rs);
  const SimpleSubset J = SimpleSubset::of({1});

  // u already minimal: unchanged.
  const OrbitLabel o1 = C.normalize_orbit(J, W.from_word({1, 2}), W.from_word({2}));
  CHECK(o1.x == W.from_word({1, 2}));
  CHECK(o1.w == W.from_word({2}));

  // u = w0 = (s1 s2) s1, v = 1 -> (J, s1 s2, s1).
  const OrbitLabel o2 = C.normalize_orbit(J, W.longest_element(), W.identity());
  CHECK(o2.x == W.from_word({1, 2}));
  CHECK(o2.w == W.from_word({1}));

  // J empty: always unchanged.
  for (const WeylElem& u : W.enumerate()) {
    const OrbitLabel o = C.normalize_orbit(SimpleSubset::empty_set(), u, W.identity());
    CHECK(o.x == u);
    CHECK(o.w == W.identity());
  }
}

TEST_CASE("closure criterion, frozen examples") {
  RootSystem rs = RootSystem::build("A2");
  WeylOps W(rs);
  Closure C(rs);
  const SimpleSubset J1 = SimpleSubset::of({1});

  // [J,w,1] contains [J,w',1] when w <= w'.
  auto w1 = C.orbit_closure_contains({J1, W.from_word({2}), W.identity()},
                                     {J1, W.from_word({1, 2}), W.identity()});
  REQUIRE(w1.has_value());
  CHECK(w1->u == W.identity());
  CHECK(w1->v == W.identity());

  // [K, wv, v] inside the closure of [J, w, 1], here v = s1.
  auto w2 = C.orbit_closure_contains({J1, W.from_word({2}), W.identity()},
                                     {SimpleSubset::empty_set(), W.from_word({2, 1}),
                                      W.from_word({1})});
  CHECK(w2.has_value());

  // K not inside J.
  auto w3 = C.orbit_closure_contains({SimpleSubset::empty_set(), W.from_word({1}), W.identity()},
                                     {J1, W.from_word({1, 2}), W.identity()});
  CHECK_FALSE(w3.has_value());
}

TEST_CASE("specializations (1) and (2) exhaustively at rank 2") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    WeylOps W(rs);
    Closure C(rs);
    const auto all = W.enumerate();
    for (std::uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
      const SimpleSubset J(bits);
      for (const WeylElem& w : W.enumerate_min_reps(J, Side::Right)) {
        for (const WeylElem& v : W.enumerate_parabolic(J))
          for (std::uint32_t kb = 0; kb < (1u << rs.rank()); ++kb) {
            const SimpleSubset K(kb);
            if (!K.subset_of(J)) continue;
            const OrbitLabel b = C.normalize_orbit(K, w * v, v);
            CHECK(C.orbit_closure_contains({J, w, W.identity()}, b).has_value());
          }
        for (const WeylElem& w2 : W.enumerate_min_reps(J, Side::Right)) {
          if (!W.bruhat_leq(w, w2)) continue;
          CHECK(C.orbit_closure_contains({J, w, W.identity()}, {J, w2, W.identity()})
                    .has_value());
        }
      }
    }
  }
}

TEST_CASE("boundary pieces") {
  RootSystem a1 = RootSystem::build("A1");
  WeylOps W1(a1);
  Closure C1(a1);
  const auto b1 = C1.boundary_pieces();
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].J.empty());
  CHECK(b1[0].w == W1.from_word({1}));

  RootSystem a2 = RootSystem::build("A2");
  WeylOps W2(a2);
  Closure C2(a2);
  const auto b2 = C2.boundary_pieces();
  REQUIRE(b2.size() == 5);
  std::set<std::pair<std::uint32_t, Word>> got;
  for (const PieceLabel& p : b2) got.insert({p.J.bits(), W2.reduced_word(p.w)});
  const std::set<std::pair<std::uint32_t, Word>> expect = {
      {SimpleSubset::of({1}).bits(), {1, 2}},
      {SimpleSubset::of({2}).bits(), {2, 1}},
      {0, {1, 2}},
      {0, {2, 1}},
      {0, {1, 2, 1}},
  };
  CHECK(got == expect);
}

TEST_CASE("boundary count polynomial") {
  RootSystem a1 = RootSystem::build("A1");
  CHECK(Closure(a1).boundary_count_poly() == QPoly(std::vector<Int>{1, 1}));

  RootSystem a2 = RootSystem::build("A2");
  const QPoly expect =
      QPoly(std::vector<Int>{1, 2, 2, 1}) * QPoly(std::vector<Int>{1, 0, 2});
  CHECK(Closure(a2).boundary_count_poly() == expect);

  // Double count against the per-piece sum, rank <= 3 types here.
  for (const char* t : {"A2", "B3", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    Closure C(rs);
    Pieces P(rs);
    const QPoly poincare = P.poincare_poly();
    QPoly total;
    for (const PieceLabel& p : C.boundary_pieces()) total += P.piece_count_poly(p, poincare);
    CHECK(total == C.boundary_count_poly());
  }
}

TEST_CASE("coxeter piece closure") {
  RootSystem a1 = RootSystem::build("A1");
  WeylOps W1(a1);
  Closure C1(a1);
  const auto cl1 = C1.coxeter_piece_closure(1, W1.from_word({1}));
  REQUIRE(cl1.size() == 1);
  CHECK(cl1[0].J.empty());

  RootSystem a2 = RootSystem::build("A2");
  WeylOps W2(a2);
  Closure C2(a2);
  const auto cl2 = C2.coxeter_piece_closure(2, W2.from_word({1, 2}));
  CHECK(cl2.size() == 4);
  // Always a subset of the boundary pieces.
  std::set<std::pair<std::uint32_t, Word>> boundary;
  for (const PieceLabel& p : C2.boundary_pieces())
    boundary.insert({p.J.bits(), W2.reduced_word(p.w)});
  for (const PieceLabel& p : cl2)
    CHECK(boundary.count({p.J.bits(), W2.reduced_word(p.w)}) == 1);

  CHECK_THROWS_AS(C2.coxeter_piece_closure(2, W2.longest_element()), std::invalid_argument);
  // w must lie in W^J for J = I - {i}: s2 s1 is not in W^{{1}}.
  CHECK_THROWS_AS(C2.coxeter_piece_closure(2, W2.from_word({2, 1})), std::invalid_argument);
}

TEST_CASE("every boundary piece dominates a Coxeter element of its W^K") {
  RootSystem rs = RootSystem::build("B3");
  WeylOps W(rs);
  Closure C(rs);
  for (const PieceLabel& p : C.boundary_pieces()) {
    bool some = false;
    for (const WeylElem& c : enumerate_coxeter(W))
      if (W.is_min_rep(c, p.J, Side::Right) && W.bruhat_leq(c, p.w)) some = true;
    CHECK(some);
  }
}
