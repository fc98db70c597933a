#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wcp/rootsys.hpp"
#include "wcp/types.hpp"

namespace wcp {

// A Weyl-group element, canonically represented by the integer matrix of its
// action on the simple-root basis.  Equality of elements is equality of
// matrices.  Elements are immutable values; composition is matrix product
// ((u*v)(x) = u(v(x))).
class WeylElem {
public:
  WeylElem() = default;
  static WeylElem identity(int rank);

  int rank() const { return n_; }
  bool is_identity() const;
  int entry(int r, int c) const { return a_[(r - 1) * n_ + (c - 1)]; } // 1-based

  WeylElem operator*(const WeylElem& o) const;
  RootVec act(const RootVec& v) const; // image in the simple-root basis

  friend bool operator==(const WeylElem&, const WeylElem&) = default;
  friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.a_ < b.a_; }

  size_t hash() const;

private:
  friend class WeylOps;
  int n_ = 0;
  std::vector<int8_t> a_; // row-major; a_[r*n+c] = coeff of alpha_{r+1} in w(alpha_{c+1})
};

struct WeylElemHash {
  size_t operator()(const WeylElem& w) const { return w.hash(); }
};

enum class Side { Left, Right };

inline constexpr std::uint64_t kDefaultEnumBound = 1'000'000;

// Weyl-group arithmetic over a fixed root system.  Stateless apart from the
// (immutable) root system reference; safe for concurrent use.
class WeylOps {
public:
  explicit WeylOps(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }

  WeylElem identity() const { return WeylElem::identity(rs_.rank()); }
  WeylElem simple_reflection(int i) const;
  WeylElem from_word(const Word& word) const;
  WeylElem inverse(const WeylElem& w) const;
  WeylElem power(const WeylElem& w, int k) const; // negative k allowed

  // Sparse products with a simple reflection.
  WeylElem mult_simple_left(int i, const WeylElem& w) const;  // s_i * w
  WeylElem mult_simple_right(const WeylElem& w, int i) const; // w * s_i

  // Action on the coweight lattice, exact rational arithmetic.
  CoweightVec act_coweight(const WeylElem& w, const CoweightVec& v) const;

  int length(const WeylElem& w) const; // inversion count over positive roots
  Word reduced_word(const WeylElem& w) const; // smallest-descent-first, deterministic
  SimpleSubset support(const WeylElem& w) const;
  SimpleSubset descents_right(const WeylElem& w) const; // L(w) = {i | w s_i < w}
  SimpleSubset descents_left(const WeylElem& w) const;  // {i | s_i w < w}

  WeylElem longest_element(SimpleSubset J) const; // w_0^J
  WeylElem longest_element() const { return longest_element(rs_.full_set()); }

  bool is_min_rep(const WeylElem& w, SimpleSubset J, Side side) const;
  bool in_parabolic(const WeylElem& w, SimpleSubset J) const; // w in W_J

  // w = x. z with x in W^J, z in W_J, l(w) = l(x) + l(z).
  struct CosetPair {
    WeylElem x;
    WeylElem z;
  };
  CosetPair coset_decompose(const WeylElem& w, SimpleSubset J) const;
  // w = z . x with z in W_J, x in ^JW.
  CosetPair coset_decompose_left(const WeylElem& w, SimpleSubset J) const;
  // Minimal-length element of W_J w W_K.
  WeylElem min_double_rep(const WeylElem& w, SimpleSubset J, SimpleSubset K) const;

  // Bruhat order via the subword property.
  bool bruhat_leq(const WeylElem& u, const WeylElem& w) const;

  // Ad(w)J as an index set; nullopt if some w(alpha_j) is not simple.
  std::optional<SimpleSubset> ad_image(const WeylElem& w, SimpleSubset J) const;
  // Index i when v is alpha_i, else 0.
  int simple_index(const RootVec& v) const;

  // Full enumerations, deterministic order (length, then lexicographic
  // canonical reduced word).  Throw BoundExceeded when the group order
  // exceeds the bound.
  std::vector<WeylElem> enumerate(std::uint64_t bound = kDefaultEnumBound) const;
  std::vector<WeylElem> enumerate_parabolic(SimpleSubset J,
                                            std::uint64_t bound = kDefaultEnumBound) const;
  std::vector<WeylElem> enumerate_min_reps(SimpleSubset J, Side side,
                                           std::uint64_t bound = kDefaultEnumBound) const;
  std::vector<WeylElem> enumerate_double_reps(SimpleSubset J, SimpleSubset K,
                                              std::uint64_t bound = kDefaultEnumBound) const;

  bool root_is_negative(const RootVec& v) const;

private:
  void check_rank(const WeylElem& w) const;
  std::vector<WeylElem> bfs(const std::vector<int>& generators, std::uint64_t bound,
                            const Int& order) const;

  const RootSystem& rs_;
};

} // namespace wcp
