#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcp/numeric.hpp"
#include "wcp/types.hpp"

namespace wcp {

// Integer coordinates in the simple-root basis.
using RootVec = std::vector<int>;

// Rational coordinates in the simple-coroot basis.
using CoweightVec = std::vector<Rat>;

std::string root_str(const RootVec& v);         // e.g. "a1+2a3"
std::string coweight_str(const CoweightVec& v); // e.g. "2/3 av1 + 1/3 av2"

bool is_zero(const RootVec& v);
bool is_zero(const CoweightVec& v);
RootVec negate(const RootVec& v);
CoweightVec coweight_sub(const CoweightVec& a, const CoweightVec& b);
CoweightVec coweight_add(const CoweightVec& a, const CoweightVec& b);
CoweightVec coweight_scale(const Rat& c, const CoweightVec& a);

// Cartan data of one irreducible type, Bourbaki labelling.  Immutable after
// construction; safe for concurrent reads.
class RootSystem {
public:
  explicit RootSystem(SeriesRank type);
  static RootSystem build(const std::string& type) { return RootSystem(SeriesRank::parse(type)); }

  const SeriesRank& type() const { return type_; }
  int rank() const { return n_; }
  SimpleSubset full_set() const { return SimpleSubset::full(n_); }

  // c[i][j] = <alpha^vee_i, alpha_j>, 1-based indices.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  // Half the squared length of alpha_i, normalised so short roots have d = 1.
  int symmetrizer(int i) const { return dsym_[i - 1]; }

  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }
  bool is_positive_root(const RootVec& v) const;
  bool is_root(const RootVec& v) const;
  RootVec simple_root(int i) const;
  CoweightVec simple_coroot(int i) const;
  RootVec highest_root() const { return positive_roots_.back(); }

  // Simple reflections on both coordinate systems.
  RootVec reflect_root(int i, const RootVec& v) const;
  CoweightVec reflect_coweight(int i, const CoweightVec& v) const;

  // <lambda, beta> via the Cartan matrix.
  Rat pairing(const CoweightVec& lambda, const RootVec& beta) const;

  // omega^vee_i: <omega^vee_i, alpha_j> = delta_ij.
  CoweightVec fundamental_coweight(int i) const;
  CoweightVec zero_coweight() const { return CoweightVec(n_, Rat(0)); }

  // I(lambda): simple indices orthogonal to lambda.
  SimpleSubset orthogonal_simple_set(const CoweightVec& lambda) const;

  bool adjacent(int i, int j) const { return i != j && cartan_[i - 1][j - 1] != 0; }

  // Order of the parabolic subgroup W_J, from the classification of the
  // induced subdiagram.
  Int parabolic_order(SimpleSubset J) const;
  Int weyl_order() const { return parabolic_order(full_set()); }

  // Internals used by Weyl-element arithmetic: adj(B) and det(B) for the
  // symmetrised Cartan matrix B = diag(d) * C.
  const std::vector<std::vector<long long>>& adjB() const { return adjB_; }
  long long detB() const { return detB_; }

private:
  void check_dims(size_t got, const char* what) const;

  SeriesRank type_;
  int n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> dsym_;
  std::vector<RootVec> positive_roots_;
  std::vector<std::vector<long long>> adjB_;
  long long detB_;
};

} // namespace wcp
