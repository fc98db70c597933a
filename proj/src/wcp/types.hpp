#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcp {

// Irreducible series A..G with its rank, e.g. {A,3} or {G,2}.
struct SeriesRank {
  char series = 'A'; // one of 'A'..'G'
  int rank = 1;

  static SeriesRank parse(const std::string& text); // "A3", "E8", ...
  std::string str() const;
  bool valid() const;

  friend bool operator==(const SeriesRank&, const SeriesRank&) = default;
};

// Subset of the simple-root index set I = {1..rank}; bitmask semantics,
// bit j-1 stands for index j.
class SimpleSubset {
public:
  SimpleSubset() = default;
  explicit SimpleSubset(std::uint32_t bits) : bits_(bits) {}

  static SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1u); }
  static SimpleSubset empty_set() { return SimpleSubset(0); }
  static SimpleSubset of(std::initializer_list<int> indices);
  static SimpleSubset from_indices(const std::vector<int>& indices);
  // Parses "1,3"; "-" and "" mean the empty set.
  static SimpleSubset parse(const std::string& text);

  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  void insert(int i) { bits_ |= (1u << (i - 1)); }
  void erase(int i) { bits_ &= ~(1u << (i - 1)); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::uint32_t bits() const { return bits_; }

  bool subset_of(const SimpleSubset& other) const { return (bits_ & ~other.bits_) == 0; }
  SimpleSubset intersect(const SimpleSubset& o) const { return SimpleSubset(bits_ & o.bits_); }
  SimpleSubset unite(const SimpleSubset& o) const { return SimpleSubset(bits_ | o.bits_); }
  SimpleSubset minus(const SimpleSubset& o) const { return SimpleSubset(bits_ & ~o.bits_); }

  std::vector<int> indices() const; // ascending, 1-based
  std::string str() const;          // "1,3" or "-" for the empty set

  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;
  friend bool operator<(const SimpleSubset& a, const SimpleSubset& b) { return a.bits_ < b.bits_; }

private:
  std::uint32_t bits_ = 0;
};

// A word in the simple reflections: a sequence of 1-based indices.
using Word = std::vector<int>;

std::string word_str(const Word& w);          // "2 1 3 2"; "-" for the empty word
Word parse_word(const std::string& text);     // inverse of word_str

} // namespace wcp
