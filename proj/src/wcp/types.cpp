#include "wcp/types.hpp"

#include <sstream>
#include <stdexcept>

namespace wcp {

SeriesRank SeriesRank::parse(const std::string& text) {
  if (text.size() < 2 || text[0] < 'A' || text[0] > 'G')
    throw std::invalid_argument("bad type string: '" + text + "'");
  SeriesRank t;
  t.series = text[0];
  try {
    size_t pos = 0;
    t.rank = std::stoi(text.substr(1), &pos);
    if (pos + 1 != text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type string: '" + text + "'");
  }
  if (!t.valid())
    throw std::invalid_argument("invalid series/rank combination: '" + text + "'");
  return t;
}

std::string SeriesRank::str() const { return std::string(1, series) + std::to_string(rank); }

bool SeriesRank::valid() const {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

SimpleSubset SimpleSubset::of(std::initializer_list<int> indices) {
  SimpleSubset s;
  for (int i : indices) s.insert(i);
  return s;
}

SimpleSubset SimpleSubset::from_indices(const std::vector<int>& indices) {
  SimpleSubset s;
  for (int i : indices) s.insert(i);
  return s;
}

SimpleSubset SimpleSubset::parse(const std::string& text) {
  SimpleSubset s;
  if (text.empty() || text == "-") return s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = std::stoi(item);
    if (i < 1 || i > 32) throw std::invalid_argument("subset index out of range: " + item);
    s.insert(i);
  }
  return s;
}

int SimpleSubset::size() const {
  int c = 0;
  for (std::uint32_t b = bits_; b; b &= b - 1) ++c;
  return c;
}

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SimpleSubset::str() const {
  if (empty()) return "-";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty() || text == "-") return w;
  std::stringstream ss(text);
  int letter;
  while (ss >> letter) w.push_back(letter);
  if (!ss.eof()) throw std::invalid_argument("bad word: '" + text + "'");
  return w;
}

} // namespace wcp
