#pragma once

#include <string>
#include <vector>

namespace wcp {

// One verified claim; detail carries the two sides of a failed identity or a
// witness for a passed one.
struct CheckItem {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string claim, bool ok, std::string detail = "") {
    items.push_back({std::move(claim), ok, std::move(detail)});
  }
};

} // namespace wcp
