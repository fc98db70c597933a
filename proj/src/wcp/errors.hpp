#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wcp {

// Thrown when a requested enumeration would exceed the configured bound.
class BoundExceeded : public std::runtime_error {
public:
  BoundExceeded(std::string order, std::uint64_t bound)
      : std::runtime_error("enumeration refused: group order " + order + " exceeds bound " +
                           std::to_string(bound)),
        order_(std::move(order)), bound_(bound) {}

  const std::string& order() const { return order_; }
  std::uint64_t bound() const { return bound_; }

private:
  std::string order_;
  std::uint64_t bound_;
};

// Thrown by the case verifier when no transcribed case data covers (type, i).
class UncoveredCase : public std::invalid_argument {
public:
  explicit UncoveredCase(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace wcp
