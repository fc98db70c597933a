#pragma once

#include <string>
#include <vector>

#include "wcp/numeric.hpp"

namespace wcp {

// Polynomial in q with arbitrary-precision integer coefficients, dense,
// lowest degree first.  Exact arithmetic, no truncation.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(Int constant);
  explicit QPoly(std::vector<Int> coeffs); // ascending; trailing zeros trimmed

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Int(1)); }
  static QPoly q_power(int k); // q^k
  static QPoly q_minus_one_power(int k); // (q-1)^k

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const;
  Int eval(const Int& q) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  // Ascending, explicit coefficients: "1 + 2q + 2q^2 + q^3"; "0" for zero.
  std::string str() const;

private:
  void trim();
  std::vector<Int> c_;
};

} // namespace wcp
