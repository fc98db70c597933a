#include "wcp/qpoly.hpp"

#include <stdexcept>

namespace wcp {

QPoly::QPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::q_power(int k) {
  if (k < 0) throw std::invalid_argument("negative q power");
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return QPoly(std::move(c));
}

QPoly QPoly::q_minus_one_power(int k) {
  QPoly qm1(std::vector<Int>{Int(-1), Int(1)});
  QPoly out = QPoly::one();
  for (int i = 0; i < k; ++i) out *= qm1;
  return out;
}

Int QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Int QPoly::eval(const Int& q) const {
  Int out = 0;
  for (size_t k = c_.size(); k-- > 0;) out = out * q + c_[k];
  return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] -= o.c_[k];
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
  }
  return QPoly(std::move(c));
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str();
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace wcp
