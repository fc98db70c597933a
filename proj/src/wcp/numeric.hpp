#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wcp {

// All point-count and coweight arithmetic is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace wcp
