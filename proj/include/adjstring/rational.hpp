#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace adjstring {

/// Exact arbitrary-precision rational scalar. Everything in this library is
/// computed over Q; there is no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline Rat rat_from_string(const std::string& s) {
  return Rat(s);
}

}  // namespace adjstring
