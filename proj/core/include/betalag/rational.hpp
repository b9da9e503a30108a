#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace betalag {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

// Minimal scalar abstraction shared by the double and exact-rational paths of
// the symbolic machinery (Jack recursion, binomials, operator matrices).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  static double from_int(long long v) { return static_cast<double>(v); }
  static bool is_zero(double v) { return v == 0.0; }
  static double abs_to_double(double v) { return std::abs(v); }
};

template <>
struct ScalarOps<Rational> {
  static Rational from_int(long long v) { return Rational(v); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static double abs_to_double(const Rational& v) {
    return std::abs(to_double(v));
  }
};

}  // namespace betalag
