#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace permfft {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline double to_double(const Rational& v) { return v.get_d(); }

inline double to_double(double v) { return v; }

// Narrowing with a range check; counts that feed array sizes must fit.
std::uint64_t to_u64(const BigInt& v);

// Arithmetic policy used by the templated linear algebra: exact rationals
// compare against zero exactly, doubles against an absolute tolerance.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static Rational from_rational(const Rational& v) { return v; }
  static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double zero_tolerance = 1e-11;
  static bool is_zero(double v) { return std::abs(v) < zero_tolerance; }
  static double from_rational(const Rational& v) { return v.get_d(); }
  static double magnitude(double v) { return std::abs(v); }
};

}  // namespace permfft
