#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace parabolica {

using Rational = mpq_class;
using BigInt = mpz_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "a" or "a/b" in decimal; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace parabolica
