#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dopfactor {

using BigInt = mpz_class;

/// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Exact square root in Q, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  return make_rational(sqrt(num), sqrt(den));
}

/// Generalized binomial coefficient C(1/2, i) = (1/2)(1/2 - 1)...(1/2 - i + 1) / i!.
inline Rational binom_half(std::size_t i) {
  Rational acc(1);
  const Rational half(1, 2);
  for (std::size_t k = 0; k < i; ++k) {
    acc *= half - Rational(static_cast<long>(k));
    acc /= Rational(static_cast<long>(k + 1));
  }
  return acc;
}

/// Decimal digit count of |n| (0 has one digit).
inline std::size_t decimal_digits(const BigInt& n) {
  std::string s = BigInt(abs(n)).get_str();
  return s.size();
}

}  // namespace dopfactor
