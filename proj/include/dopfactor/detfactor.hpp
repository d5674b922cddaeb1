#pragma once

// Determining factors at infinity of order-2 Airy operators D^2 - Q.
//
// Only the derivative R = K' of a determining factor K is handled. For an
// even-degree Q = q_{2m} x^{2m} + ... the two branches are the polynomials R
// of degree m with deg(R^2 - Q) <= m - 1; they differ by sign.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "dopfactor/arith/polynomial.hpp"
#include "dopfactor/arith/quad_scalar.hpp"

namespace dopfactor {

using Scalar = QuadScalar;
using Poly = Polynomial<Scalar>;

class FieldExtensionRequired : public std::domain_error {
 public:
  explicit FieldExtensionRequired(const std::string& what) : std::domain_error(what) {}
};

class RamifiedBranch : public std::domain_error {
 public:
  RamifiedBranch() : std::domain_error("fractional ramification: no polynomial branch for odd deg Q") {}
};

struct DeterminingBranch {
  int epsilon = 1;
  Poly r;
};

/// Truncated square root of Q at infinity, branch epsilon = +1 or -1.
///
/// The top coefficient of R is epsilon*sqrt(lead Q); each lower coefficient
/// r_k (k = m-1, ..., 0) cancels the x^{m+k} coefficient of R^2 - Q.
inline DeterminingBranch sqrt_truncate(const Poly& q, int epsilon, const Rational& field_base) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  if (q.degree() < Degree(2)) throw std::invalid_argument("sqrt_truncate needs deg Q >= 2");
  const std::size_t deg = q.degree().value();
  if (deg % 2 == 1) throw RamifiedBranch();
  const std::size_t m = deg / 2;
  auto root = field_sqrt(q.leading(), field_base);
  if (!root)
    throw FieldExtensionRequired("leading coefficient " + to_string(q.leading()) + " has no square root in the field");
  std::vector<Scalar> r(m + 1, Scalar(0));
  r[m] = epsilon == 1 ? *root : -*root;
  const Scalar twice_lead = Scalar(2) * r[m];
  for (std::size_t k = m; k-- > 0;) {
    // x^{m+k} coefficient of R^2 from pairs (i, j), k < i, j < m.
    Scalar known(0);
    for (std::size_t i = k + 1; i < m; ++i) {
      const std::size_t j = m + k - i;
      if (j > k && j < m) known += r[i] * r[j];
    }
    r[k] = (q.coeff(m + k) - known) / twice_lead;
  }
  return {epsilon, Poly(std::move(r))};
}

/// S_{p,q} = D^2 - (a x^p + b x^q).
struct SetoyanagiParams {
  Scalar a;
  Scalar b;
  std::size_t p = 0;
  std::size_t q = 0;

  bool even() const { return p % 2 == 0; }
  std::size_t m() const { return p / 2; }
  /// floor(m / (2m - q)), the truncation order of the R series.
  std::size_t r() const { return m() / (2 * m() - q); }
  /// (m + 1)/(2m - q) when it is a natural number >= 1.
  std::optional<std::size_t> s() const {
    const std::size_t den = 2 * m() - q;
    if ((m() + 1) % den != 0) return std::nullopt;
    return (m() + 1) / den;
  }

  Poly potential() const { return Poly::monomial(a, p) + Poly::monomial(b, q); }

  void validate() const {
    if (q >= p) throw std::invalid_argument("Setoyanagi parameters need q < p");
    if (!even()) throw std::invalid_argument("Setoyanagi closed form needs even p");
    if (2 * m() <= q) throw std::invalid_argument("Setoyanagi closed form needs q < 2m");
  }
};

/// Closed form R = eps sqrt(a) x^m sum_{i=0}^{r} binom(1/2, i) (b/a)^i x^{i(q - 2m)}.
inline DeterminingBranch setoyanagi_r(const SetoyanagiParams& params, int epsilon, const Rational& field_base) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  if (!params.even()) throw std::invalid_argument("Setoyanagi closed form not applicable for odd p");
  params.validate();
  auto sqrt_a = field_sqrt(params.a, field_base);
  if (!sqrt_a) throw FieldExtensionRequired("a = " + to_string(params.a) + " has no square root in the field");
  const Scalar lead = epsilon == 1 ? *sqrt_a : -*sqrt_a;
  const Scalar ratio = params.b / params.a;
  const std::size_t m = params.m(), gap = 2 * m - params.q;
  Poly r;
  Scalar ratio_pow(1);
  for (std::size_t i = 0; i <= params.r(); ++i) {
    r += Poly::monomial(lead * Scalar(binom_half(i)) * ratio_pow, m - i * gap);
    ratio_pow *= ratio;
  }
  return {epsilon, r};
}

}  // namespace dopfactor
