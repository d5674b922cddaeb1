#pragma once

// Canonical text form: terms in descending powers of D, each coefficient in
// descending powers of x, rationals as p/q, sqrt(a) printed literally. The
// output of render() for a polynomial-coefficient operator parses back to
// the same operator.

#include <cstddef>
#include <string>
#include <vector>

#include "dopfactor/reduce.hpp"

namespace dopfactor::cli {

namespace detail {

struct Signed {
  bool negative = false;
  std::string magnitude;  // "1" means unit
};

inline Signed signed_scalar(const Scalar& c) {
  const Rational& u = c.rational_part();
  const Rational& v = c.theta_part();
  if (c.is_rational()) return {u < 0, to_string(Rational(abs(u)))};
  const std::string root = "sqrt(" + to_string(c.base()) + ")";
  auto theta_term = [&](const Rational& mag) { return mag == 1 ? root : to_string(mag) + "*" + root; };
  if (u == 0) return {v < 0, theta_term(Rational(abs(v)))};
  return {false, "(" + to_string(u) + (v < 0 ? " - " : " + ") + theta_term(Rational(abs(v))) + ")"};
}

inline std::string monomial(std::size_t x_power, std::size_t d_power) {
  std::string out;
  auto append = [&](const char* sym, std::size_t k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += sym;
    if (k > 1) out += "^" + std::to_string(k);
  };
  append("x", x_power);
  append("D", d_power);
  return out;
}

inline void push_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

inline std::string join(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  return coeff + "*" + mono;
}

inline void append_poly_terms(std::string& out, const Poly& p, std::size_t d_power) {
  for (std::size_t j = p.size(); j-- > 0;) {
    const Scalar& c = p.coefficients()[j];
    if (c.is_zero()) continue;
    Signed s = signed_scalar(c);
    push_term(out, s.negative, join(s.magnitude, monomial(j, d_power)));
  }
}

}  // namespace detail

inline std::string render(const Scalar& c) {
  auto s = detail::signed_scalar(c);
  return s.negative ? "-" + s.magnitude : s.magnitude;
}

inline std::string render(const Poly& p) {
  std::string out;
  detail::append_poly_terms(out, p, 0);
  return out.empty() ? "0" : out;
}

inline std::string render(const RatFn& f) {
  if (f.is_polynomial()) return render(f.num());
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

inline std::string render(const Op& op) {
  std::string out;
  for (std::size_t i = op.coefficients().size(); i-- > 0;) detail::append_poly_terms(out, op.coefficients()[i], i);
  return out.empty() ? "0" : out;
}

/// Polynomial coefficients are expanded term by term; a proper fraction
/// N/M multiplying D^i is printed as "(N)/(M)*D^i".
inline std::string render(const RatOp& op) {
  std::string out;
  for (std::size_t i = op.coefficients().size(); i-- > 0;) {
    const RatFn& c = op.coefficients()[i];
    if (c.is_polynomial()) {
      detail::append_poly_terms(out, c.num(), i);
    } else {
      detail::push_term(out, false, detail::join(render(c), detail::monomial(0, i)));
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dopfactor::cli
