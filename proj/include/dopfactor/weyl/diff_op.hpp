#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dopfactor/arith/matrix.hpp"
#include "dopfactor/arith/polynomial.hpp"
#include "dopfactor/arith/rational_function.hpp"

namespace dopfactor {

/// Linear differential operator sum_i c_i(x) D^i in standard form
/// (coefficients to the left of the powers of D).
///
/// C is the coefficient ring: Polynomial<F> for the Weyl algebra, or
/// RationalFunction<F> for operators over F(x). It must provide ring
/// operations, construction from integers and a derivative() overload.
template <class C>
class DiffOp {
 public:
  using Coeff = C;

  DiffOp() = default;
  DiffOp(C c) {
    if (!(c == C(0))) c_.push_back(std::move(c));
  }
  template <std::integral I>
  DiffOp(I n) : DiffOp(C(n)) {}
  explicit DiffOp(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The derivation D.
  static DiffOp d() { return DiffOp(std::vector<C>{C(0), C(1)}); }
  /// c * D^k.
  static DiffOp term(C c, std::size_t k) {
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return DiffOp(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  Degree order() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero operator");
    return c_.back();
  }
  const std::vector<C>& coefficients() const { return c_; }

  DiffOp operator-() const {
    DiffOp r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return DiffOp(std::move(v));
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

  /// Composition a o b, using D o f = f o D + f'.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      // D^i o b_j = sum_k binom(i, k) b_j^{(k)} D^{i-k}
      std::vector<C> derivs{b.c_[j]};
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == C(0)) continue;
        while (derivs.size() <= i) derivs.push_back(derivative(derivs.back()));
        BigInt binom = 1;
        for (std::size_t k = 0; k <= i; ++k) {
          if (!(derivs[k] == C(0))) out[i + j - k] = out[i + j - k] + a.c_[i] * scale(derivs[k], binom);
          binom = binom * (i - k) / (k + 1);
        }
      }
    }
    return DiffOp(std::move(out));
  }
  DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
  DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

 private:
  static C scale(const C& c, const BigInt& k) {
    if (k == 1) return c;
    return C(k.get_si()) * c;
  }

  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
DiffOp<C> pow(const DiffOp<C>& op, std::size_t k) {
  DiffOp<C> acc(C(1));
  for (std::size_t i = 0; i < k; ++i) acc = acc * op;
  return acc;
}

/// sum_i c_i f^{(i)}
template <class C>
C apply(const DiffOp<C>& op, const C& f) {
  C acc(0);
  C deriv = f;
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    if (i > 0) deriv = derivative(deriv);
    acc = acc + op.coefficients()[i] * deriv;
  }
  return acc;
}

class NonPolynomialResult : public std::domain_error {
 public:
  NonPolynomialResult() : std::domain_error("operator applied to polynomial has a non-polynomial result") {}
};

/// Applies an operator with rational-function coefficients to a polynomial,
/// requiring the result to be polynomial.
template <class F>
Polynomial<F> apply_to_polynomial(const DiffOp<RationalFunction<F>>& op, const Polynomial<F>& f) {
  auto r = apply(op, RationalFunction<F>(f)).as_polynomial();
  if (!r) throw NonPolynomialResult();
  return *r;
}

/// Adjoint sum_i (-D)^i o c_i, brought back to standard form.
template <class C>
DiffOp<C> adjoint(const DiffOp<C>& op) {
  DiffOp<C> acc;
  const DiffOp<C> minus_d = -DiffOp<C>::d();
  DiffOp<C> power(C(1));
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    if (i > 0) power = power * minus_d;
    acc += power * DiffOp<C>(op.coefficients()[i]);
  }
  return acc;
}

/// Algebraic Fourier transform x -> D, D -> -x on the Weyl algebra.
template <class F>
DiffOp<Polynomial<F>> fourier(const DiffOp<Polynomial<F>>& op) {
  using Op = DiffOp<Polynomial<F>>;
  const Op minus_x(-Polynomial<F>::x());
  Op acc;
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    const auto& ci = op.coefficients()[i];
    if (ci.is_zero()) continue;
    const Op tail = pow(minus_x, i);
    for (std::size_t j = 0; j < ci.size(); ++j) {
      if (ci.coefficients()[j] == F(0)) continue;
      acc += Op::term(Polynomial<F>(ci.coefficients()[j]), j) * tail;
    }
  }
  return acc;
}

/// [-1]^* : x -> -x, D -> -D.
template <class F>
DiffOp<Polynomial<F>> reflect(const DiffOp<Polynomial<F>>& op) {
  std::vector<Polynomial<F>> v;
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    std::vector<F> c(op.coefficients()[i].coefficients().begin(), op.coefficients()[i].coefficients().end());
    for (std::size_t j = 0; j < c.size(); ++j)
      if ((i + j) % 2 == 1) c[j] = -c[j];
    v.emplace_back(std::move(c));
  }
  return DiffOp<Polynomial<F>>(std::move(v));
}

/// Change of variable: every coefficient composed with x -> x + c.
template <class C, class F>
DiffOp<C> translate(const DiffOp<C>& op, const F& c) {
  std::vector<C> v;
  v.reserve(op.coefficients().size());
  for (const auto& ci : op.coefficients()) v.push_back(compose_shift(ci, c));
  return DiffOp<C>(std::move(v));
}

/// Gauge twist: substitutes D -> D + r, i.e. sum_i c_i (D + r)^i.
template <class C>
DiffOp<C> twist(const DiffOp<C>& op, const C& r) {
  const DiffOp<C> shifted = DiffOp<C>::d() + DiffOp<C>(r);
  DiffOp<C> acc;
  DiffOp<C> power(C(1));
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    if (i > 0) power = power * shifted;
    acc += DiffOp<C>(op.coefficients()[i]) * power;
  }
  return acc;
}

template <class F>
DiffOp<RationalFunction<F>> promote(const DiffOp<Polynomial<F>>& op) {
  std::vector<RationalFunction<F>> v;
  for (const auto& c : op.coefficients()) v.emplace_back(c);
  return DiffOp<RationalFunction<F>>(std::move(v));
}

/// Back to polynomial coefficients, if every coefficient is a polynomial.
template <class F>
std::optional<DiffOp<Polynomial<F>>> demote(const DiffOp<RationalFunction<F>>& op) {
  std::vector<Polynomial<F>> v;
  for (const auto& c : op.coefficients()) {
    auto p = c.as_polynomial();
    if (!p) return std::nullopt;
    v.push_back(std::move(*p));
  }
  return DiffOp<Polynomial<F>>(std::move(v));
}

template <class C>
struct DivisionResult {
  DiffOp<C> quotient;
  DiffOp<C> remainder;
};

/// Right division over a coefficient field: op = quotient o divisor + remainder,
/// order(remainder) < order(divisor).
template <class F>
DivisionResult<RationalFunction<F>> right_divide(const DiffOp<RationalFunction<F>>& op,
                                                 const DiffOp<RationalFunction<F>>& divisor) {
  using Op = DiffOp<RationalFunction<F>>;
  if (divisor.is_zero()) throw std::domain_error("right division by the zero operator");
  const std::size_t k = divisor.order().value();
  Op quotient, rem = op;
  while (rem.order() >= Degree(k)) {
    const std::size_t shift = rem.order().value() - k;
    Op t = Op::term(rem.leading() / divisor.leading(), shift);
    quotient += t;
    rem = rem - t * divisor;
  }
  return {std::move(quotient), std::move(rem)};
}

/// Matrix of f -> op(f) on polynomials of degree <= d in the monomial basis.
/// Column j is the image of x^j; row i holds the coefficient of x^i. There
/// are max(d + 1, 1 + highest image degree) rows.
template <class F>
Matrix<F> matrix_on_degree(const DiffOp<Polynomial<F>>& op, std::size_t d) {
  std::vector<Polynomial<F>> images;
  std::size_t rows = d + 1;
  for (std::size_t j = 0; j <= d; ++j) {
    images.push_back(apply(op, Polynomial<F>::monomial(F(1), j)));
    rows = std::max(rows, images.back().size());
  }
  Matrix<F> m(rows, d + 1, F(0));
  for (std::size_t j = 0; j <= d; ++j)
    for (std::size_t i = 0; i < images[j].size(); ++i) m(i, j) = images[j].coefficients()[i];
  return m;
}

}  // namespace dopfactor
