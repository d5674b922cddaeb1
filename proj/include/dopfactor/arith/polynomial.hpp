#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dopfactor {

/// Degree of a polynomial or order of an operator; the zero element has
/// degree minus infinity, which compares below every finite degree.
class Degree {
 public:
  constexpr Degree(std::size_t n) : finite_(true), value_(n) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !finite_; }
  constexpr std::size_t value() const {
    if (!finite_) throw std::domain_error("degree of the zero element");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// R must be a commutative ring constructible from integers. Division,
/// gcd and friends additionally need R to be a field and are only
/// instantiated when used.
template <class R>
class Polynomial {
 public:
  using Scalar = R;

  Polynomial() = default;
  template <std::integral I>
  Polynomial(I n) : Polynomial(R(n)) {}
  Polynomial(R constant) {
    if (!(constant == R(0))) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Polynomial x() { return monomial(R(1), 1); }
  static Polynomial monomial(R c, std::size_t k) {
    if (c == R(0)) return {};
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
  /// Coefficient of x^i (zero beyond the degree).
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  std::span<const R> coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_constant() const { return c_.size() <= 1; }

  R operator()(const R& at) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<R> v(std::max(p.c_.size(), q.c_.size()), R(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) v[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) v[i] = v[i] + q.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<R> v(p.c_.size() + q.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i] == R(0)) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) v[i + j] = v[i + j] + p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  Polynomial scaled(const R& s) const {
    std::vector<R> v = c_;
    for (auto& c : v) c = c * s;
    return Polynomial(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
Polynomial<R> pow(const Polynomial<R>& p, std::size_t k) {
  Polynomial<R> acc(R(1));
  for (std::size_t i = 0; i < k; ++i) acc *= p;
  return acc;
}

template <class R>
Polynomial<R> derivative(const Polynomial<R>& p) {
  if (p.size() <= 1) return {};
  std::vector<R> v(p.size() - 1, R(0));
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = R(static_cast<long>(i)) * p.coefficients()[i];
  return Polynomial<R>(std::move(v));
}

/// p(x + c), by Horner's scheme in the shifted variable.
template <class R>
Polynomial<R> compose_shift(const Polynomial<R>& p, const R& c) {
  const Polynomial<R> shift{c, R(1)};
  Polynomial<R> acc;
  auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * shift + Polynomial<R>(*it);
  return acc;
}

/// Euclidean division over a field: a = quotient*b + remainder, deg remainder < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) return {Polynomial<F>(), a};
  std::vector<F> quot(rem.size() - db, F(0));
  const F inv_lead = F(1) / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == F(0)) continue;
    F t = rem[k] * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - t * b.coefficients()[j];
    quot[k - db] = t;
  }
  rem.resize(db);
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InexactDivision();
  return q;
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  return p.scaled(F(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace dopfactor
