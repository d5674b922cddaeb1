#pragma once

#include <concepts>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dopfactor/arith/rational.hpp"

namespace dopfactor {

/// Element u + v*theta of Q(theta), theta^2 = base.
///
/// The base is carried only by elements with v != 0. Rational elements are
/// compatible with every field; combining two irrational elements with
/// different bases is an error. A base that is the square of a rational r is
/// folded away at construction (theta = r), so v stays 0 in that case.
class QuadScalar {
 public:
  QuadScalar() = default;
  template <std::integral I>
  QuadScalar(I n) : u_(static_cast<long>(n)) {}
  QuadScalar(Rational u) : u_(std::move(u)) {}
  QuadScalar(Rational u, Rational v, const Rational& base) : u_(std::move(u)), v_(std::move(v)) {
    if (v_ == 0) return;
    if (base == 0) throw std::domain_error("quadratic extension with base 0");
    if (auto r = rational_sqrt(base)) {
      u_ += v_ * *r;
      v_ = 0;
      return;
    }
    base_ = base;
  }

  /// The generator theta of Q(sqrt(base)).
  static QuadScalar theta(const Rational& base) { return QuadScalar(Rational(0), Rational(1), base); }

  const Rational& rational_part() const { return u_; }
  const Rational& theta_part() const { return v_; }
  /// Base of the extension this element lives in, 0 when the element is rational.
  const Rational& base() const { return base_; }
  bool is_rational() const { return v_ == 0; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }

  /// Nonnegative integer value, if the element is one.
  std::optional<BigInt> as_natural() const {
    if (!is_rational() || !is_integer(u_) || u_ < 0) return std::nullopt;
    return u_.get_num();
  }

  QuadScalar conjugate() const { return make(u_, -v_, base_); }
  /// Field norm u^2 - base*v^2.
  Rational norm() const { return Rational(u_ * u_ - base_ * v_ * v_); }

  QuadScalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = norm();
    return make(Rational(u_ / n), Rational(-v_ / n), base_);
  }

  QuadScalar operator-() const { return make(-u_, -v_, base_); }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    return make(Rational(x.u_ + y.u_), Rational(x.v_ + y.v_), common_base(x, y));
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    return make(Rational(x.u_ - y.u_), Rational(x.v_ - y.v_), common_base(x, y));
  }
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    const Rational& b = common_base(x, y);
    return make(Rational(x.u_ * y.u_ + b * x.v_ * y.v_), Rational(x.u_ * y.v_ + x.v_ * y.u_), b);
  }
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

  QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
  QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
  QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.u_ == y.u_ && x.v_ == y.v_ && (x.v_ == 0 || x.base_ == y.base_);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& x) {
    if (x.is_rational()) return os << x.u_;
    os << '(' << x.u_ << ")+(" << x.v_ << ")*sqrt(" << x.base_ << ')';
    return os;
  }

 private:
  static QuadScalar make(Rational u, Rational v, const Rational& base) {
    QuadScalar r;
    r.u_ = std::move(u);
    r.v_ = std::move(v);
    if (r.v_ != 0) r.base_ = base;
    return r;
  }

  static const Rational& common_base(const QuadScalar& x, const QuadScalar& y) {
    if (x.v_ == 0) return y.base_;
    if (y.v_ == 0) return x.base_;
    if (x.base_ != y.base_)
      throw std::domain_error("mixing elements of Q(sqrt(" + to_string(x.base_) + ")) and Q(sqrt(" +
                              to_string(y.base_) + "))");
    return x.base_;
  }

  Rational u_;
  Rational v_;
  Rational base_;
};

/// Square root of c inside Q(sqrt(field_base)); field_base = 0 means plain Q.
///
/// The returned root is the one with positive rational part (or positive
/// theta part when the rational part vanishes).
inline std::optional<QuadScalar> field_sqrt(const QuadScalar& c, const Rational& field_base) {
  if (c.is_zero()) return QuadScalar();
  if (!c.is_rational() && field_base != 0 && c.base() != field_base) return std::nullopt;
  if (c.is_rational()) {
    const Rational& u = c.rational_part();
    if (auto r = rational_sqrt(u)) return QuadScalar(*r);
    if (field_base == 0) return std::nullopt;
    // sqrt(u) = s*theta  <=>  u / base = s^2
    if (auto s = rational_sqrt(Rational(u / field_base))) return QuadScalar(Rational(0), *s, field_base);
    return std::nullopt;
  }
  // (x + y theta)^2 = u + v theta: x^2 + base y^2 = u, 2xy = v.
  const Rational& base = c.base();
  auto n = rational_sqrt(c.norm());
  if (!n) return std::nullopt;
  for (const Rational& t : {Rational((c.rational_part() + *n) / 2), Rational((c.rational_part() - *n) / 2)}) {
    auto x = rational_sqrt(t);
    if (!x || *x == 0) continue;
    Rational y = c.theta_part() / (2 * *x);
    return QuadScalar(*x, y, base);
  }
  return std::nullopt;
}

inline std::string to_string(const QuadScalar& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace dopfactor
