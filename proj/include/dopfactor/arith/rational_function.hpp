#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>

#include "dopfactor/arith/polynomial.hpp"

namespace dopfactor {

/// Reduced fraction num/den over a field F: den monic, gcd(num, den) = 1, zero is 0/1.
template <class F>
class RationalFunction {
 public:
  using Scalar = F;
  using Poly = Polynomial<F>;

  RationalFunction() : den_(F(1)) {}
  template <std::integral I>
  RationalFunction(I n) : num_(F(n)), den_(F(1)) {}
  RationalFunction(F c) : num_(std::move(c)), den_(F(1)) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(F(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::optional<Poly> as_polynomial() const {
    if (!is_polynomial()) return std::nullopt;
    return num_;
  }

  RationalFunction operator-() const { return raw(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_polynomial() && b.is_polynomial()) return raw(a.num_ * b.num_, Poly(F(1)));
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-reduces; a no-op on values built through the public interface.
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

 private:
  static RationalFunction raw(Poly num, Poly den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(F(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

template <class F>
RationalFunction<F> derivative(const RationalFunction<F>& f) {
  if (f.is_polynomial()) return RationalFunction<F>(derivative(f.num()));
  return RationalFunction<F>(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

template <class F>
RationalFunction<F> compose_shift(const RationalFunction<F>& f, const F& c) {
  return RationalFunction<F>(compose_shift(f.num(), c), compose_shift(f.den(), c));
}

}  // namespace dopfactor
