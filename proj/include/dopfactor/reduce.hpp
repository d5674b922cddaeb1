#pragma once

// Order-1 factors of D^2 - Q over Q(sqrt(a))(x).
//
// A right factor D - w exists iff some branch R of the determining factors
// has a polynomial u with twist(L, R)(u) = 0; then w = R + u'/u. The degree
// of u is forced by the top coefficient of twist(L, R)(x^d), so the kernel
// search is a single finite nullspace computation per branch.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopfactor/detfactor.hpp"
#include "dopfactor/weyl/diff_op.hpp"

namespace dopfactor {

using Op = DiffOp<Poly>;
using RatFn = RationalFunction<Scalar>;
using RatOp = DiffOp<RatFn>;

enum class Verdict { Reducible, Irreducible };
enum class Side { Right, Left, None };

inline const char* to_string(Verdict v) { return v == Verdict::Reducible ? "reducible" : "irreducible"; }
inline const char* to_string(Side s) {
  switch (s) {
    case Side::Right: return "right";
    case Side::Left: return "left";
    default: return "none";
  }
}

struct TraceEntry {
  std::string screen;
  bool passed = false;
  std::string detail;
};

struct ReducibilityReport {
  Verdict verdict = Verdict::Irreducible;
  Side side = Side::None;
  /// Order-1 right factor of L (side Right) or of its adjoint (side Left).
  std::optional<RatOp> witness_factor;
  /// For side Left: the monic order-1 left factor of L itself.
  std::optional<RatOp> left_factor;
  /// L (or its adjoint) = cofactor o witness_factor.
  std::optional<RatOp> cofactor;
  std::optional<Poly> witness_poly;
  std::optional<DeterminingBranch> branch;
  std::optional<std::size_t> degree_used;
  std::vector<TraceEntry> trace;
  Rational field_base;
};

struct AnalyzeOptions {
  /// The field is Q(sqrt(field_base)); 0 means Q.
  Rational field_base;
  /// Largest kernel-search degree; a larger indicial degree is an error.
  std::size_t max_degree = 64;
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(std::size_t d, std::size_t cap)
      : std::runtime_error("indicial degree " + std::to_string(d) + " exceeds the degree cap " +
                           std::to_string(cap)),
        degree(d) {}
  std::size_t degree;
};

inline bool divisibility_screen(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("divisibility screen needs n >= 1");
  return m % n == 0;
}

/// s = (m + 1)/(2m - q) for p = 2m, when it is a natural number >= 1.
inline std::optional<std::size_t> setoyanagi_screen(std::size_t p, std::size_t q) {
  if (q >= p || p % 2 != 0) throw std::invalid_argument("setoyanagi_screen needs q < p, p even");
  SetoyanagiParams params{Scalar(1), Scalar(1), p, q};
  return params.s();
}

/// Indicial degree at infinity of M = D^2 + 2R D + V with deg R = m, deg V <= m - 1:
/// the root d of 2 lead(R) d + [x^{m-1}]V = 0, if it is a natural number.
inline std::optional<std::size_t> degree_candidate(const Op& twisted) {
  if (twisted.order() != Degree(2) || !(twisted.leading() == Poly(Scalar(1))))
    throw std::invalid_argument("degree_candidate needs a monic order-2 operator");
  const Poly& two_r = twisted.coefficients()[1];
  if (two_r.is_zero()) throw std::invalid_argument("degree_candidate: twist has zero D coefficient");
  const std::size_t m = two_r.degree().value();
  if (m == 0) throw std::invalid_argument("degree_candidate: R must have degree >= 1");
  const Poly& v = twisted.coefficients()[0];
  if (v.degree() > Degree(m - 1))
    throw std::invalid_argument("degree_candidate: zero-order coefficient exceeds degree m - 1");
  const Scalar d = -v.coeff(m - 1) / two_r.leading();
  auto n = d.as_natural();
  if (!n || !n->fits_ulong_p()) return std::nullopt;
  return static_cast<std::size_t>(n->get_ui());
}

/// Basis of {u : deg u <= d, M(u) = 0}.
inline std::vector<Poly> polynomial_solutions(const Op& m, std::size_t d) {
  std::vector<Poly> out;
  for (auto& v : nullspace(matrix_on_degree(m, d))) out.emplace_back(std::move(v));
  return out;
}

/// D - (R + u'/u).
inline RatOp right_factor_from_solution(const Poly& r, const Poly& u) {
  if (u.is_zero()) throw std::invalid_argument("invalid witness: u = 0");
  RatFn w = RatFn(r) + RatFn(derivative(u), u);
  return RatOp(std::vector<RatFn>{-w, RatFn(1)});
}

namespace detail {

inline std::string describe_branch(int eps, Side side) {
  return std::string(side == Side::Right ? "right" : "left") + ", eps=" + (eps == 1 ? "+1" : "-1");
}

inline bool try_constant(const Poly& q, const AnalyzeOptions& opt, ReducibilityReport& rep) {
  const Scalar c = q.coeff(0);
  auto root = field_sqrt(c, opt.field_base);
  rep.trace.push_back({"constant-potential", root.has_value(),
                       root ? "D^2 - c = (D + sqrt(c)) o (D - sqrt(c))" : "sqrt(c) not in the field"});
  if (!root) return false;
  const Op l = Op::term(Poly(Scalar(1)), 2) - Op(q);
  const Poly r(*root);
  RatOp f = right_factor_from_solution(r, Poly(Scalar(1)));
  auto div = right_divide(promote(l), f);
  if (!div.remainder.is_zero()) throw std::logic_error("constant-potential factor failed verification");
  rep.verdict = Verdict::Reducible;
  rep.side = Side::Right;
  rep.witness_factor = std::move(f);
  rep.cofactor = std::move(div.quotient);
  rep.witness_poly = Poly(Scalar(1));
  rep.branch = DeterminingBranch{1, r};
  rep.degree_used = 0;
  return true;
}

}  // namespace detail

/// Decides whether D^2 - Q has an order-1 right or left factor over Q(sqrt(a))(x).
inline ReducibilityReport analyze_order2(const Poly& q, const AnalyzeOptions& opt = {}) {
  ReducibilityReport rep;
  rep.field_base = opt.field_base;
  const Op l = Op::term(Poly(Scalar(1)), 2) - Op(q);

  if (q.degree() <= Degree(0)) {
    rep.trace.push_back({"divisibility", true, "n=2, m=0"});
    detail::try_constant(q, opt, rep);
    return rep;
  }
  const std::size_t m = q.degree().value();
  const bool divides = divisibility_screen(2, m);
  rep.trace.push_back({"divisibility", divides, "n=2, m=" + std::to_string(m)});
  if (!divides) return rep;

  DeterminingBranch branches[2] = {sqrt_truncate(q, 1, opt.field_base), sqrt_truncate(q, -1, opt.field_base)};
  const Op adj = adjoint(l);

  for (Side side : {Side::Right, Side::Left}) {
    const Op& target = side == Side::Right ? l : adj;
    for (const auto& branch : branches) {
      const Poly r = side == Side::Right ? branch.r : -branch.r;
      const Op twisted = twist(target, r);
      const std::string who = detail::describe_branch(branch.epsilon, side);
      auto d = degree_candidate(twisted);
      rep.trace.push_back({"degree-candidate", d.has_value(),
                           who + (d ? ": d=" + std::to_string(*d) : ": no natural-number root")});
      if (!d) continue;
      if (*d > opt.max_degree) throw DegreeCapExceeded(*d, opt.max_degree);
      auto basis = polynomial_solutions(twisted, *d);
      rep.trace.push_back({"kernel-search", !basis.empty(),
                           who + ": dim ker on degree <= " + std::to_string(*d) + " is " +
                               std::to_string(basis.size())});
      if (basis.empty()) continue;

      const Poly& u = basis.front();
      RatOp f = right_factor_from_solution(r, u);
      auto div = right_divide(promote(target), f);
      if (!div.remainder.is_zero()) throw std::logic_error("factor failed right-division verification");
      rep.verdict = Verdict::Reducible;
      rep.side = side;
      if (side == Side::Left) {
        // target = adj = cofactor o (D - w)  =>  L = (D + w) o (-adjoint(cofactor))
        rep.left_factor = RatOp(std::vector<RatFn>{-f.coeff(0), RatFn(1)});
      }
      rep.witness_factor = std::move(f);
      rep.cofactor = std::move(div.quotient);
      rep.witness_poly = u;
      rep.branch = DeterminingBranch{branch.epsilon, r};
      rep.degree_used = *d;
      rep.trace.push_back({"verification", true, who + ": right division remainder is 0"});
      return rep;
    }
  }
  return rep;
}

/// Left side of eps sqrt(a) binom(1/2, s) (b/a)^s - m/2 = d, returned when a natural number.
inline std::optional<std::size_t> integrality_condition(const SetoyanagiParams& params, int epsilon,
                                                        const Rational& field_base) {
  params.validate();
  auto s = params.s();
  if (!s) throw std::invalid_argument("integrality_condition needs an integral s");
  auto sqrt_a = field_sqrt(params.a, field_base);
  if (!sqrt_a) throw FieldExtensionRequired("a = " + to_string(params.a) + " has no square root in the field");
  Scalar ratio_pow(1);
  const Scalar ratio = params.b / params.a;
  for (std::size_t i = 0; i < *s; ++i) ratio_pow *= ratio;
  const Scalar lhs = Scalar(epsilon) * *sqrt_a * Scalar(binom_half(*s)) * ratio_pow -
                     Scalar(make_rational(BigInt(static_cast<unsigned long>(params.m())), 2));
  auto n = lhs.as_natural();
  if (!n || !n->fits_ulong_p()) return std::nullopt;
  return static_cast<std::size_t>(n->get_ui());
}

}  // namespace dopfactor
