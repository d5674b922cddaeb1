#pragma once

// The banded determinant nabla(d, alpha) of the twisted S_{4,3} operator on
// polynomials of degree <= d, its trailing principal minors, and the integer
// inequalities that show it never vanishes.
//
// Indices of the (d+1)x(d+1) matrix are 1-based in comments and 0-based in
// code. Entry (i, j) is
//   3 (d+1)^2 alpha^2            j = i
//   -4 (d-i+2)(d+1) alpha^3      j = i-1
//   -3 i (d+1) alpha             j = i+1
//   i (i+1)                      j = i+2
// and zero elsewhere. Each entry has alpha-degree 2 + i - j.

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopfactor/arith/matrix.hpp"
#include "dopfactor/arith/polynomial.hpp"
#include "dopfactor/arith/rational.hpp"
#include "dopfactor/weyl/diff_op.hpp"

namespace dopfactor::nabla {

/// coeff * alpha^alpha_power
struct AlphaTerm {
  BigInt coeff;
  unsigned alpha_power = 0;

  friend bool operator==(const AlphaTerm& a, const AlphaTerm& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.alpha_power == b.alpha_power);
  }
};

using AlphaPoly = Polynomial<Rational>;

struct NablaMatrix {
  std::size_t d = 0;
  bool symbolic = false;
  Matrix<AlphaTerm> entries;

  std::size_t size() const { return d + 1; }

  /// Entries at alpha = 1.
  Matrix<BigInt> integer_matrix() const {
    Matrix<BigInt> m(size(), size(), BigInt(0));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = entries(i, j).coeff;
    return m;
  }

  /// Entries as integer polynomials in alpha.
  Matrix<AlphaPoly> alpha_matrix() const {
    Matrix<AlphaPoly> m(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        m(i, j) = AlphaPoly::monomial(Rational(entries(i, j).coeff), entries(i, j).alpha_power);
    return m;
  }
};

inline NablaMatrix build_matrix(std::size_t d, bool symbolic) {
  const std::size_t n = d + 1;
  const BigInt dp1 = static_cast<unsigned long>(d + 1);
  NablaMatrix out{d, symbolic, Matrix<AlphaTerm>(n, n, AlphaTerm{BigInt(0), 0})};
  for (std::size_t r = 0; r < n; ++r) {
    const BigInt i = static_cast<unsigned long>(r + 1);
    auto set = [&](std::size_t c, BigInt v, unsigned power) {
      if (c < n) out.entries(r, c) = AlphaTerm{std::move(v), symbolic ? power : 0u};
    };
    set(r, BigInt(3 * dp1 * dp1), 2);
    if (r >= 1) set(r - 1, BigInt(-4 * (dp1 + 1 - i) * dp1), 3);
    set(r + 1, BigInt(-3 * i * dp1), 1);
    set(r + 2, BigInt(i * (i + 1)), 0);
  }
  return out;
}

/// The twisted operator
///   D^2 + [4(d+1) alpha^3 x^2 - 3(d+1) alpha] D + [-4d(d+1) alpha^3 x + 3(d+1)^2 alpha^2]
/// with coefficients in Z[alpha][x].
inline DiffOp<Polynomial<AlphaPoly>> twisted_s43(std::size_t d) {
  using XPoly = Polynomial<AlphaPoly>;
  const long dl = static_cast<long>(d);
  auto a = [](long c, std::size_t k) { return AlphaPoly::monomial(Rational(c), k); };
  XPoly c1{a(-3 * (dl + 1), 1), AlphaPoly(), a(4 * (dl + 1), 3)};
  XPoly c0{a(3 * (dl + 1) * (dl + 1), 2), a(-4 * dl * (dl + 1), 3)};
  return DiffOp<XPoly>(std::vector<XPoly>{c0, c1, XPoly(AlphaPoly(1))});
}

/// matrix_on_degree of the twisted operator, converted to alpha monomials.
/// Throws std::logic_error unless it is square and equal to build_matrix(d, true).
inline NablaMatrix build_from_operator(std::size_t d) {
  Matrix<AlphaPoly> m = matrix_on_degree(twisted_s43(d), d);
  if (m.rows() != d + 1) throw std::logic_error("twisted operator leaves the space of degree <= d polynomials");
  NablaMatrix out{d, true, Matrix<AlphaTerm>(d + 1, d + 1, AlphaTerm{BigInt(0), 0})};
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      const AlphaPoly& e = m(i, j);
      if (e.is_zero()) continue;
      const std::size_t k = e.degree().value();
      if (!(e == AlphaPoly::monomial(e.leading(), k)) || !is_integer(e.leading()))
        throw std::logic_error("operator matrix entry is not an integer alpha-monomial");
      out.entries(i, j) = AlphaTerm{e.leading().get_num(), static_cast<unsigned>(k)};
    }
  }
  if (!(out.entries == build_matrix(d, true).entries))
    throw std::logic_error("operator matrix differs from the banded table");
  return out;
}

/// Symbolic determinant nabla(d, alpha) as a polynomial in alpha.
inline AlphaPoly symbolic_determinant(std::size_t d) { return bareiss_determinant(build_matrix(d, true).alpha_matrix()); }

/// lambda_k = (k+1)(d-k); defined for every integer k.
inline BigInt lambda(long d, long k) { return BigInt(k + 1) * BigInt(d - k); }

inline BigInt y_of(std::size_t d) {
  const BigInt dp1 = static_cast<unsigned long>(d + 1);
  return BigInt(3 * dp1 * dp1);
}

struct MinorSequence {
  std::size_t d = 0;
  BigInt y;
  /// lambda_k for k = 0 .. d-1
  std::vector<BigInt> lambdas;
  /// nabla_0 .. nabla_{d+1}
  std::vector<BigInt> minors;

  const BigInt& mu() const { return minors.back(); }
};

namespace detail {

inline MinorSequence skeleton(std::size_t d) {
  MinorSequence s;
  s.d = d;
  s.y = y_of(d);
  for (std::size_t k = 0; k < d; ++k) s.lambdas.push_back(lambda(static_cast<long>(d), static_cast<long>(k)));
  return s;
}

template <class Det>
MinorSequence minors_by(std::size_t d, std::size_t max_p, Det det) {
  MinorSequence s = detail::skeleton(d);
  const Matrix<BigInt> a = build_matrix(d, false).integer_matrix();
  const std::size_t n = d + 1;
  s.minors.push_back(BigInt(1));
  // nabla_p: rows/columns d-p+2 .. d+1 (1-based), the trailing p x p block.
  for (std::size_t p = 1; p <= std::min(n, max_p); ++p) s.minors.push_back(det(a.block(n - p, n - p, p, p)));
  return s;
}

}  // namespace detail

/// Trailing minors by fraction-free elimination. With max_p set, only
/// nabla_0 .. nabla_max_p are computed, and mu() is then not meaningful.
inline MinorSequence minors_direct(std::size_t d, std::size_t max_p = SIZE_MAX) {
  return detail::minors_by(d, max_p, [](const Matrix<BigInt>& m) { return bareiss_determinant(m); });
}

/// Trailing minors by cofactor expansion; an independent oracle for small d.
inline MinorSequence minors_cofactor(std::size_t d) {
  return detail::minors_by(d, SIZE_MAX, [](const Matrix<BigInt>& m) { return cofactor_determinant(m); });
}

/// Trailing minors from
///   nabla_{p+1} = (d+1)^2 [3 nabla_p - 12 lambda_{p-1} nabla_{p-1} + 16 lambda_{p-1} lambda_{p-2} nabla_{p-2}],
/// p = 2..d, seeded with nabla_0 = 1, nabla_1 = y, nabla_2 = (y - 4 lambda_0) y.
inline MinorSequence minors_recurrence(std::size_t d) {
  MinorSequence s = detail::skeleton(d);
  const BigInt dp1 = static_cast<unsigned long>(d + 1);
  const BigInt sq = dp1 * dp1;
  s.minors.push_back(BigInt(1));
  s.minors.push_back(s.y);
  if (d >= 1) s.minors.push_back(BigInt((s.y - 4 * s.lambdas[0]) * s.y));
  for (std::size_t p = 2; p <= d; ++p) {
    const BigInt& l1 = s.lambdas[p - 1];
    const BigInt& l2 = s.lambdas[p - 2];
    BigInt next = 3 * s.minors[p] - 12 * l1 * s.minors[p - 1] + 16 * l1 * l2 * s.minors[p - 2];
    s.minors.push_back(BigInt(sq * next));
  }
  return s;
}

/// mu(d), with nabla(d, alpha) = mu(d) alpha^{2(d+1)}.
inline BigInt mu(std::size_t d) { return minors_recurrence(d).mu(); }

struct Violation {
  std::string check;
  std::size_t p = 0;
  BigInt lhs;
  BigInt rhs;
};

struct InequalityReport {
  std::size_t d = 0;
  /// number of chain inequalities nabla_{p+1} > 4 lambda_p nabla_p checked (p = 1..d-1)
  std::size_t chain_checked = 0;
  bool terminal_checked = false;
  std::optional<Violation> first_violation;

  bool passed() const { return !first_violation.has_value(); }
};

/// Checks nabla_{p+1} > 4 lambda_p nabla_p for p = 1..d-1 and, for d >= 2,
/// 3 nabla_{d+1} > 16 y lambda_{d-1} lambda_{d-2} nabla_{d-2}.
inline InequalityReport verify_inequalities(const MinorSequence& s) {
  InequalityReport rep;
  rep.d = s.d;
  const auto& nb = s.minors;
  for (std::size_t p = 1; p + 1 <= s.d; ++p) {
    ++rep.chain_checked;
    BigInt rhs = 4 * s.lambdas[p] * nb[p];
    if (!(nb[p + 1] > rhs) && !rep.first_violation)
      rep.first_violation = Violation{"chain", p, nb[p + 1], rhs};
  }
  if (s.d >= 2) {
    rep.terminal_checked = true;
    BigInt lhs = 3 * nb[s.d + 1];
    BigInt rhs = 16 * s.y * s.lambdas[s.d - 1] * s.lambdas[s.d - 2] * nb[s.d - 2];
    if (!(lhs > rhs) && !rep.first_violation) rep.first_violation = Violation{"terminal", s.d, lhs, rhs};
  }
  return rep;
}

inline InequalityReport verify_inequalities(std::size_t d) { return verify_inequalities(minors_recurrence(d)); }

/// h(p) = y^2 - y(4 lambda_p + 4 lambda_{p-1} + 8 lambda_{p-2}) + 32 lambda_p lambda_{p-2} + 16 lambda_{p-1} lambda_{p-2},
/// evaluated as a polynomial in p without range restriction.
inline BigInt h_formula(std::size_t d, long p) {
  const long dl = static_cast<long>(d);
  const BigInt y = y_of(d);
  const BigInt l0 = lambda(dl, p), l1 = lambda(dl, p - 1), l2 = lambda(dl, p - 2);
  return BigInt(y * y - y * (4 * l0 + 4 * l1 + 8 * l2) + 32 * l0 * l2 + 16 * l1 * l2);
}

/// h(p) for 2 <= p <= d - 1.
inline BigInt h_eval(std::size_t d, std::size_t p) {
  if (p < 2 || p + 1 > d) throw std::domain_error("h(p) needs 2 <= p <= d-1");
  return h_formula(d, static_cast<long>(p));
}

struct HClosedForms {
  BigInt at_d_minus_1_half;  // h((d-1)/2)
  BigInt at_d_plus_1_half;   // h((d+1)/2)
  BigInt at_d_plus_3_half;   // h((d+3)/2)
};

inline HClosedForms h_closed_forms(std::size_t d) {
  if (d % 2 == 0) throw std::domain_error("h closed forms need odd d");
  const long half = static_cast<long>(d / 2);  // (d-1)/2
  return {h_formula(d, half), h_formula(d, half + 1), h_formula(d, half + 2)};
}

struct HMinimum {
  std::size_t p = 0;
  BigInt value;
};

/// Smallest h(p) over 2 <= p <= d-1 (first minimizer), if the range is nonempty.
inline std::optional<HMinimum> h_minimum(std::size_t d) {
  std::optional<HMinimum> best;
  for (std::size_t p = 2; p + 1 <= d; ++p) {
    BigInt v = h_eval(d, p);
    if (!best || v < best->value) best = HMinimum{p, std::move(v)};
  }
  return best;
}

struct SweepRow {
  std::size_t d = 0;
  bool mu_nonzero = false;
  std::optional<bool> parity_odd;  // even d only
  std::optional<bool> chain_ok;    // d >= 2 only
  std::size_t mu_digits = 0;

  bool passed() const { return mu_nonzero && parity_odd.value_or(true) && chain_ok.value_or(true); }
};

struct SweepSummary {
  std::size_t d_max = 0;
  std::vector<SweepRow> rows;
  std::size_t failures = 0;
  std::size_t parity_checked = 0;
  std::size_t chains_checked = 0;
  std::size_t max_digits = 0;
  double elapsed_ms = 0;

  bool passed() const { return failures == 0; }
};

inline SweepRow sweep_one(std::size_t d) {
  const MinorSequence s = minors_recurrence(d);
  SweepRow row;
  row.d = d;
  row.mu_nonzero = s.mu() != 0;
  row.mu_digits = decimal_digits(s.mu());
  if (d % 2 == 0) row.parity_odd = mpz_odd_p(s.mu().get_mpz_t()) != 0;
  if (d >= 2) row.chain_ok = verify_inequalities(s).passed();
  return row;
}

/// Nonvanishing, parity and inequality checks for every d <= d_max.
inline SweepSummary sweep(std::size_t d_max) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary sum;
  sum.d_max = d_max;
  for (std::size_t d = 0; d <= d_max; ++d) {
    SweepRow row = sweep_one(d);
    if (!row.passed()) ++sum.failures;
    if (row.parity_odd) ++sum.parity_checked;
    if (row.chain_ok) ++sum.chains_checked;
    sum.max_digits = std::max(sum.max_digits, row.mu_digits);
    sum.rows.push_back(row);
  }
  sum.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

}  // namespace dopfactor::nabla
