#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dopfactor/weyl/diff_op.hpp"

namespace dopfactor {

/// P_n(D) + Q_m(x) with constant-coefficient P_n of degree n >= 1.
template <class F>
class AiryOperator {
 public:
  AiryOperator(std::vector<F> pn, Polynomial<F> qm) : pn_(std::move(pn)), qm_(std::move(qm)) {
    while (!pn_.empty() && pn_.back() == F(0)) pn_.pop_back();
    if (pn_.size() < 2) throw std::invalid_argument("Airy operator needs P_n of degree n >= 1");
    if (qm_.is_zero()) throw std::invalid_argument("Airy operator needs a nonzero Q_m");
  }

  /// Recognizes sum a_i D^i + Q(x) with constant a_i for i >= 1.
  static std::optional<AiryOperator> from_diffop(const DiffOp<Polynomial<F>>& op) {
    const auto& c = op.coefficients();
    if (c.size() < 2) return std::nullopt;
    std::vector<F> pn{F(0)};
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (!c[i].is_constant()) return std::nullopt;
      pn.push_back(c[i].coeff(0));
    }
    // a_0 is folded into Q_m.
    if (c[0].is_zero()) return std::nullopt;
    return AiryOperator(std::move(pn), c[0]);
  }

  std::size_t n() const { return pn_.size() - 1; }
  std::size_t m() const { return qm_.degree().value(); }
  const std::vector<F>& pn() const { return pn_; }
  const Polynomial<F>& qm() const { return qm_; }

  DiffOp<Polynomial<F>> to_diffop() const {
    std::vector<Polynomial<F>> v;
    for (const auto& a : pn_) v.emplace_back(a);
    v[0] = v[0] + qm_;
    return DiffOp<Polynomial<F>>(std::move(v));
  }

 private:
  std::vector<F> pn_;
  Polynomial<F> qm_;
};

}  // namespace dopfactor
