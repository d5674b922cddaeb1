// Walks S_{4,3} = D^2 - (a x^4 + b x^3) through translation, determining
// factor, twist and kernel search for a few rational (a, b).

#include <iostream>

#include "dopfactor/cli/render.hpp"
#include "dopfactor/dopfactor.hpp"

using namespace dopfactor;

int main() {
  const Rational none;
  for (auto [a, b] : {std::pair{4, 8}, {4, 3}, {1, 2}, {9, 1}}) {
    SetoyanagiParams params{Scalar(a), Scalar(b), 4, 3};
    const Poly q = params.potential();
    const Op s = Op::term(Poly(Scalar(1)), 2) - Op(q);
    const Scalar shift = -Scalar(b) / (Scalar(4) * Scalar(a));
    const Op moved = translate(s, shift);
    std::cout << "S = " << cli::render(s) << "\n"
              << "  x -> x + (" << cli::render(shift) << "): " << cli::render(moved) << "\n";
    for (int eps : {1, -1}) {
      const auto d = integrality_condition(params, eps, none);
      const auto branch = sqrt_truncate(-moved.coeff(0), eps, none);
      const Op twisted = twist(moved, branch.r);
      std::cout << "  eps=" << eps << "  R = " << cli::render(branch.r) << "\n"
                << "    S^R = " << cli::render(twisted) << "\n"
                << "    integrality d: " << (d ? std::to_string(*d) : "none");
      if (d) std::cout << ", kernel dimension " << polynomial_solutions(twisted, *d).size();
      std::cout << "\n";
    }
    const auto rep = analyze_order2(q);
    std::cout << "  verdict: " << to_string(rep.verdict) << "\n\n";
  }
}
