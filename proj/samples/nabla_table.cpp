// Prints mu(d) and the first trailing minors for small d.

#include <iostream>

#include "dopfactor/nabla.hpp"

using namespace dopfactor;

int main() {
  for (std::size_t d = 0; d <= 8; ++d) {
    const auto s = nabla::minors_recurrence(d);
    std::cout << "d=" << d << "  mu=" << s.mu() << "  minors:";
    for (const auto& m : s.minors) std::cout << ' ' << m;
    std::cout << "\n";
  }
}
