#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "cheb/weights.hpp"

namespace cheb::oracle {

// int f(t) e^{-zt} dt by composite Simpson, split at the knots of f.
inline Complex numerical_laplace(const WeightSpec& spec, Complex z, double max_step = 1e-4) {
  const double A = spec.A();
  const int ell = spec.ell();
  std::vector<double> knots;
  for (int j = 0; j <= ell; ++j) knots.push_back(0.5 - 2.0 * ell * A + 2.0 * A * j);
  for (int j = 0; j <= ell; ++j) knots.push_back(1.0 + 2.0 * A * j);
  Complex total = 0.0;
  for (std::size_t k = 1; k < knots.size(); ++k) {
    const double a = knots[k - 1], b = knots[k];
    int n = static_cast<int>(std::ceil((b - a) / max_step));
    n += n % 2;
    n = std::max(n, 2);
    const double h = (b - a) / n;
    Complex sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double t = a + i * h;
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * weight_f(spec, t) * std::exp(-z * t);
    }
    total += sum * h / 3.0;
  }
  return total;
}

}  // namespace cheb::oracle
