#include "ksec/kernels.hpp"

#include <limits>

namespace ksec::kernels::scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_value(const double* x, std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > best) best = x[i];
  return best;
}

Moments moments(const double* x, std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    m.sum += x[i];
    m.sumSquares += x[i] * x[i];
  }
  return m;
}

}  // namespace ksec::kernels::scalar
