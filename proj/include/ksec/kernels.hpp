#pragma once

// Data-parallel inner loops used by the simplex solver and the Monte Carlo
// reducers. Every kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant; the active variant is picked once at runtime from CPUID and
// can be pinned with KSEC_KERNELS=scalar|avx2 or force_isa().

#include <cstddef>
#include <span>
#include <string_view>

namespace ksec::kernels {

enum class Isa { Scalar, Avx2 };

struct Moments {
  double sum = 0.0;
  double sumSquares = 0.0;
};

/// y[i] += a * x[i]. Sizes must match.
void axpy(double a, std::span<const double> x, std::span<double> y);

/// Largest element; -infinity for an empty span. Inputs must not contain NaN.
double max_value(std::span<const double> x);

/// Sum and sum of squares in one pass.
Moments moments(std::span<const double> x);

Isa active_isa();
bool isa_available(Isa isa);
/// Pins the dispatch target. Throws if the ISA is not available on this CPU.
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);

namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
double max_value(const double* x, std::size_t n);
Moments moments(const double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
double max_value(const double* x, std::size_t n);
Moments moments(const double* x, std::size_t n);
}  // namespace avx2

}  // namespace ksec::kernels
