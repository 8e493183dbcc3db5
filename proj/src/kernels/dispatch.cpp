#include "ksec/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ksec::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(KSEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("KSEC_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Isa::Scalar;
    if (want == "avx2" && cpu_has_avx2()) return Isa::Avx2;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("requested ISA not supported by this CPU");
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  check_sizes(x.size(), y.size());
#ifdef KSEC_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::axpy(a, x.data(), y.data(), x.size());
#endif
  scalar::axpy(a, x.data(), y.data(), x.size());
}

double max_value(std::span<const double> x) {
#ifdef KSEC_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::max_value(x.data(), x.size());
#endif
  return scalar::max_value(x.data(), x.size());
}

Moments moments(std::span<const double> x) {
#ifdef KSEC_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::moments(x.data(), x.size());
#endif
  return scalar::moments(x.data(), x.size());
}

}  // namespace ksec::kernels
