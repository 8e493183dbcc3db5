#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "ksec/kernels.hpp"

namespace kn = ksec::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!kn::isa_available(kn::Isa::Avx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  }
};

}  // namespace

TEST_F(KernelEquivalence, AxpyBitwiseAcrossLengths) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n < 300; ++n) {
    const auto x = random_vector(n, rng);
    auto ys = random_vector(n, rng);
    auto yv = ys;
    const double a = std::uniform_real_distribution<double>(-3, 3)(rng);
    kn::scalar::axpy(a, x.data(), ys.data(), n);
    kn::avx2::axpy(a, x.data(), yv.data(), n);
    ASSERT_TRUE(bitwise_equal(ys, yv)) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, MaxBitwiseAcrossLengths) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 0; n < 300; ++n) {
    const auto x = random_vector(n, rng);
    const double s = kn::scalar::max_value(x.data(), n);
    const double v = kn::avx2::max_value(x.data(), n);
    ASSERT_EQ(std::memcmp(&s, &v, sizeof s), 0) << "n=" << n;
  }
}

TEST_F(KernelEquivalence, MomentsAgreeToRounding) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 100003u}) {
    const auto x = random_vector(n, rng);
    const auto s = kn::scalar::moments(x.data(), n);
    const auto v = kn::avx2::moments(x.data(), n);
    double absSum = 0.0;
    double sq = 0.0;
    for (double e : x) {
      absSum += std::abs(e);
      sq += e * e;
    }
    const double tol = 1e-14 * static_cast<double>(n + 1);
    EXPECT_NEAR(s.sum, v.sum, tol * (absSum + 1.0)) << n;
    EXPECT_NEAR(s.sumSquares, v.sumSquares, tol * (sq + 1.0)) << n;
  }
}

TEST_F(KernelEquivalence, ForcedIsaRoutesDispatch) {
  std::mt19937_64 rng(10);
  const auto x = random_vector(1001, rng);
  std::vector<double> out[2];
  for (kn::Isa isa : {kn::Isa::Scalar, kn::Isa::Avx2}) {
    kn::force_isa(isa);
    EXPECT_EQ(kn::active_isa(), isa);
    auto y = random_vector(1001, rng);
    y.assign(1001, 1.5);
    kn::axpy(0.25, x, y);
    out[isa == kn::Isa::Avx2] = y;
  }
  EXPECT_TRUE(bitwise_equal(out[0], out[1]));
}

TEST(Kernels, ScalarReferenceValues) {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y{1, 1, 1, 1, 1};
  kn::axpy(2.0, x, y);
  EXPECT_EQ(y, (std::vector<double>{3, 5, 7, 9, 11}));
  EXPECT_EQ(kn::max_value(x), 5.0);
  EXPECT_EQ(kn::max_value(std::span<const double>{}), -std::numeric_limits<double>::infinity());
  const auto m = kn::moments(x);
  EXPECT_EQ(m.sum, 15.0);
  EXPECT_EQ(m.sumSquares, 55.0);
}

TEST(Kernels, AxpySizeMismatchThrows) {
  std::vector<double> x(3), y(4);
  EXPECT_THROW(kn::axpy(1.0, x, y), std::invalid_argument);
}

TEST(Kernels, MaxHandlesNegativesAndPosition) {
  for (std::size_t n = 1; n < 40; ++n)
    for (std::size_t at = 0; at < n; ++at) {
      std::vector<double> x(n, -5.0);
      x[at] = -1.0;
      EXPECT_EQ(kn::max_value(x), -1.0);
    }
}

TEST(Kernels, IsaNames) {
  EXPECT_EQ(kn::isa_name(kn::Isa::Scalar), "scalar");
  EXPECT_EQ(kn::isa_name(kn::Isa::Avx2), "avx2");
  EXPECT_TRUE(kn::isa_available(kn::Isa::Scalar));
}
