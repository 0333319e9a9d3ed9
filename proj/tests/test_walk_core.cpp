#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/fit.hpp"
#include "qwalk/walk_core.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;
const complex_t kI(0.0, 1.0);

PositionState zero_l() { return PositionState::localized(0, {0.0, 1.0}); }

PositionState psi(double sign) { return build_initial(H1{kPi / 4.0, sign > 0 ? 0.0 : kPi}); }

}  // namespace

TEST(PositionState, RejectsUnnormalizedOrNonFinite) {
  EXPECT_THROW(PositionState::from_amplitudes(0, {{1.0, 1.0}}), ParameterError);
  EXPECT_THROW(PositionState::from_amplitudes(0, {}), ParameterError);
  EXPECT_THROW(PositionState::from_amplitudes(0, {{std::nan(""), 0.0}}), ParameterError);
  EXPECT_NO_THROW(PositionState::from_amplitudes(-3, {{0.6, 0.0}, {0.0, complex_t(0.0, 0.8)}}));
}

TEST(PositionState, ZeroOutsideWindow) {
  const PositionState s = PositionState::from_amplitudes(-1, {{0.6, 0.0}, {0.0, 0.8}});
  EXPECT_EQ(s.x_min(), -1);
  EXPECT_EQ(s.x_max(), 0);
  EXPECT_EQ(s.at(5), CoinSpinor{});
  EXPECT_EQ(s.at(-2), CoinSpinor{});
  EXPECT_EQ(s.at(0).b, complex_t(0.8));
}

TEST(BuildInitial, LocalizedPureLeftCoin) {
  const PositionState s = build_initial(Localized{kPi / 2.0, 0.0});
  EXPECT_EQ(s.width(), 1u);
  EXPECT_NEAR(std::abs(s.at(0).a), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.at(0).b - 1.0), 0.0, 1e-15);
}

TEST(BuildInitial, LocalizedCoinIsUnitNorm) {
  const PositionState s = build_initial(Localized{0.3, -1.2});
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.at(0).a - std::cos(0.3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.at(0).b - std::polar(std::sin(0.3), -1.2)), 0.0, 1e-15);
}

TEST(BuildInitial, H1QuarterPiIsPsiPlus) {
  const PositionState s = psi(+1);
  const double h = 0.5;  // (1/sqrt2) * (1/sqrt2)
  EXPECT_EQ(s.x_min(), -1);
  EXPECT_EQ(s.x_max(), 1);
  for (std::int64_t x : {-1, 1}) {
    EXPECT_NEAR(std::abs(s.at(x).a - h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.at(x).b - kI * h), 0.0, 1e-15);
  }
  EXPECT_EQ(s.at(0), CoinSpinor{});
}

TEST(BuildInitial, CustomReturnedUnchanged) {
  const PositionState custom = PositionState::from_amplitudes(4, {{0.6, 0.0}, {0.0, complex_t(0.0, -0.8)}});
  const PositionState s = build_initial(Custom{custom});
  EXPECT_EQ(s.x_min(), 4);
  EXPECT_EQ(max_abs_difference(s, custom), 0.0);
}

TEST(BuildInitial, GaussianProfileAndCoin) {
  const double sigma = 2.5;
  const PositionState s = build_initial(Gaussian{sigma});
  EXPECT_EQ(s.x_min(), -20);
  EXPECT_EQ(s.x_max(), 20);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
  const double ratio = std::abs(s.at(3).a) / std::abs(s.at(0).a);
  EXPECT_NEAR(ratio, std::exp(-9.0 / (4.0 * sigma * sigma)), 1e-14);
  for (std::int64_t x = -20; x <= 20; ++x) EXPECT_NEAR(std::abs(s.at(x).b - kI * s.at(x).a), 0.0, 1e-16);
}

TEST(BuildInitial, ParameterErrors) {
  EXPECT_THROW(build_initial(Localized{4.0, 0.0}), ParameterError);
  EXPECT_THROW(build_initial(Localized{0.0, -3.2}), ParameterError);
  EXPECT_THROW(build_initial(H1{1.6, 0.0}), ParameterError);
  EXPECT_THROW(build_initial(H1{0.0, 3.5}), ParameterError);
  EXPECT_THROW(build_initial(Gaussian{0.0}), ParameterError);
  EXPECT_THROW(build_initial(Gaussian{-1.0}), ParameterError);
  EXPECT_NO_THROW(build_initial(Localized{-kPi, kPi}));
  EXPECT_NO_THROW(build_initial(H1{-kPi / 2.0, -kPi}));
}

TEST(FourierTransform, ZeroLIsConstant) {
  const KSpinorField f = fourier_transform(zero_l(), 64);
  for (std::size_t j = 0; j < f.size(); ++j) {
    EXPECT_EQ(f[j].a, complex_t{});
    EXPECT_NEAR(std::abs(f[j].b - 1.0), 0.0, 1e-15);
  }
}

TEST(FourierTransform, PsiPlusMinusModuli) {
  const KSpinorField plus = fourier_transform(psi(+1), 128);
  const KSpinorField minus = fourier_transform(psi(-1), 128);
  for (std::size_t j = 0; j < plus.size(); ++j) {
    const double k = plus.node(j);
    EXPECT_NEAR(std::norm(plus[j].a), std::cos(k) * std::cos(k), 1e-14);
    EXPECT_NEAR(std::norm(minus[j].a), std::sin(k) * std::sin(k), 1e-14);
  }
}

TEST(FourierTransform, MatchesDirectExponentialSum) {
  const PositionState s = evolve(build_initial(Localized{0.4, 1.1}), StepCount(9));
  oracle::SparseState sparse;
  for (std::int64_t x = s.x_min(); x <= s.x_max(); ++x) sparse[x] = {s.at(x).a, s.at(x).b};
  const KSpinorField f = fourier_transform(s, 64);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto [a, b] = oracle::dft_at(sparse, f.node(j));
    EXPECT_NEAR(std::abs(f[j].a - a), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(f[j].b - b), 0.0, 1e-13);
  }
}

TEST(FourierTransform, ParsevalAndGridChecks) {
  const PositionState s = evolve(zero_l(), StepCount(20));
  EXPECT_NEAR(fourier_transform(s, 128).norm_squared(), 1.0, 1e-12);
  EXPECT_THROW(fourier_transform(s, 64), AliasingError);  // width 41 needs N >= 82
  EXPECT_THROW(fourier_transform(s, 127), ParameterError);
  EXPECT_THROW(fourier_transform(s, 0), ParameterError);
}

TEST(InverseFourier, RoundTrips) {
  const KSpinorField f = fourier_transform(zero_l(), 16);
  EXPECT_LE(max_abs_difference(inverse_fourier(f, 0, 0), zero_l()), 1e-15);

  const KSpinorField constant(std::vector<CoinSpinor>(32, CoinSpinor{0.0, 1.0}));
  const PositionState back = inverse_fourier(constant, -5, 5);
  EXPECT_LE(max_abs_difference(back, zero_l()), 1e-15);

  const PositionState m = psi(-1);
  EXPECT_LE(max_abs_difference(inverse_fourier(fourier_transform(m, 1024), -1, 1), m), 1e-12);
}

TEST(InverseFourier, SupportBeyondCapacity) {
  const KSpinorField f = fourier_transform(zero_l(), 8);
  EXPECT_THROW(inverse_fourier(f, -4, 4), AliasingError);
  EXPECT_NO_THROW(inverse_fourier(f, -4, 3));
}

TEST(KSpinorField, RejectsOddGrid) {
  EXPECT_THROW(KSpinorField(std::vector<CoinSpinor>(7)), ParameterError);
  EXPECT_THROW(KSpinorField(std::vector<CoinSpinor>{}), ParameterError);
}

TEST(PositionDistribution, Examples) {
  const Distribution d0 = position_distribution(zero_l());
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_DOUBLE_EQ(d0.at(0), 1.0);

  const Distribution dp = position_distribution(psi(+1));
  EXPECT_NEAR(dp.at(-1), 0.5, 1e-15);
  EXPECT_NEAR(dp.at(1), 0.5, 1e-15);
  EXPECT_EQ(dp.at(0), 0.0);

  const Distribution d1 = position_distribution(step(zero_l()));
  EXPECT_NEAR(d1.at(-1), 0.5, 1e-15);
  EXPECT_NEAR(d1.at(1), 0.5, 1e-15);
  EXPECT_NEAR(d1.at(0), 0.0, 1e-15);
}

TEST(Variance, Examples) {
  EXPECT_EQ(variance({{0, 1.0}}), 0.0);
  EXPECT_DOUBLE_EQ(variance({{-1, 0.5}, {1, 0.5}}), 1.0);
  EXPECT_DOUBLE_EQ(mean({{-1, 0.25}, {3, 0.75}}), 2.0);
}

// Variance grows ballistically. The oracle fit over t in [100, 500] was
// computed with an independent dense simulation: c = 0.20762595237004852.
// The t -> infinity limit is (sqrt2 - 1)/2.
TEST(Variance, QuadraticGrowthFromZeroL) {
  PositionState s = zero_l();
  std::vector<double> ts, vs;
  for (std::int64_t t = 0; t <= 500; ++t) {
    if (t >= 100) {
      ts.push_back(static_cast<double>(t));
      vs.push_back(variance(position_distribution(s)));
    }
    s = step(s);
  }
  const double c = fit_quadratic_coefficient(ts, vs);
  EXPECT_NEAR(c, 0.20762595237004852, 1e-9);
  EXPECT_NEAR(c, (std::numbers::sqrt2 - 1.0) / 2.0, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) worst = std::max(worst, std::abs(vs[i] - c * ts[i] * ts[i]) / vs[i]);
  EXPECT_LT(worst, 1e-2);
}
