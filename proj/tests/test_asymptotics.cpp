#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;
namespace cst = qwalk::constants;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

KSpinorField field(const InitialCondition& ic, std::size_t n = 1024) { return fourier_transform(build_initial(ic), n); }

std::vector<double> sampled(std::size_t n, double (*w)(double)) {
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = w(-kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  return out;
}

}  // namespace

TEST(Constants, NumericValues) {
  EXPECT_EQ(cst::kDelta0, cst::kDelta0Alt);
  EXPECT_NEAR(cst::s_plus(), 0.978660084, 1e-9);
  EXPECT_NEAR(cst::s_minus(), 0.661290235, 1e-9);
  EXPECT_NEAR(cst::s0(), 0.87242934, 1e-8);
  EXPECT_NEAR(entropy_from_delta(cst::kDeltaMinLocalized).entropy, 0.735915938, 1e-9);
  // |B|^2 budget: a unit-trace state with A = C = 1/2 has delta = 1/4 - |B|^2.
  EXPECT_NEAR(entropy_from_delta(0.25 - cst::kBPlus * cst::kBPlus).entropy, cst::s_plus(), 1e-14);
  EXPECT_NEAR(entropy_from_delta(0.25 - cst::kBMinus * cst::kBMinus).entropy, cst::s_minus(), 1e-14);
}

TEST(Coefficients, QuadratureMatchesClosedForm) {
  const AsymptoticCoefficients q = quadrature_coefficients();
  const AsymptoticCoefficients c = closed_form_coefficients();
  EXPECT_NEAR(c.c1, 1.0 - kSqrt2 / 4.0, 1e-16);
  EXPECT_NEAR(c.b4, (kSqrt2 - 1.0) / 2.0, 1e-16);
  for (auto m : {&AsymptoticCoefficients::c1, &AsymptoticCoefficients::c2, &AsymptoticCoefficients::c3,
                 &AsymptoticCoefficients::b1, &AsymptoticCoefficients::b2, &AsymptoticCoefficients::b3,
                 &AsymptoticCoefficients::b4}) {
    EXPECT_NEAR(q.*m, c.*m, 1e-12);
  }
}

TEST(Weights, OracleAverages) {
  EXPECT_NEAR(oracle::average(q_weight, 4096), 1.0, 1e-14);
  const double re = oracle::average([](double k) { return r_weight(k).real(); }, 4096);
  const double im = oracle::average([](double k) { return r_weight(k).imag(); }, 4096);
  EXPECT_NEAR(re, 0.0, 1e-14);
  EXPECT_NEAR(im, -(kSqrt2 - 1.0), 1e-14);
}

TEST(General, PsiPlus) {
  const ReducedDensity rd = asymptotic_reduced_density(field(H1{kPi / 4.0, 0.0}));
  EXPECT_NEAR(rd.a, 0.5, 1e-12);
  EXPECT_NEAR(rd.c, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(rd.b), cst::kBPlus, 1e-12);
  EXPECT_NEAR(entropy(rd).entropy, cst::s_plus(), 1e-12);
}

TEST(General, PsiMinus) {
  const ReducedDensity rd = asymptotic_reduced_density(field(H1{kPi / 4.0, kPi}));
  EXPECT_NEAR(std::abs(rd.b), cst::kBMinus, 1e-12);
  EXPECT_NEAR(entropy(rd).entropy, cst::s_minus(), 1e-12);
}

TEST(General, ZeroL) {
  const ReducedDensity rd = asymptotic_reduced_density(field(Localized{kPi / 2.0, 0.0}));
  EXPECT_NEAR(rd.a, kSqrt2 / 4.0, 1e-12);
  EXPECT_NEAR(rd.c, 1.0 - kSqrt2 / 4.0, 1e-12);
  EXPECT_NEAR(std::abs(rd.b - complex_t(-(2.0 - kSqrt2) / 4.0, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(rd.delta(), cst::kDelta0, 1e-12);
}

TEST(Symmetric, ConstantHalfWeight) {
  const std::vector<double> w(256, 0.5);
  const ReducedDensity rd = asymptotic_reduced_density_symmetric(w);
  EXPECT_NEAR(rd.a, 0.5, 1e-14);
  EXPECT_NEAR(rd.c, 0.5, 1e-14);
}

TEST(Symmetric, CosSquaredWeight) {
  const ReducedDensity rd = asymptotic_reduced_density_symmetric(sampled(512, [](double k) { return std::cos(k) * std::cos(k); }));
  EXPECT_NEAR(rd.a, 0.5, 1e-14);
  EXPECT_NEAR(rd.trace(), 1.0, 1e-14);
}

TEST(Symmetric, NarrowPeakAtZeroIsMaximallyMixed) {
  std::vector<double> w(1024, 0.0);
  w[512] = 512.0;  // node k = 0; average of w equals 1/2
  const ReducedDensity rd = asymptotic_reduced_density_symmetric(w);
  EXPECT_NEAR(rd.a, 0.5, 1e-14);
  EXPECT_NEAR(std::abs(rd.b), 0.0, 1e-14);
  EXPECT_NEAR(entropy(rd).entropy, 1.0, 1e-14);
}

TEST(Symmetric, AgreesWithGeneralRoute) {
  for (const InitialCondition& ic : {InitialCondition{H1{kPi / 4.0, 0.0}}, InitialCondition{Gaussian{3.0}}}) {
    const KSpinorField f = field(ic);
    const ReducedDensity g = asymptotic_reduced_density(f);
    const ReducedDensity s = asymptotic_reduced_density_symmetric(f);
    EXPECT_NEAR(g.a, s.a, 1e-12);
    EXPECT_NEAR(g.c, s.c, 1e-12);
    EXPECT_NEAR(std::abs(g.b - s.b), 0.0, 1e-12);
  }
}

TEST(Symmetric, RejectsAsymmetricField) {
  EXPECT_THROW(asymptotic_reduced_density_symmetric(field(Localized{0.3, 0.0})), PreconditionError);
  EXPECT_THROW(asymptotic_reduced_density_symmetric(field(Localized{0.0, 0.0}, 16)), PreconditionError);
}

TEST(Localized, DeltaExamples) {
  EXPECT_NEAR(localized_delta(0.0, 0.0), cst::kDelta0, 1e-16);
  EXPECT_NEAR(localized_delta(0.7, kPi / 2.0), cst::kDelta0, 1e-16);
  EXPECT_NEAR(localized_delta(kPi / 8.0, 0.0), cst::kDeltaMinLocalized, 1e-15);
  EXPECT_NEAR(localized_delta(-kPi / 8.0, 0.0), 0.25, 1e-15);
  EXPECT_NEAR(localized_entropy(-kPi / 8.0, 0.0).entropy, 1.0, 1e-12);
  EXPECT_NEAR(localized_entropy(kPi / 8.0, 0.0).entropy, 0.735915938, 1e-9);
}

TEST(Localized, DeltaOffsetIsOddInAlpha) {
  for (double a : {0.1, 0.4, 1.2}) {
    for (double b : {-2.0, 0.3}) {
      EXPECT_NEAR(localized_delta(a, b) - cst::kDelta0, -(localized_delta(-a, b) - cst::kDelta0), 1e-15);
    }
  }
}

TEST(Localized, ClosedFormMatchesQuadratureOnGrid) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const double a = -kPi + 2.0 * kPi * i / 8.0 + 0.05;
      const double b = -kPi + 2.0 * kPi * j / 8.0 + 0.11;
      const ReducedDensity q = asymptotic_reduced_density(field(Localized{a, b}, 256));
      const ReducedDensity c = localized_reduced_density(a, b);
      worst = std::max({worst, std::abs(q.a - c.a), std::abs(q.c - c.c), std::abs(q.b - c.b)});
      EXPECT_NEAR(c.delta(), localized_delta(a, b), 1e-14);
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(H1, Examples) {
  EXPECT_NEAR(h1_eigenvalues(0.0, 0.0).entropy, cst::s0(), 1e-12);
  EXPECT_NEAR(h1_eigenvalues(kPi / 4.0, 0.0).entropy, cst::s_plus(), 1e-12);
  EXPECT_NEAR(h1_eigenvalues(kPi / 4.0, kPi).entropy, cst::s_minus(), 1e-12);
}

TEST(H1, ClosedFormMatchesQuadratureOnGrid) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const double th = -kPi / 2.0 + kPi * i / 8.0 + 0.03;
      const double ph = -kPi + 2.0 * kPi * j / 8.0 + 0.07;
      const ReducedDensity q = asymptotic_reduced_density(field(H1{th, ph}, 256));
      const ReducedDensity c = h1_reduced_density(th, ph);
      worst = std::max({worst, std::abs(q.a - c.a), std::abs(q.c - c.c), std::abs(q.b - c.b)});
      const EntanglementResult e = h1_eigenvalues(th, ph);
      EXPECT_NEAR(e.entropy, entropy(q).entropy, 1e-12);
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Gaussian, GridSize) {
  EXPECT_EQ(gaussian_grid_size(1.0), 1024u);
  EXPECT_GE(gaussian_grid_size(100.0), 2u * (2u * 800u + 1u));
}

TEST(Gaussian, EntropyApproachesOneWithSpread) {
  double previous = 0.0;
  for (double sigma : {1.0, 2.0, 4.0, 8.0}) {
    const double s = gaussian_asymptotic_entropy(sigma);
    EXPECT_GT(s, previous);
    previous = s;
  }
  EXPECT_NEAR(gaussian_asymptotic_entropy(10.0), 0.99999887, 1e-7);
}
