#pragma once

#include <cstddef>
#include <numbers>
#include <span>

#include "qwalk/entanglement.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Closed-form constants of the long-time reduced density.
namespace constants {

inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Determinant for every localized coin with beta = +-pi/2.
inline constexpr double kDelta0 = (kSqrt2 - 1.0) / 2.0;
/// Same constant in its other printed form, sqrt2/2 - 1/2.
inline constexpr double kDelta0Alt = kSqrt2 / 2.0 - 0.5;

/// |B-bar| for |0> (x) chi, Psi+ and Psi-.
inline constexpr double kB0 = (kSqrt2 - 1.0) / 2.0;
inline constexpr double kBPlus = (kSqrt2 - 1.0) * (kSqrt2 - 1.0) / 2.0;
inline constexpr double kBMinus = 0.5 - (kSqrt2 - 1.0) * (kSqrt2 - 1.0);
inline constexpr double kBPrime = (3.0 * kSqrt2 - 4.0) / 2.0;

/// Smallest reachable determinant for localized initial states.
inline constexpr double kDeltaMinLocalized = (4.0 * kSqrt2 - 5.0) / 4.0;

/// Long-time entropies; computed because std::log2 is not constexpr.
double s0();
double s_plus();
double s_minus();

}  // namespace constants

/// Coefficients of the long-time C-bar and B-bar for localized initial coins.
struct AsymptoticCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double b4 = 0.0;
};

AsymptoticCoefficients closed_form_coefficients();

/// Each coefficient by quadrature on an n-node periodic grid. Throws
/// ConsistencyError if any value is more than 1e-10 from its closed form.
AsymptoticCoefficients quadrature_coefficients(std::size_t grid_n = kDefaultGridSize);

/// Q(k) = 1 + sin k cos k / (1 + cos^2 k).
double q_weight(double k);

/// R(k) = e^{-ik} sin k / (1 + cos^2 k).
complex_t r_weight(double k);

/// Long-time A, B, C for an arbitrary initial field: the time-independent
/// parts of |a~_k(t)|^2, |b~_k(t)|^2 and a~_k b~_k^* averaged over k.
ReducedDensity asymptotic_reduced_density(const KSpinorField& f0);

/// Shortcut for fields with b~ = i a~: A = avg(Q w), B = avg(R w) with
/// w = |a~_k|^2. C is the remaining trace 2 avg(w) - A.
ReducedDensity asymptotic_reduced_density_symmetric(std::span<const double> weights);

/// Throws PreconditionError unless b~ = i a~ at every node within 1e-10.
ReducedDensity asymptotic_reduced_density_symmetric(const KSpinorField& f0);

/// Delta(alpha, beta) = Delta0 - 2 b1^2 cos(beta) sin(4 alpha).
double localized_delta(double alpha, double beta);

/// Long-time A, B, C for a localized coin from the seven coefficients:
///   A = c1 + (c2 - c1) sin^2 alpha + c3 sin 2alpha cos beta
///   B = b1 + (b2 - b1) sin^2 alpha + sin 2alpha (b3 cos beta - i b4 sin beta)
ReducedDensity localized_reduced_density(double alpha, double beta);
EntanglementResult localized_entropy(double alpha, double beta);

/// Long-time eigenvalues for H1(theta, phi):
/// 1/2 +- [(B0 - B' sin2theta cos phi)^2 + 2 (B+ sin2theta sin phi)^2]^{1/2}.
EntanglementResult h1_eigenvalues(double theta, double phi);

/// A = 1/2 - B+ s sin(phi), B = -B+ s sin(phi) - i (B0 - B' s cos(phi)),
/// with s = sin(2 theta).
ReducedDensity h1_reduced_density(double theta, double phi);

/// Grid size large enough for the Gaussian profile of spread sigma.
std::size_t gaussian_grid_size(double sigma);

/// Long-time eigenvalues and entropy for the Gaussian packet, through the
/// symmetric route on the transform of the truncated profile.
/// grid_n = 0 picks gaussian_grid_size(sigma).
EntanglementResult gaussian_asymptotics(double sigma, std::size_t grid_n = 0);
double gaussian_asymptotic_entropy(double sigma);

}  // namespace qwalk
