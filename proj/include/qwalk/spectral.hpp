#pragma once

#include "qwalk/evolution.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Diagonalization of the k-space step operator
///
///   U_k = (1/sqrt2) [[e^{-ik}, e^{-ik}], [e^{ik}, -e^{ik}]]
///
/// with eigenvectors alpha_k (u, v) for e^{-i omega} and beta_k (u, w) for
/// -e^{+i omega}, where sin(omega) = sin(k)/sqrt2 on the principal branch.
struct KEigensystem {
  double k = 0.0;
  double omega = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  complex_t u;
  complex_t v;
  complex_t w;

  complex_t eigenvalue1() const { return std::polar(1.0, -omega); }
  complex_t eigenvalue2() const { return -std::polar(1.0, omega); }
  CoinSpinor eigenvector1() const { return {alpha * u, alpha * v}; }
  CoinSpinor eigenvector2() const { return {beta * u, beta * w}; }
};

KEigensystem eigensystem(double k);

/// Unnormalized projections of an initial spinor on the two eigenvectors.
struct FGFactors {
  complex_t f;
  complex_t g;
};

/// F = u* a + v* b, G = u* a + w* b.
FGFactors fg_factors(const KEigensystem& es, const CoinSpinor& s0);

/// U_k applied to a single spinor.
CoinSpinor apply_step_matrix(double k, const CoinSpinor& s);

/// U_k^t applied at one node through the spectral decomposition.
CoinSpinor spectral_evolve(const KEigensystem& es, const CoinSpinor& s0, std::int64_t t);

KSpinorField k_evolve(const KSpinorField& f, StepCount t);
KSpinorField single_k_step(const KSpinorField& f);

/// Closed-form amplitudes of the walk started from a~ = 0, b~ = 1, in the
/// reflected convention they are usually quoted in (Fourier kernel e^{+ikx}).
CoinSpinor reflected_closed_form(double k, std::int64_t t);

/// The same closed form mapped to this library's convention:
/// a~(k) = i (-1)^t a~_N(-k), b~(k) = (-1)^t b~_N(-k).
CoinSpinor closed_form_amplitudes(double k, std::int64_t t);

}  // namespace qwalk
