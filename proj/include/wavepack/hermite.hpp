#pragma once

#include <complex>

#include "wavepack/core.hpp"

namespace wavepack {

enum class HermiteRegime { AlphaAboveHalf, AlphaHalf, AlphaBelowHalf };

// Regime data of the closed form. X, Y are only defined for alpha != 1/2.
// prefactor is pi^(1/4) (2/(1+2 alpha))^(1/2) exp(-(alpha x0^2 + omega^2/2)/(1+2 alpha))
// times the unit phase exp(2 i alpha omega x0 / (1+2 alpha)).
struct HermiteClosedForm {
  HermiteRegime regime;
  double X = 0.0;
  double Y = 0.0;
  LogMagPhase prefactor;
};

HermiteClosedForm hermite_closed_form(const WavePacket& wp);

// Normalised Hermite function (2^n n! sqrt(pi))^(-1/2) H_n(x) exp(-x^2/2).
double hermite_basis(long n, double x);

// (1-2c)^(n/2) exp(-c p^2/2) H_n(c p / (2c-1)^(1/2)); exp(-p^2/4) (i p)^n at c = 1/2.
LogMagPhase hermite_H_fourier(long n, std::complex<double> c, std::complex<double> p);

// Physicists' Hermite polynomial H_n(z) at complex z, in log domain.
LogMagPhase hermite_H(long n, std::complex<double> z);

// Exact coefficients a_n for n in [n_min, n_max], n_min >= 0.
CoeffSeries hermite_coefficients(const WavePacket& wp, long n_min, long n_max);

// The complex quantity whose real part is a_n (alpha != 1/2 uses the regime
// form, alpha = 1/2 the closed form before the cosine). Its modulus is the
// oscillation-free size of the coefficients.
CoeffSeries hermite_complex_coefficients(const WavePacket& wp, long n_min, long n_max);

// The alpha = 1/2 closed form evaluated directly (any alpha is rejected but 1/2).
LogMagPhase hermite_alpha_half(const WavePacket& wp, long n);

// Same coefficients from the single recurrence in c = 1/(1+2 alpha) and
// p = omega - 2 i alpha x0, with no regime split. Used as a cross-check.
CoeffSeries hermite_coefficients_unified(const WavePacket& wp, long n_min, long n_max);

// Saddle of phi(w) = w^2 - 2 zeta w + log(w)/2 for H_n(nu zeta).
struct HermiteSaddle {
  double nu = 0.0;
  std::complex<double> zeta;
  std::complex<double> w_plus, w_minus;
  std::complex<double> w_star;  // the root closest to the origin
  std::complex<double> phi_at;
  std::complex<double> phi2_at;
  double residual = 0.0;  // |phi'(w_star)|
};

HermiteSaddle hermite_saddle(long n, std::complex<double> zeta);
// zeta = (X + iY)/nu for alpha > 1/2, (Y - iX)/nu for alpha < 1/2.
HermiteSaddle hermite_saddle(const WavePacket& wp, long n);

// Single-saddle approximation of H_n(nu zeta).
LogMagPhase hermite_saddle_Hn(const HermiteSaddle& s, long n);

enum class HermiteBranch { Auto, NonCritical, Critical };

struct HermiteEstimateOptions {
  double critical_band = 0.02;  // relative distance to c* that selects the critical branch
  HermiteBranch branch = HermiteBranch::Auto;
};

// c* = 1 / (2 (1 - 4 alpha^2)) for alpha < 1/2.
double hermite_critical_c(double alpha);

EstimateValue hermite_estimate(const WavePacket& wp, long n, const HermiteEstimateOptions& opt = {});

struct HermiteCount {
  long count = 0;      // #{n >= 0 : |a_n| > epsilon}
  long first = -1;     // smallest such n
  long last = -1;      // largest such n
  long scanned = 0;    // indices examined
  long argmax = -1;    // index of the largest |a_n| seen
};

HermiteCount hermite_count_detail(const WavePacket& wp, double epsilon);
long hermite_count(const WavePacket& wp, double epsilon);

// Diagnostic form of the crude count inequality with caller-supplied D and C:
// D [log eps + log|sqrt(2 alpha + 1) / (C c^(1/4))| - |alpha x0^2/(4 alpha^2 - 1) (1 - 2 alpha/S)|]
double hermite_crude_count(const WavePacket& wp, double epsilon, double c_n_omega, double D,
                           double C);

}  // namespace wavepack
