#pragma once

#include <complex>

#include "wavepack/core.hpp"

namespace wavepack {

// How the MT basis factor is evaluated inside the oracle integrand.
enum class MTEval {
  Direct,  // x-domain, rational form i^n sqrt(2/pi) (1+2ix)^n / (1-2ix)^(n+1)
  Theta    // theta-domain after x = tan(theta/2)/2
};

struct QuadConfig {
  int points_per_period = 10;         // Gauss nodes per oscillation period, >= 10
  double truncation_log_tol = -80.0;  // integrate where log envelope >= this
  int panel_order = 32;               // supported: 16, 20, 32, 48, 64
  MTEval mt_eval = MTEval::Direct;
  // Only for RealFunction inputs with algebraic decay.
  double omega_hint = 1.0;            // oscillation frequency of f itself
  double max_half_width = 1e4;        // cap on the truncation interval
  bool accept_loose_tail = false;     // report instead of throwing
};

struct OracleResult {
  LogMagPhase value;
  double tail_bound = 0.0;  // bound on the discarded tail integral
  long nodes = 0;
};

// a_n = integral of f(x) conj(phi_n(x)) dx over the real line.
LogMagPhase oracle_coefficient(const WavePacket& wp, const BasisId& basis, long n,
                               const QuadConfig& cfg = {});
LogMagPhase oracle_coefficient(const RealFunction& f, const BasisId& basis, long n,
                               const QuadConfig& cfg = {});
OracleResult oracle_coefficient_detail(const RealFunction& f, const BasisId& basis, long n,
                                       const QuadConfig& cfg = {});

// b_n(sign * omega) = 1/2 integral exp(-alpha (x-x0)^2 + i sign omega x) conj(phi_n(x)) dx.
LogMagPhase oracle_b(const WavePacket& wp, const BasisId& basis, long n, int sign,
                     const QuadConfig& cfg = {});

// All a_n for n in [n_min, n_max] from one sweep over the quadrature nodes.
CoeffSeries oracle_series(const WavePacket& wp, const BasisId& basis, long n_min, long n_max,
                          const QuadConfig& cfg = {});

// integral of phi_m conj(phi_n).
std::complex<double> oracle_basis_inner(const BasisId& basis, long m, long n,
                                        const QuadConfig& cfg = {});

// integral of f^2.
double oracle_norm_squared(const WavePacket& wp, const QuadConfig& cfg = {});

// (2 pi c)^(-1/2) integral exp(-x^2/(2c)) H_n(x) exp(i p x) dx, Re c > 0.
LogMagPhase oracle_hermite_fourier(long n, std::complex<double> c, std::complex<double> p,
                                   const QuadConfig& cfg = {});

}  // namespace wavepack
