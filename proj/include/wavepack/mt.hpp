#pragma once

#include <array>
#include <complex>
#include <vector>

#include "wavepack/core.hpp"

namespace wavepack {

// phi_n(x) = i^n sqrt(2/pi) (1+2ix)^n / (1-2ix)^(n+1).
std::complex<double> mt_basis(long n, double x);
// Same function at x = tan(theta/2)/2, where it equals
// i^n sqrt(2/pi) cos(theta/2) exp(i (n+1/2) theta).
std::complex<double> mt_basis_theta(long n, double theta);

// Coefficients from one FFT over the theta grid theta_k = -pi + 2 pi k / M.
// The n range must lie in [-M/2, M/2 - 1]. Throws UnderResolved when the
// integrand does not vanish near theta = +-pi or the spectrum is not resolved.
CoeffSeries mt_transform(const WavePacket& wp, long n_min, long n_max, long fft_size,
                         Precision prec = Precision::Double);
CoeffSeries mt_transform(const RealFunction& f, long n_min, long n_max, long fft_size);

// Smallest power of two (at least 1024) with four times the index range a
// wave packet occupies above ~1e-16 of its peak.
long mt_fft_size(const WavePacket& wp);

// g(z) = -alpha (z-x0)^2 + i omega z + n log(1-2iz) - (n+1) log(1+2iz).
struct MTPhase {
  WavePacket wp;
  long n;

  std::complex<double> g(std::complex<double> z) const;
  std::complex<double> g1(std::complex<double> z) const;
  std::complex<double> g2(std::complex<double> z) const;
};

struct SaddleData {
  std::array<std::complex<double>, 3> z;
  std::array<std::complex<double>, 3> g_at;
  std::array<std::complex<double>, 3> g2_at;
  std::complex<double> lambda_cardano;
  std::complex<double> p_cardano;
  std::array<double, 3> residual{};  // |cubic(z)| / (1 + |z|^3)
  bool near_degenerate = false;      // z2, z3 close to merging (c near 1/4)
  // Root sitting on -+i/2, which happens for n = 0 and n = -1 only. g and g''
  // are NaN there since that point is not a saddle of g.
  std::array<bool, 3> at_branch_point{};
};

// Monic cubic whose roots are the saddles of g.
std::complex<double> mt_cubic(const WavePacket& wp, long n, std::complex<double> z);

// Cardano roots labelled z1 (largest imaginary part), z2, z3 (z2 to the right
// of z3). With prev the roots are instead paired to the nearest previous root.
SaddleData mt_saddles(const WavePacket& wp, long n, const SaddleData* prev = nullptr);
std::vector<SaddleData> mt_saddle_sweep(const WavePacket& wp, long n_min, long n_max);

// Large-omega expansions of the three roots, accurate to O(omega^-2).
std::array<std::complex<double>, 3> mt_saddle_expansion(const WavePacket& wp, long n);

// Im g(x+iy) in the arctan form, principal branches.
double mt_im_g(const WavePacket& wp, long n, std::complex<double> z);

struct ContourTrace {
  std::vector<std::complex<double>> points;
  double im_g_level = 0.0;
  long saddle_index = 0;           // position of the saddle in points
  bool reached_far_field = false;  // some end got to |Re z| = x_stop
};

struct TraceOptions {
  double step = 1e-2;
  double x_stop = 50.0;
  long max_steps = 200000;
};

// Steepest-descent path through the saddle, traced both ways from it. The
// level is tracked with unwrapped arctan branches so it stays continuous.
ContourTrace trace_contour(const WavePacket& wp, long n, std::complex<double> saddle,
                           const TraceOptions& opt = {});
// Continuous Im g along a path. The arctan branches are fixed at path[anchor]
// and unwrapped outward from there.
std::vector<double> mt_im_g_along(const WavePacket& wp, long n,
                                  const std::vector<std::complex<double>>& path, long anchor = 0);

struct MTEstimateOptions {
  double margin = 0.01;  // c must be >= 1/4 + margin
  double c_max = 50.0;
};

struct MTEstimate {
  EstimateValue est;        // envelope |T2| + |T3|, value T2 + T3 (+ reflected half)
  LogMagPhase term2, term3; // (-i)^n exp(g(z)) / sqrt(-g''(z)) with the expanded g, g''
  LogMagPhase bound;        // the closed magnitude bound, equal to |T2|
  LogMagPhase simple;       // exp(-alpha (sqrt(c-1/4) - x0)^2) / (2 sqrt(c) |sqrt(-g''(z2))|)
  double c = 0.0;
  double reflected_log_bound = 0.0;  // log of the bound on the other half of a_n
  bool reflected_in_envelope = false;
};

// Estimate of a_n = b_n(omega) + b_n(-omega). One half comes from the two
// saddles, the other is bounded by mt_laguerre_bound and only widens the
// envelope when it is not negligible.
MTEstimate mt_estimate_detail(const WavePacket& wp, long n, const MTEstimateOptions& opt = {});
EstimateValue mt_estimate(const WavePacket& wp, long n, const MTEstimateOptions& opt = {});

// b_{-(n+1)}(-omega; x0) = i (-1)^n b_n(omega; -x0).
struct MTSymmetry {
  long base_n;
  int omega_sign;
  std::complex<double> phase;  // b_n(s omega; x0) = phase * b_base(-s omega; -x0)
  bool flips_x0 = true;
};
MTSymmetry mt_symmetry_reduce(long n, int omega_sign);

// pi^(1/4) 2^(-7/4) alpha^(-1/4) exp(-omega^2/(4 alpha)), bounds |b_n(omega)| for n <= -1.
double mt_laguerre_bound(double alpha, double omega);

// omega (1/4 + x0^2) - 1/2
double mt_peak_predict(const WavePacket& wp);

// omega [1/4 + (x0 + sqrt(-log(eps/C)/alpha))^2] - 1/2
double mt_count_predict(const WavePacket& wp, double epsilon, double calib_C);

}  // namespace wavepack
