#pragma once

#include <complex>

#include "wavepack/core.hpp"

namespace wavepack {

struct SFParams {
  double lambda = 1.0;  // support is [-lambda, lambda]
  int n_modes = 1024;   // N, power of two
  int oversample = 4;   // FFT length is oversample * N
};

// (2 lambda)^(-1/2) exp(i pi n x / lambda) on [-lambda, lambda], zero outside.
std::complex<double> sf_basis(long n, double lambda, double x);

// |x0| + sqrt(log(1/epsilon) / alpha)
double lambda_optimal(double alpha, double x0, double epsilon);

// Trapezoidal coefficients of f on [-lambda, lambda] from one FFT.
// n range must lie in [-N/2, N/2 - 1].
CoeffSeries sf_coefficients(const WavePacket& wp, const SFParams& p, long n_min, long n_max,
                            Precision prec = Precision::Double);
CoeffSeries sf_coefficients(const RealFunction& f, const SFParams& p, long n_min, long n_max);
// Symmetric default range [-N/2, N/2 - 1].
CoeffSeries sf_coefficients(const WavePacket& wp, const SFParams& p);

// Upper bound on |a_n| for lambda >= |x0|.
double sf_bound(const WavePacket& wp, double lambda, long n);

struct SFCountPrediction {
  double count_width = 0.0;
  double max_n = 0.0;
};

SFCountPrediction sf_count_predict(double alpha, double x0, double omega, double epsilon);

}  // namespace wavepack
