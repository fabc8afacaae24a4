#include "wavepack/stretched_fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace wavepack {

using detail::CQ;
using detail::Q;

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(long v) { return v > 0 && (v & (v - 1)) == 0; }

void check_params(const SFParams& p, long n_min, long n_max) {
  if (!(p.lambda > 0)) throw DomainError("sf: lambda must be > 0");
  if (!is_pow2(p.n_modes)) throw DomainError("sf: n_modes must be a power of two");
  if (p.oversample < 2) throw DomainError("sf: oversample must be >= 2");
  long half = p.n_modes / 2;
  if (n_min > n_max || n_min < -half || n_max > half - 1)
    throw DomainError("sf: index range must lie in [-N/2, N/2-1]");
}

// Samples x_k = -lambda + 2 lambda k / M, k = 0..M-1, with the endpoint
// pair averaged into k = 0 (periodic trapezoid).
template <class C, class F>
std::vector<C> samples(const SFParams& p, F&& f) {
  const long M = static_cast<long>(p.oversample) * p.n_modes;
  std::vector<C> v(M);
  using R = detail::real_of<C>;
  R lam = p.lambda;
  for (long k = 1; k < M; ++k) v[k] = C(f(-lam + 2 * lam * R(k) / R(M)));
  v[0] = C((f(-lam) + f(lam)) / 2);
  return v;
}

template <class C>
CoeffSeries assemble(std::vector<C>& data, const SFParams& p, long n_min, long n_max) {
  using R = detail::real_of<C>;
  detail::dft_forward(data);
  const long M = static_cast<long>(data.size());
  R lam = p.lambda;
  R scale = (2 * lam / R(M)) / sqrt(2 * lam);  // h (2 lambda)^(-1/2)
  CoeffSeries s;
  s.basis = BasisId::stretched_fourier(p.lambda);
  s.n_min = n_min;
  s.method = Method::FFT;
  for (long n = n_min; n <= n_max; ++n) {
    C v = data[((n % M) + M) % M] * scale;
    if (n % 2) v = -v;  // exp(i pi n) from the grid starting at -lambda
    if constexpr (std::is_same_v<C, CQ>)
      s.values.push_back(detail::to_lmp(v));
    else
      s.values.push_back(LogMagPhase::from_complex(v));
  }
  return s;
}

}  // namespace

std::complex<double> sf_basis(long n, double lambda, double x) {
  if (!(lambda > 0)) throw DomainError("sf_basis: lambda must be > 0");
  if (std::fabs(x) > lambda) return {0.0, 0.0};
  // reduce n x / lambda mod 2 before multiplying by pi
  double t = std::fmod(static_cast<double>(n) * x / lambda, 2.0);
  return std::polar(1.0 / std::sqrt(2.0 * lambda), kPi * t);
}

double lambda_optimal(double alpha, double x0, double epsilon) {
  if (!(alpha > 0)) throw DomainError("lambda_optimal: alpha must be > 0");
  if (!(epsilon > 0 && epsilon <= 1)) throw DomainError("lambda_optimal: epsilon must be in (0, 1]");
  return std::fabs(x0) + std::sqrt(std::log(1.0 / epsilon) / alpha);
}

CoeffSeries sf_coefficients(const WavePacket& wp, const SFParams& p, long n_min, long n_max,
                            Precision prec) {
  check_params(p, n_min, n_max);
  const long M = static_cast<long>(p.oversample) * p.n_modes;
  double h = 2.0 * p.lambda / M;
  if (wp.omega != 0 && h > (2.0 * kPi / std::fabs(wp.omega)) / 4.0)
    throw UnderResolved("sf: sample spacing " + std::to_string(h) +
                        " exceeds a quarter period; raise n_modes or oversample");
  if (prec == Precision::Extended) {
    const Q a = wp.alpha, x0 = wp.x0, w = wp.omega;
    auto data = samples<CQ>(p, [&](Q x) {
      Q d = x - x0;
      return Q(exp(-a * d * d) * cos(w * x));
    });
    return assemble(data, p, n_min, n_max);
  }
  auto data = samples<std::complex<double>>(p, [&](double x) { return eval_wavepacket(wp, x); });
  return assemble(data, p, n_min, n_max);
}

CoeffSeries sf_coefficients(const RealFunction& f, const SFParams& p, long n_min, long n_max) {
  check_params(p, n_min, n_max);
  auto data = samples<std::complex<double>>(p, [&](double x) { return f(x); });
  return assemble(data, p, n_min, n_max);
}

CoeffSeries sf_coefficients(const WavePacket& wp, const SFParams& p) {
  return sf_coefficients(wp, p, -p.n_modes / 2, p.n_modes / 2 - 1);
}

double sf_bound(const WavePacket& wp, double lambda, long n) {
  if (lambda < std::fabs(wp.x0))
    throw DomainError("sf_bound: requires lambda >= |x0|");
  double a = wp.alpha;
  double d = kPi * std::labs(n) - lambda * std::fabs(wp.omega);
  double gap = lambda - std::fabs(wp.x0);
  return std::sqrt(kPi / (2.0 * a * lambda)) *
         (std::exp(-d * d / (4.0 * a * lambda * lambda)) + std::exp(-a * gap * gap));
}

SFCountPrediction sf_count_predict(double alpha, double x0, double omega, double epsilon) {
  if (!(alpha > 0)) throw DomainError("sf_count_predict: alpha must be > 0");
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("sf_count_predict: epsilon must be in (0, 1)");
  double L = std::log(1.0 / epsilon);
  SFCountPrediction r;
  r.count_width = 4.0 / std::sqrt(kPi) *
                  std::sqrt(alpha * std::fabs(x0) * L + std::sqrt(alpha) * std::pow(L, 1.5));
  r.max_n = std::fabs(omega) / kPi * (std::fabs(x0) + std::sqrt(L / alpha)) + r.count_width / 2.0;
  return r;
}

}  // namespace wavepack
