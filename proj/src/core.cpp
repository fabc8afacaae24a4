#include "wavepack/core.hpp"

#include <cmath>
#include <numbers>

namespace wavepack {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

WavePacket::WavePacket(double a, double shift, double w) : alpha(a), x0(shift), omega(w) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("WavePacket: alpha must be finite and > 0");
  if (!std::isfinite(x0) || !std::isfinite(omega))
    throw DomainError("WavePacket: x0 and omega must be finite");
}

double wrap_phase(double phi) {
  if (!std::isfinite(phi)) return phi;
  double r = std::remainder(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

LogMagPhase::LogMagPhase(double lm, double ph) : log_mag(lm), phase(wrap_phase(ph)) {
  if (log_mag == kNegInf) phase = 0.0;
}

LogMagPhase LogMagPhase::from_complex(std::complex<double> z) {
  if (z == 0.0) return zero();
  // hypot avoids spurious overflow for large components
  return {std::log(std::hypot(z.real(), z.imag())), std::arg(z)};
}

LogMagPhase LogMagPhase::from_real(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x < 0 ? kPi : 0.0};
}

LogMagPhase LogMagPhase::from_log(std::complex<double> w) {
  if (w.real() == kNegInf) return zero();
  return {w.real(), w.imag()};
}

bool LogMagPhase::is_zero() const { return log_mag == kNegInf; }

std::complex<double> LogMagPhase::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  const double m = std::exp(log_mag);
  // keep real and imaginary values exact on the axes
  if (phase == 0.0) return {m, 0.0};
  if (phase == kPi) return {-m, 0.0};
  if (phase == kPi / 2) return {0.0, m};
  if (phase == -kPi / 2) return {0.0, -m};
  return std::polar(m, phase);
}

double LogMagPhase::abs() const { return is_zero() ? 0.0 : std::exp(log_mag); }

double LogMagPhase::log10_abs() const { return log_mag / std::numbers::ln10; }

LogMagPhase LogMagPhase::conj() const { return {log_mag, -phase}; }

LogMagPhase LogMagPhase::real_part() const {
  if (is_zero()) return zero();
  double c = std::cos(phase);
  if (c == 0.0) return zero();
  return {log_mag + std::log(std::fabs(c)), c < 0 ? kPi : 0.0};
}

LogMagPhase operator*(const LogMagPhase& a, const LogMagPhase& b) {
  if (a.is_zero() || b.is_zero()) return LogMagPhase::zero();
  return {a.log_mag + b.log_mag, a.phase + b.phase};
}

LogMagPhase operator/(const LogMagPhase& a, const LogMagPhase& b) {
  if (b.is_zero()) throw DomainError("LogMagPhase: division by zero");
  if (a.is_zero()) return LogMagPhase::zero();
  return {a.log_mag - b.log_mag, a.phase - b.phase};
}

LogMagPhase operator+(const LogMagPhase& a, const LogMagPhase& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // exact opposites cancel exactly
  if (a.log_mag == b.log_mag && std::fabs(wrap_phase(a.phase - b.phase)) == kPi) return LogMagPhase::zero();
  double m = std::max(a.log_mag, b.log_mag);
  std::complex<double> s = std::polar(std::exp(a.log_mag - m), a.phase) +
                           std::polar(std::exp(b.log_mag - m), b.phase);
  if (s == 0.0) return LogMagPhase::zero();
  LogMagPhase r = LogMagPhase::from_complex(s);
  r.log_mag += m;
  return r;
}

LogMagPhase operator-(const LogMagPhase& a) {
  if (a.is_zero()) return a;
  return {a.log_mag, wrap_phase(a.phase + kPi)};
}

LogMagPhase operator-(const LogMagPhase& a, const LogMagPhase& b) { return a + (-b); }

std::string to_string(Basis b) {
  switch (b) {
    case Basis::StretchedFourier: return "sf";
    case Basis::Hermite: return "hermite";
    case Basis::MalmquistTakenaka: return "mt";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::FFT: return "fft";
    case Method::ClosedForm: return "closed-form";
    case Method::Oracle: return "oracle";
    case Method::Estimate: return "estimate";
  }
  return "?";
}

const LogMagPhase& CoeffSeries::at(long n) const {
  if (!contains(n)) throw DomainError("CoeffSeries: index " + std::to_string(n) + " out of range");
  return values[static_cast<std::size_t>(n - n_min)];
}

double eval_wavepacket(const WavePacket& wp, double x) {
  double d = x - wp.x0;
  return std::exp(-wp.alpha * d * d) * std::cos(wp.omega * x);
}

double norm_squared(const WavePacket& wp) {
  double a = wp.alpha, w = wp.omega;
  return 0.5 * std::sqrt(kPi / (2.0 * a)) *
         (1.0 + std::exp(-w * w / (2.0 * a)) * std::cos(2.0 * w * wp.x0));
}

RealFunction as_real_function(const WavePacket& wp) {
  return {[wp](double x) { return eval_wavepacket(wp, x); }, Decay::gaussian(wp.alpha, wp.x0)};
}

}  // namespace wavepack
