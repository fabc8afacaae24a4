#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavepack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or violated hypotheses of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Sampling too coarse for the requested transform.
class UnderResolved : public Error {
 public:
  using Error::Error;
};

// Asymptotic estimate requested outside its validity window.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

// Hermite estimate branch requested where its square roots degenerate.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Envelope metadata cannot bound the quadrature tail.
class TruncationUnreliable : public Error {
 public:
  using Error::Error;
};

class DegenerateCubic : public Error {
 public:
  using Error::Error;
};

class BranchPoint : public Error {
 public:
  using Error::Error;
};

// f(x) = exp(-alpha (x - x0)^2) cos(omega x), alpha > 0.
struct WavePacket {
  double alpha;
  double x0;
  double omega;

  WavePacket(double alpha, double x0, double omega);
};

// Wrap an angle into (-pi, pi].
double wrap_phase(double phi);

// Complex number stored as (log|z|, arg z) so magnitudes far below the
// double range survive. Exact zero is log_mag = -inf, phase = 0.
class LogMagPhase {
 public:
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  LogMagPhase() = default;
  LogMagPhase(double log_mag, double phase);

  static LogMagPhase zero() { return {}; }
  static LogMagPhase from_complex(std::complex<double> z);
  static LogMagPhase from_real(double x);
  // exp(w) for complex w, without forming exp(w) in doubles.
  static LogMagPhase from_log(std::complex<double> w);

  bool is_zero() const;
  std::complex<double> to_complex() const;
  double abs() const;
  double log10_abs() const;
  LogMagPhase conj() const;
  LogMagPhase real_part() const;

  friend LogMagPhase operator*(const LogMagPhase& a, const LogMagPhase& b);
  friend LogMagPhase operator/(const LogMagPhase& a, const LogMagPhase& b);
  friend LogMagPhase operator+(const LogMagPhase& a, const LogMagPhase& b);
  friend LogMagPhase operator-(const LogMagPhase& a);
  friend LogMagPhase operator-(const LogMagPhase& a, const LogMagPhase& b);
};

enum class Basis { StretchedFourier, Hermite, MalmquistTakenaka };
enum class Method { FFT, ClosedForm, Oracle, Estimate };

// Working precision of FFT paths. Extended samples and transforms in
// binary128, which is what the oracle-equivalence checks need.
enum class Precision { Double, Extended };

struct BasisId {
  Basis kind = Basis::Hermite;
  double lambda = 0.0;  // stretched Fourier half-width

  static BasisId stretched_fourier(double lambda) { return {Basis::StretchedFourier, lambda}; }
  static BasisId hermite() { return {Basis::Hermite, 0.0}; }
  static BasisId mt() { return {Basis::MalmquistTakenaka, 0.0}; }
};

std::string to_string(Basis b);
std::string to_string(Method m);

// Contiguous run of coefficients a_{n_min}, a_{n_min+1}, ...
struct CoeffSeries {
  BasisId basis;
  long n_min = 0;
  std::vector<LogMagPhase> values;
  Method method = Method::ClosedForm;
  // Optional parallel channels; empty when unused.
  std::vector<LogMagPhase> estimate;
  std::vector<std::uint8_t> flagged;

  long n_max() const { return n_min + static_cast<long>(values.size()) - 1; }
  bool contains(long n) const { return n >= n_min && n <= n_max(); }
  const LogMagPhase& at(long n) const;
};

struct Decay {
  enum class Kind { Gaussian, Algebraic, Unknown };
  Kind kind = Kind::Unknown;
  double param = 0.0;   // alpha for Gaussian, power for Algebraic
  double center = 0.0;  // |f(x)| <= envelope(x - center)

  static Decay gaussian(double alpha, double center = 0.0) { return {Kind::Gaussian, alpha, center}; }
  static Decay algebraic(double power) { return {Kind::Algebraic, power, 0.0}; }
  static Decay unknown() { return {}; }
};

// Black-box real function plus the decay metadata used for truncation.
struct RealFunction {
  std::function<double(double)> eval;
  Decay decay;

  double operator()(double x) const { return eval(x); }
};

// Result of an asymptotic estimate. envelope has phase 0.
struct EstimateValue {
  LogMagPhase envelope;
  LogMagPhase value;
  bool valid = true;
  std::string note;
};

double eval_wavepacket(const WavePacket& wp, double x);

// Closed form of the integral of f^2 over the real line.
double norm_squared(const WavePacket& wp);

RealFunction as_real_function(const WavePacket& wp);

}  // namespace wavepack
