#pragma once

// Binary128 helpers shared by the extended-precision paths.

#include <type_traits>

#include <boost/multiprecision/complex128.hpp>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include "wavepack/core.hpp"

namespace wavepack::detail {

using Q = boost::multiprecision::float128;
using CQ = boost::multiprecision::complex128;

// Real scalar type underlying a complex sample type.
template <class C>
using real_of = std::conditional_t<std::is_same_v<C, CQ>, Q, double>;

inline const Q& q_pi() {
  static const Q v = boost::math::constants::pi<Q>();
  return v;
}

// Reduce an angle into (-pi, pi] in binary128 before rounding to double.
inline Q q_wrap(Q phi) {
  Q two_pi = 2 * q_pi();
  Q r = phi - two_pi * boost::multiprecision::round(phi / two_pi);
  if (r <= -q_pi()) r += two_pi;
  if (r > q_pi()) r -= two_pi;
  return r;
}

// z * exp(log_scale) as LogMagPhase.
inline LogMagPhase to_lmp(const CQ& z, Q log_scale = 0) {
  Q re = z.real(), im = z.imag();
  if (re == 0 && im == 0) return LogMagPhase::zero();
  Q mag = boost::multiprecision::hypot(re, im);
  return {static_cast<double>(log(mag) + log_scale),
          static_cast<double>(boost::multiprecision::atan2(im, re))};
}

inline LogMagPhase real_to_lmp(Q x, Q log_scale = 0) {
  if (x == 0) return LogMagPhase::zero();
  return {static_cast<double>(log(boost::multiprecision::fabs(x)) + log_scale),
          x < 0 ? static_cast<double>(q_pi()) : 0.0};
}

// Compensated (Kahan-Babuska) accumulator; T is a real or complex number type.
template <class T>
class KahanSum {
 public:
  void add(const T& x) {
    T t = sum_ + x;
    comp_ += (abs_ge(sum_, x)) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  template <class U>
  static bool abs_ge(const U& a, const U& b) {
    using std::abs;
    return abs(a) >= abs(b);
  }
  T sum_{};
  T comp_{};
};

// Complex Kahan sum built from two real sums so the compensation is exact
// componentwise.
template <class R>
class ComplexKahan {
 public:
  template <class C>
  void add(const C& z) {
    re_.add(R(z.real()));
    im_.add(R(z.imag()));
  }
  R real() const { return re_.value(); }
  R imag() const { return im_.value(); }

 private:
  KahanSum<R> re_;
  KahanSum<R> im_;
};

}  // namespace wavepack::detail
