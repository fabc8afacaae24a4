#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "wavepack/core.hpp"

namespace testing {

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline double rel_err(const wavepack::LogMagPhase& a, std::complex<double> b) {
  return rel_err(a.to_complex(), b);
}

}  // namespace testing
