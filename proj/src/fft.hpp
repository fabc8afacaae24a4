#pragma once

#include <complex>
#include <vector>

#include "quad.hpp"

namespace wavepack::detail {

// In-place forward DFT X_k = sum_j x_j exp(-2 pi i j k / M).
void dft_forward(std::vector<std::complex<double>>& data);
void dft_forward(std::vector<CQ>& data);

}  // namespace wavepack::detail
