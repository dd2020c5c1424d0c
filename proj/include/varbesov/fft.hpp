#pragma once

#include <complex>
#include <vector>

#include "varbesov/grid.hpp"

namespace varbesov::fft {

using Spectrum = std::vector<std::complex<double>>;

// Unnormalised forward DFT over all axes, FFT index order.
Spectrum forward(const Field& f);
// Inverse DFT including the 1/N^n factor; the imaginary residue is dropped.
Field inverse(const Grid& grid, Spectrum spectrum);

// F^{-1}(m * F f) for a real multiplier m given on spectral nodes.
Field apply_multiplier(const Field& f, const std::vector<double>& multiplier);

}  // namespace varbesov::fft
