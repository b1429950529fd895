#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mobius::fft {

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// In-place DFT with kernel e^{-2*pi*i*jk/M}, unnormalized.
/// Size must be a power of two.
void forward(std::vector<std::complex<double>>& data);

/// In-place DFT with kernel e^{+2*pi*i*jk/M}, unnormalized.
void backward(std::vector<std::complex<double>>& data);

}  // namespace mobius::fft
