#pragma once

#include <complex>
#include <cstddef>

namespace rmcoset::detail {

constexpr bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n);

// In-place unnormalized DFT of a power-of-two length; sign -1 is the
// forward transform, +1 the inverse (without the 1/n factor).  Backed by
// cached FFTW plans; safe to call concurrently.
void dft_pow2(std::complex<double>* data, std::size_t n, int sign);

}  // namespace rmcoset::detail
