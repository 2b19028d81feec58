#pragma once

#include <cstdint>
#include <vector>

namespace rmcoset {

// Signed-digit representation: value = sum_a digits[a] * 2^a with digits in
// {-1, 0, +1}.  Sparse means no two adjacent nonzero digits; canonical means
// sparse with a nonzero last digit (the empty representation encodes 0).
struct Sdr {
  std::vector<int8_t> digits;

  long long value() const noexcept;
  bool sparse() const noexcept;
  bool canonical() const noexcept;
};

// The unique sparse canonical SDR of i (any sign).  Follows the three-case
// construction: even -> prepend 0; i = 1 (mod 4) -> prepend 1,0;
// i = -1 (mod 4) -> prepend -1,0.
Sdr sparse_sdr(long long i);

}  // namespace rmcoset
