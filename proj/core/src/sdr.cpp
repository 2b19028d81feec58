#include "rmcoset/sdr.hpp"

namespace rmcoset {

long long Sdr::value() const noexcept {
  long long v = 0;
  long long place = 1;
  for (int8_t d : digits) {
    v += d * place;
    place <<= 1;
  }
  return v;
}

bool Sdr::sparse() const noexcept {
  for (std::size_t a = 1; a < digits.size(); ++a) {
    if (digits[a] != 0 && digits[a - 1] != 0) return false;
  }
  return true;
}

bool Sdr::canonical() const noexcept {
  if (digits.empty()) return true;
  return sparse() && digits.back() != 0;
}

Sdr sparse_sdr(long long i) {
  Sdr out;
  while (i != 0) {
    const int r = static_cast<int>(((i % 4) + 4) % 4);
    if (r % 2 == 0) {
      out.digits.push_back(0);
      i /= 2;
    } else if (r == 1) {
      out.digits.push_back(1);
      out.digits.push_back(0);
      i = (i - 1) / 4;
    } else {  // i = -1 (mod 4)
      out.digits.push_back(-1);
      out.digits.push_back(0);
      i = (i + 1) / 4;
    }
  }
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  return out;
}

}  // namespace rmcoset
