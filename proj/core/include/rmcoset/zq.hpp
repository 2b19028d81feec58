#pragma once

#include <complex>
#include <vector>

namespace rmcoset {

using cxd = std::complex<double>;

// Magnitudes below this are treated as exact zeros when deriving support
// masks; all phases in this library are exact roots of unity, so anything
// smaller is rounding noise.
inline constexpr double kSupportTol = 1e-12;

// Arithmetic context for Z_q: an even modulus 2 <= q <= 64 together with the
// precomputed unit roots xi^t = exp(2*pi*i*t/q).
class Modulus {
 public:
  explicit Modulus(int q);

  int q() const noexcept { return q_; }

  // Canonical residue in [0, q).
  int reduce(long long v) const noexcept {
    int r = static_cast<int>(v % q_);
    return r < 0 ? r + q_ : r;
  }

  const cxd& phase(long long t) const noexcept { return table_[reduce(t)]; }

  const std::vector<cxd>& phase_table() const noexcept { return table_; }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Modulus& a, const Modulus& b) noexcept {
    return a.q_ != b.q_;
  }

 private:
  int q_;
  std::vector<cxd> table_;
};

}  // namespace rmcoset
