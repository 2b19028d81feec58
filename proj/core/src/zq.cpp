#include "rmcoset/zq.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmcoset {

Modulus::Modulus(int q) : q_(q) {
  if (q < 2 || q > 64 || q % 2 != 0) {
    throw std::invalid_argument("Modulus: q must be even and in [2, 64], got " +
                                std::to_string(q));
  }
  table_.resize(q_);
  for (int t = 0; t < q_; ++t) {
    const double arg = 2.0 * std::numbers::pi * t / q_;
    table_[t] = {std::cos(arg), std::sin(arg)};
  }
  table_[0] = {1.0, 0.0};
  if (q_ % 2 == 0) table_[q_ / 2] = {-1.0, 0.0};
  if (q_ % 4 == 0) {
    table_[q_ / 4] = {0.0, 1.0};
    table_[3 * q_ / 4] = {0.0, -1.0};
  }
}

}  // namespace rmcoset
