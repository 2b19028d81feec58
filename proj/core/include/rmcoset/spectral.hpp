#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmcoset/gbf.hpp"
#include "rmcoset/seq.hpp"

namespace rmcoset {

// Oversampled evaluation of the OFDM envelope.  The carrier offset only
// rotates S(theta) globally, so it is fixed to zero.
struct EnvelopeConfig {
  int oversampling = 64;  // L; grid points theta_t = t / (L n)
  bool refine = true;     // local search around the top grid peaks
};

struct PmeprEstimate {
  double grid_max = 0.0;      // max |S(theta)|^2 / n found
  double argmax_theta = 0.0;  // in [0, 1)
  int oversampling = 0;
  bool refined = false;
};

// |sum_i A_i exp(2 pi i * i * theta)|^2.
double envelope_power(const CxSeq& A, double theta);

// Grid maximum of envelope_power / n over theta_t = t/(L n), optionally
// refined by ternary search around the top three grid peaks.  Requires a
// fully supported sequence.
PmeprEstimate pmepr(const CxSeq& A, const EnvelopeConfig& cfg = {});

// star(A, B) / n: a rigorous PMEPR bound for both members of the pair.
double pmepr_upper_bound_star(const CxSeq& A, const CxSeq& B);

inline constexpr std::size_t kWhtCap = std::size_t(1) << 24;

// q-ary Walsh-Hadamard transform F(w) = sum_x xi^{f(x) + w.x}, indexed by
// the mixed-radix word widx = sum_a w_a q^a (w_0 fastest).
class WhtSpectrum {
 public:
  WhtSpectrum(Modulus mod, int m, std::vector<cxd> values);

  const Modulus& mod() const noexcept { return mod_; }
  int q() const noexcept { return mod_.q(); }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }  // q^m
  const cxd& at(std::size_t widx) const { return values_[widx]; }
  const std::vector<cxd>& values() const noexcept { return values_; }

  double max_abs2() const noexcept;
  std::size_t argmax() const noexcept;
  std::vector<int> digits(std::size_t widx) const;  // (w_0 ... w_{m-1})

 private:
  Modulus mod_;
  int m_;
  std::vector<cxd> values_;
};

// Exact spectrum by m successive radix-q folds; memory high-water is the
// final q^m layer, rejected above cap entries.
WhtSpectrum wht(const Gbf& f, std::size_t cap = kWhtCap);

// max |F(w)|^2 / 2^m over the restricted grid w in (q/p) Z_p^m; p | q.
double papr_p(const Gbf& f, int p, std::size_t cap = kWhtCap);

// max |F(w)|^2 / 2^m over the full grid: some word of psi(f) + RM_q(1,m)
// has PMEPR at least this value.
double coset_lower_bound(const Gbf& f, std::size_t cap = kWhtCap);

// q = 2 only: (min Hamming distance of psi(f) to RM_2(1,m), max_w |F(w)|),
// checking the identity max |F| = 2^m - 2 d_min along the way.
std::pair<int, double> covering_radius_check(const Gbf& f);

}  // namespace rmcoset
