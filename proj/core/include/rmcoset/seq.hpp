#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmcoset/gbf.hpp"
#include "rmcoset/zq.hpp"

namespace rmcoset {

// A finite complex sequence with an explicit support mask.  Entries off the
// support are exact zeros.  Sequences produced by psi/extend/phi are
// unimodular on their support; general complex values (e.g. sums of two
// sequences) are permitted, and the bound theorems assume polyphase inputs.
class CxSeq {
 public:
  CxSeq(std::vector<cxd> values, std::vector<uint8_t> support);

  // Full support; throws unless every entry is unimodular within tol.
  static CxSeq polyphase(std::vector<cxd> values, double tol = 1e-9);
  // Support derived from the magnitudes (> kSupportTol).
  static CxSeq from_values(std::vector<cxd> values);

  std::size_t size() const noexcept { return values_.size(); }
  const cxd& operator[](std::size_t i) const { return values_[i]; }
  bool supported(std::size_t i) const { return support_[i] != 0; }
  const std::vector<cxd>& values() const noexcept { return values_; }
  const std::vector<uint8_t>& support() const noexcept { return support_; }

  std::size_t support_count() const noexcept;
  bool full_support() const noexcept;
  bool is_polyphase(double tol = 1e-9) const noexcept;

  friend bool operator==(const CxSeq& a, const CxSeq& b) {
    return a.values_ == b.values_ && a.support_ == b.support_;
  }

 private:
  std::vector<cxd> values_;
  std::vector<uint8_t> support_;
};

// Where an extended sequence of length 2^m keeps its 2^k source entries:
// source variable a lands on x_{embed[a]}, and the complementary variables
// are pinned to the bits of assign.
struct ExtensionSpec {
  int m = 0;
  std::vector<int> embed;       // strictly increasing, < m
  std::vector<uint8_t> assign;  // length m - embed.size(), over the complement

  std::vector<int> complement() const;
  void validate(int k) const;  // consistent with a source on k variables
};

// Polyphase sequence of f: length 2^m, entry i equal to xi^{f_i}.
CxSeq psi(const Gbf& f);

// Aperiodic cross-correlation sum_i A_{i+ell} conj(B_i); zero out of range.
cxd aperiodic_cross(const CxSeq& A, const CxSeq& B, long ell);

// A(A)(ell) for ell = 0..n-1 (negative shifts are conjugates).  Direct
// O(n^2) summation up to n = 4096, FFT-based above.
std::vector<cxd> autocorrelation(const CxSeq& A);

// The correlation mass  sum_{ell=1-n}^{n-1} |A(A)(ell) + A(B)(ell)|.
// A polyphase pair is complementary exactly when this equals 2n.
double star(const CxSeq& A, const CxSeq& B);

// Extended sequence of Definition 2 style: value F_u moves to position
// sum_a u_a 2^{embed[a]} + sum_a d_a 2^{complement[a]}.
CxSeq extend(const CxSeq& F, const ExtensionSpec& spec);

// ANF relabeling x_a -> x_{embed[a]}, viewed in m variables.
Gbf extend_gbf(const Gbf& f, std::span<const int> embed, int m);

// Radix-4 embedding of a k-variable function: length (4^k + 2)/3 with
// xi^{f(u)} at position sum_a u_a 4^a and zeros elsewhere.
CxSeq phi(const Gbf& f);

// star(phi(a), phi(b)); the coset upper-bound numerator.
double phi_star(const Gbf& a, const Gbf& b);

}  // namespace rmcoset
