#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmcoset/construct.hpp"
#include "rmcoset/spectral.hpp"

namespace rmcoset {

enum class Verdict : uint8_t { tight, gap, unverified };

std::string verdict_name(Verdict v);

// Upper and lower PMEPR bounds for one constructed coset, with an optional
// measured sweep maximum between them.
struct BoundReport {
  double upper = 0.0;
  double lower = 0.0;
  std::optional<double> measured;
  Verdict verdict = Verdict::unverified;
  bool parity_even = false;       // parity of m - k
  bool tightness_claimed = false; // the family's modulus condition holds
  bool sampled = false;           // measured by sampling, not exhaustively
};

// Closed-form coset lower bound from the kernel's WHTs: the maximum of
//   |A(w') + B(w') xi^{w_k}|^2 / 2^{k+1}                     (m - k odd)
//   |A(w')(1+xi^{w_{k+1}}) + B(w') xi^{w_k}(1-xi^{w_{k+1}})|^2 / 2^{k+2}
//                                                            (m - k even)
// scanned exhaustively over the w grid.
double lb_closed_form(const KernelPair& kernel, bool m_minus_k_even);
double lb_closed_form(const KernelPair& kernel, int m);

// One row of the length-4 kernel classification.
struct ClassRow {
  int p = 0;
  std::string constraint;        // pattern of (beta+alpha, beta-alpha)
  double bound = 0.0;            // 2 + (|1-xi^{b-a}| + |1-xi^{b+a}|)/2
  double count_multiplier = 0.0; // distinct cosets in units of m!
};

// Class of one (alpha, beta) pair from the (q/p)-grid.
ClassRow classify_alpha_beta(const Modulus& mod, int p, int alpha, int beta);

// All classes for p in {4, 8}, aggregated over the grid with the
// alpha = beta = 0 / q/2 identification, sorted by bound.
std::vector<ClassRow> class_tables(const Modulus& mod, int p, int m);

struct SweepBudget {
  std::size_t exhaustive_cap = std::size_t(1) << 18;
  std::size_t sample_size = std::size_t(1) << 16;
  uint64_t seed = 0x5EED;
  int workers = 1;
  EnvelopeConfig envelope;
};

// Measure the coset maximum (exhaustively when q^{m+1} fits the budget,
// otherwise by seeded stratified sampling) and compare against the bounds.
// tight means measured >= upper - 0.02.
BoundReport tightness_verdict(const CosetRep& rep,
                              const SweepBudget& budget = {});

// Whether the paper-backed tightness condition applies to this family at
// this modulus (Golay: m odd or q = 0 mod 4; alpha/beta grid p: q = 0 mod 2p).
bool tightness_claimed(const CosetRep& rep);

}  // namespace rmcoset
