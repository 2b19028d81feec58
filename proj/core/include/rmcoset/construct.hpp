#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmcoset/gbf.hpp"
#include "rmcoset/seq.hpp"

namespace rmcoset {

struct SeqPair {
  CxSeq a, b;
};

// A kernel: two functions on the same k variables with the figures of merit
// that drive all constructions.  merit = phi_star(a, b) bounds coset PMEPR
// via merit / 2^k; star_psi = 2^{k+1} exactly when (Psi(a), Psi(b)) is a
// complementary pair.
struct KernelPair {
  Gbf a, b;
  double merit = 0.0;
  double star_psi = 0.0;

  int k() const noexcept { return a.m(); }
  int q() const noexcept { return a.q(); }
};

KernelPair make_kernel(Gbf a, Gbf b);

// (A+B, A-B); the output correlation mass is exactly twice the input's.
SeqPair rs_combine(const CxSeq& A, const CxSeq& B);

// (A|B), (A|-B): doubles length, preserves complementarity.
SeqPair golay_concatenate(const SeqPair& p);

// Alternate entries of A and B (and of A and -B): the interleaving
// counterpart of concatenation.
SeqPair golay_interleave(const SeqPair& p);

// How a k-variable kernel is stretched to m variables along a path: the
// kernel occupies the s..s+k-1 block, the remaining indices
// J = {0..s-1} u {m-t..m-1} carry the quadratic chain in the order given
// by perm, plus per-variable weights and a constant.
struct PathSpec {
  int m = 0;
  int s = 0, t = 0;          // m - k = s + t
  std::vector<int> perm;     // permutation of {0..m-k-1}
  std::vector<int> weights;  // w_0..w_{m-k-1}
  int constant = 0;
};

// The near-complementary pair (f, f + (q/2) x_{j_{perm(m-k-1)}}):
// star(Psi pair) = 2^{m-k} * star_psi(kernel), exactly.
std::pair<Gbf, Gbf> construct_path(const KernelPair& kernel,
                                   const PathSpec& spec);

enum class Family : uint8_t { golay, alpha_beta, cubic, custom };

std::string family_name(Family f);

// A constructed coset representative of RM_q(1,m): every polyphase word of
// psi(gbf) + RM_q(1,m) has PMEPR at most upper_bound.
struct CosetRep {
  KernelPair kernel;
  int m = 0;
  std::vector<int> perm;  // permutation of {0..m-1}
  Gbf gbf;
  double upper_bound = 0.0;  // merit / 2^k
  int degree = 0;            // r with the coset inside RM_q(r, m)
  bool zrm = false;          // inside ZRM_q(r, m)
  Family family = Family::custom;
};

CosetRep construct_coset_rep(const KernelPair& kernel, int m,
                             std::vector<int> perm,
                             Family family = Family::custom);

// The companion function f + (q/2) x_{perm(m-1)} paired with f by the
// construction.
Gbf coset_companion(const CosetRep& rep);

// Index space of the coset words Psi(f + w.x + w0) over (w, w0) in
// Z_q^{m+1}; word index sum_a w_a q^a + w0 q^m.  Deterministic random
// access makes sweeps partitionable.
class CosetSweep {
 public:
  static constexpr std::size_t kExhaustiveCap = std::size_t(1) << 22;

  explicit CosetSweep(Gbf f);

  std::size_t size() const noexcept { return size_; }
  Gbf word_function(std::size_t index) const;
  CxSeq word(std::size_t index) const;

  // All indices (throws above kExhaustiveCap).
  std::vector<std::size_t> exhaustive() const;
  // n distinct indices by seeded stratified sampling.
  std::vector<std::size_t> sample(std::size_t n, uint64_t seed) const;

 private:
  Gbf f_;
  std::size_t size_;
};

// The m!/2 Golay coset representatives (q/2) sum x_{pi(i)} x_{pi(i+1)},
// one permutation per reversal class.
std::vector<CosetRep> davis_jedwab_family(const Modulus& mod, int m);

// The (p^2-1) m!/2 representatives built from the length-4 kernels
// a = (q/2) x0 x1, b = a + (alpha + q/2) x0 + beta x1 with alpha, beta in
// (q/p) Z_p; the alpha = beta = q/2 grid point duplicates alpha = beta = 0
// and is skipped.
std::vector<CosetRep> alpha_beta_family(const Modulus& mod, int p, int m);

KernelPair trivial_kernel(const Modulus& mod);
KernelPair alpha_beta_kernel(const Modulus& mod, int alpha, int beta);
// a = gamma x0 x1, b = delta x0 x1 + (alpha + q/2) x0 + beta x1.
KernelPair cubic_kernel(const Modulus& mod, int gamma, int delta, int alpha,
                        int beta);
// The quaternary length-8 complementary kernel
// (2 x0 x1 + 2 x1 x2,  2 x0 x2 + 2 x1 x2 + x0 + x1).
KernelPair holzmann_kernel();

struct NamedKernel {
  std::string name;
  KernelPair pair;
};

// Named kernels for a modulus: the trivial kernel, the alpha/beta
// generators on the finest admissible grid, the Holzmann-Kharaghani kernel
// at q = 4, and (for q <= 8) the cubic length-4 kernels whose merit passes
// the <= 16 filter.
std::vector<NamedKernel> kernel_catalog(const Modulus& mod);

}  // namespace rmcoset
