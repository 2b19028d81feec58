#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmcoset/zq.hpp"

namespace rmcoset {

class TruthTable;

// Generalized Boolean function Z_2^m -> Z_q held in algebraic normal form.
// anf[i] is the coefficient of the monomial prod_j x_j^{i_j}, where
// (i_0 ... i_{m-1}) is the binary expansion i = sum_j i_j 2^j.  The same bit
// convention indexes evaluation points everywhere in this library.
class Gbf {
 public:
  Gbf(Modulus mod, int m);  // the zero function
  Gbf(Modulus mod, int m, std::vector<int> anf);

  static Gbf constant(Modulus mod, int m, long long c);
  static Gbf monomial(Modulus mod, int m, unsigned index, long long coeff);

  const Modulus& mod() const noexcept { return mod_; }
  int q() const noexcept { return mod_.q(); }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return anf_.size(); }  // 2^m

  int coeff(unsigned index) const { return anf_[index]; }
  void set_coeff(unsigned index, long long c);
  void add_coeff(unsigned index, long long c);
  const std::vector<int>& anf() const noexcept { return anf_; }

  // Highest Hamming weight among indices with a nonzero coefficient;
  // constants (including the zero function) have degree 0.
  int degree() const noexcept;

  bool is_zero() const noexcept;

  int evaluate(unsigned point) const;  // value at (i_0 ... i_{m-1}) in [0, q)

  Gbf operator+(const Gbf& o) const;
  Gbf operator-(const Gbf& o) const;
  Gbf plus_constant(long long c) const;
  // f + sum_a w[a] x_a + w0
  Gbf plus_affine(std::span<const int> w, long long w0) const;
  // f * x_var (idempotent in the Boolean variables: indices are OR-ed)
  Gbf times_var(int var) const;
  // Substitute x_a -> x_{target[a]}; target must be injective, entries < m_new.
  Gbf relabel(std::span<const int> target, int m_new) const;

  friend bool operator==(const Gbf& a, const Gbf& b) {
    return a.mod_ == b.mod_ && a.m_ == b.m_ && a.anf_ == b.anf_;
  }

 private:
  Modulus mod_;
  int m_;
  std::vector<int> anf_;
};

// Value table of a generalized Boolean function: values[i] = f(i_0,...,i_{m-1}).
class TruthTable {
 public:
  TruthTable(Modulus mod, int m, std::vector<int> values);

  const Modulus& mod() const noexcept { return mod_; }
  int q() const noexcept { return mod_.q(); }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }
  int at(std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.mod_ == b.mod_ && a.m_ == b.m_ && a.values_ == b.values_;
  }
  friend bool operator<(const TruthTable& a, const TruthTable& b) {
    return a.values_ < b.values_;
  }

 private:
  Modulus mod_;
  int m_;
  std::vector<int> values_;
};

// Subset-sum (zeta) transform: values[i] = sum_{j AND i = j} anf[j] mod q.
TruthTable anf_to_truth_table(const Gbf& f);

// Moebius inversion; the unique ANF with the given value table.
Gbf truth_table_to_anf(const TruthTable& t);

int degree(const Gbf& f);

// Membership in RM_q(r, m): every monomial of the ANF has order <= r.
bool rm_membership(const TruthTable& t, int r);

// Membership in ZRM_q(r, m) (q >= 4, 1 < r <= m): orders <= r and every
// order-r coefficient even.
bool zrm_membership(const TruthTable& t, int r);

// Minimum Lee distance over all distinct pairs of a small code.  Refuses
// inputs above 2^20 pairwise comparisons; this is a desk-scale oracle.
long min_lee_distance(const std::vector<TruthTable>& code);

// Exhaustive codeword lists, for desk-scale checks only.
std::vector<TruthTable> enumerate_rm(const Modulus& mod, int r, int m,
                                     std::size_t cap = std::size_t(1) << 22);
std::vector<TruthTable> enumerate_zrm(const Modulus& mod, int r, int m,
                                      std::size_t cap = std::size_t(1) << 22);

}  // namespace rmcoset
