#include "rmcoset/gbf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rmcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int popcount(unsigned v) { return std::popcount(v); }

}  // namespace

Gbf::Gbf(Modulus mod, int m) : mod_(std::move(mod)), m_(m) {
  require(m >= 0 && m <= 24, "Gbf: variable count out of range");
  anf_.assign(std::size_t(1) << m_, 0);
}

Gbf::Gbf(Modulus mod, int m, std::vector<int> anf)
    : mod_(std::move(mod)), m_(m), anf_(std::move(anf)) {
  require(m >= 0 && m <= 24, "Gbf: variable count out of range");
  require(anf_.size() == (std::size_t(1) << m_), "Gbf: ANF length != 2^m");
  for (auto& c : anf_) c = mod_.reduce(c);
}

Gbf Gbf::constant(Modulus mod, int m, long long c) {
  Gbf f(std::move(mod), m);
  f.anf_[0] = f.mod_.reduce(c);
  return f;
}

Gbf Gbf::monomial(Modulus mod, int m, unsigned index, long long coeff) {
  Gbf f(std::move(mod), m);
  require(index < f.anf_.size(), "Gbf::monomial: index out of range");
  f.anf_[index] = f.mod_.reduce(coeff);
  return f;
}

void Gbf::set_coeff(unsigned index, long long c) {
  anf_.at(index) = mod_.reduce(c);
}

void Gbf::add_coeff(unsigned index, long long c) {
  anf_.at(index) = mod_.reduce(anf_.at(index) + c);
}

int Gbf::degree() const noexcept {
  int deg = 0;
  for (std::size_t i = 1; i < anf_.size(); ++i) {
    if (anf_[i] != 0) deg = std::max(deg, popcount(static_cast<unsigned>(i)));
  }
  return deg;
}

bool Gbf::is_zero() const noexcept {
  return std::all_of(anf_.begin(), anf_.end(), [](int c) { return c == 0; });
}

int Gbf::evaluate(unsigned point) const {
  long long acc = 0;
  for (std::size_t j = 0; j < anf_.size(); ++j) {
    if (anf_[j] != 0 && (j & point) == j) acc += anf_[j];
  }
  return mod_.reduce(acc);
}

Gbf Gbf::operator+(const Gbf& o) const {
  require(mod_ == o.mod_ && m_ == o.m_, "Gbf: shape mismatch in +");
  Gbf out(mod_, m_);
  for (std::size_t i = 0; i < anf_.size(); ++i)
    out.anf_[i] = mod_.reduce(anf_[i] + o.anf_[i]);
  return out;
}

Gbf Gbf::operator-(const Gbf& o) const {
  require(mod_ == o.mod_ && m_ == o.m_, "Gbf: shape mismatch in -");
  Gbf out(mod_, m_);
  for (std::size_t i = 0; i < anf_.size(); ++i)
    out.anf_[i] = mod_.reduce(anf_[i] - o.anf_[i]);
  return out;
}

Gbf Gbf::plus_constant(long long c) const {
  Gbf out = *this;
  out.anf_[0] = mod_.reduce(out.anf_[0] + c);
  return out;
}

Gbf Gbf::plus_affine(std::span<const int> w, long long w0) const {
  require(static_cast<int>(w.size()) == m_, "Gbf: affine weight count != m");
  Gbf out = *this;
  for (int a = 0; a < m_; ++a)
    out.anf_[std::size_t(1) << a] =
        mod_.reduce(out.anf_[std::size_t(1) << a] + w[a]);
  out.anf_[0] = mod_.reduce(out.anf_[0] + w0);
  return out;
}

Gbf Gbf::times_var(int var) const {
  require(var >= 0 && var < m_, "Gbf: variable index out of range");
  Gbf out(mod_, m_);
  const std::size_t bit = std::size_t(1) << var;
  for (std::size_t i = 0; i < anf_.size(); ++i) {
    if (anf_[i] != 0) out.add_coeff(static_cast<unsigned>(i | bit), anf_[i]);
  }
  return out;
}

Gbf Gbf::relabel(std::span<const int> target, int m_new) const {
  require(static_cast<int>(target.size()) == m_, "Gbf: relabel arity mismatch");
  unsigned used = 0;
  for (int t : target) {
    require(t >= 0 && t < m_new, "Gbf: relabel target out of range");
    require(!(used & (1u << t)), "Gbf: relabel target not injective");
    used |= 1u << t;
  }
  Gbf out(mod_, m_new);
  for (std::size_t i = 0; i < anf_.size(); ++i) {
    if (anf_[i] == 0) continue;
    unsigned j = 0;
    for (int a = 0; a < m_; ++a) {
      if (i & (std::size_t(1) << a)) j |= 1u << target[a];
    }
    out.add_coeff(j, anf_[i]);
  }
  return out;
}

TruthTable::TruthTable(Modulus mod, int m, std::vector<int> values)
    : mod_(std::move(mod)), m_(m), values_(std::move(values)) {
  require(m >= 0 && m <= 24, "TruthTable: variable count out of range");
  require(values_.size() == (std::size_t(1) << m_),
          "TruthTable: length != 2^m");
  for (auto& v : values_) v = mod_.reduce(v);
}

TruthTable anf_to_truth_table(const Gbf& f) {
  std::vector<int> v = f.anf();
  const Modulus& mod = f.mod();
  // subset-sum transform, one dimension at a time
  for (int b = 0; b < f.m(); ++b) {
    const std::size_t bit = std::size_t(1) << b;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i & bit) v[i] = mod.reduce(v[i] + v[i ^ bit]);
    }
  }
  return TruthTable(mod, f.m(), std::move(v));
}

Gbf truth_table_to_anf(const TruthTable& t) {
  std::vector<int> v = t.values();
  const Modulus& mod = t.mod();
  for (int b = 0; b < t.m(); ++b) {
    const std::size_t bit = std::size_t(1) << b;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i & bit) v[i] = mod.reduce(v[i] - v[i ^ bit]);
    }
  }
  return Gbf(mod, t.m(), std::move(v));
}

int degree(const Gbf& f) { return f.degree(); }

bool rm_membership(const TruthTable& t, int r) {
  require(r >= 0 && r <= t.m(), "rm_membership: need 0 <= r <= m");
  return truth_table_to_anf(t).degree() <= r;
}

bool zrm_membership(const TruthTable& t, int r) {
  require(t.q() >= 4, "zrm_membership: q >= 4 required");
  require(r > 1 && r <= t.m(), "zrm_membership: need 1 < r <= m");
  const Gbf f = truth_table_to_anf(t);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.coeff(static_cast<unsigned>(i)) == 0) continue;
    const int w = popcount(static_cast<unsigned>(i));
    if (w > r) return false;
    if (w == r && f.coeff(static_cast<unsigned>(i)) % 2 != 0) return false;
  }
  return true;
}

long min_lee_distance(const std::vector<TruthTable>& code) {
  require(!code.empty(), "min_lee_distance: empty code");
  const std::size_t n = code.front().size();
  const int q = code.front().q();
  for (const auto& w : code) {
    require(w.size() == n && w.q() == q,
            "min_lee_distance: mixed lengths or moduli");
  }
  const std::size_t pairs = code.size() * (code.size() - 1) / 2;
  require(pairs <= (std::size_t(1) << 20),
          "min_lee_distance: too many pairwise comparisons");
  long best = -1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      long d = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const int diff = std::abs(code[i].at(t) - code[j].at(t));
        d += std::min(diff, q - diff);
      }
      if (d > 0 && (best < 0 || d < best)) best = d;
    }
  }
  require(best >= 0, "min_lee_distance: all words identical");
  return best;
}

namespace {

// Words psi(f) with f ranging over all admissible ANFs: monomial orders
// <= r, and for the ZRM variant even coefficients at order exactly r.
std::vector<TruthTable> enumerate_code(const Modulus& mod, int r, int m,
                                       bool zrm, std::size_t cap) {
  require(r >= 0 && r <= m, "enumerate: need 0 <= r <= m");
  if (zrm) require(mod.q() >= 4 && r > 1, "enumerate: ZRM needs q >= 4, r > 1");
  std::vector<unsigned> idx;        // monomials that may be nonzero
  std::vector<int> choices;         // values per monomial
  for (unsigned i = 0; i < (1u << m); ++i) {
    const int w = popcount(i);
    if (w > r) continue;
    idx.push_back(i);
    choices.push_back(zrm && w == r ? mod.q() / 2 : mod.q());
  }
  double total = 1;
  for (int c : choices) {
    total *= c;
    require(total <= double(cap), "enumerate: code too large");
  }
  std::vector<TruthTable> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> digit(idx.size(), 0);
  Gbf f(mod, m);
  for (;;) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const bool even_only = choices[a] != mod.q();
      f.set_coeff(idx[a], even_only ? 2 * digit[a] : digit[a]);
    }
    out.push_back(anf_to_truth_table(f));
    std::size_t a = 0;
    while (a < digit.size() && ++digit[a] == choices[a]) digit[a++] = 0;
    if (a == digit.size()) break;
  }
  return out;
}

}  // namespace

std::vector<TruthTable> enumerate_rm(const Modulus& mod, int r, int m,
                                     std::size_t cap) {
  return enumerate_code(mod, r, m, false, cap);
}

std::vector<TruthTable> enumerate_zrm(const Modulus& mod, int r, int m,
                                      std::size_t cap) {
  return enumerate_code(mod, r, m, true, cap);
}

}  // namespace rmcoset
