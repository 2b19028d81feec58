#include "rmcoset/seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmcoset/detail/fft.hpp"

namespace rmcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Direct summation stays exact and cheap at desk scale; longer sequences go
// through zero-padded power spectra.
constexpr std::size_t kDirectAcfLimit = 4096;

}  // namespace

CxSeq::CxSeq(std::vector<cxd> values, std::vector<uint8_t> support)
    : values_(std::move(values)), support_(std::move(support)) {
  require(values_.size() == support_.size(), "CxSeq: mask length mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!support_[i]) {
      require(std::abs(values_[i]) <= kSupportTol,
              "CxSeq: nonzero value off the support");
      values_[i] = 0.0;
    }
  }
}

CxSeq CxSeq::polyphase(std::vector<cxd> values, double tol) {
  for (const auto& v : values) {
    if (std::abs(std::abs(v) - 1.0) > tol)
      throw std::invalid_argument("CxSeq::polyphase: entry not unimodular");
  }
  std::vector<uint8_t> mask(values.size(), 1);
  return CxSeq(std::move(values), std::move(mask));
}

CxSeq CxSeq::from_values(std::vector<cxd> values) {
  std::vector<uint8_t> mask(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    mask[i] = std::abs(values[i]) > kSupportTol ? 1 : 0;
  return CxSeq(std::move(values), std::move(mask));
}

std::size_t CxSeq::support_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(support_.begin(), support_.end(), uint8_t(1)));
}

bool CxSeq::full_support() const noexcept {
  return support_count() == support_.size();
}

bool CxSeq::is_polyphase(double tol) const noexcept {
  if (!full_support()) return false;
  for (const auto& v : values_) {
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  }
  return true;
}

std::vector<int> ExtensionSpec::complement() const {
  std::vector<uint8_t> used(m, 0);
  for (int i : embed) used.at(i) = 1;
  std::vector<int> out;
  for (int j = 0; j < m; ++j) {
    if (!used[j]) out.push_back(j);
  }
  return out;
}

void ExtensionSpec::validate(int k) const {
  require(static_cast<int>(embed.size()) == k, "ExtensionSpec: |embed| != k");
  require(m > k, "ExtensionSpec: need m > k");
  int prev = -1;
  for (int i : embed) {
    require(i > prev && i < m, "ExtensionSpec: embed not increasing in [0,m)");
    prev = i;
  }
  require(assign.size() == static_cast<std::size_t>(m - k),
          "ExtensionSpec: |assign| != m - k");
  for (uint8_t d : assign) require(d <= 1, "ExtensionSpec: assign not binary");
}

CxSeq psi(const Gbf& f) {
  const TruthTable t = anf_to_truth_table(f);
  std::vector<cxd> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = f.mod().phase(t.at(i));
  return CxSeq(std::move(v), std::vector<uint8_t>(t.size(), 1));
}

cxd aperiodic_cross(const CxSeq& A, const CxSeq& B, long ell) {
  require(A.size() == B.size(), "aperiodic_cross: length mismatch");
  const long n = static_cast<long>(A.size());
  if (ell >= n || ell <= -n) return 0.0;
  cxd acc = 0.0;
  if (ell >= 0) {
    for (long i = 0; i + ell < n; ++i) acc += A[i + ell] * std::conj(B[i]);
  } else {
    for (long i = 0; i - ell < n; ++i) acc += A[i] * std::conj(B[i - ell]);
  }
  return acc;
}

std::vector<cxd> autocorrelation(const CxSeq& A) {
  const std::size_t n = A.size();
  std::vector<cxd> acf(n, 0.0);
  if (n == 0) return acf;
  if (n <= kDirectAcfLimit) {
    for (std::size_t ell = 0; ell < n; ++ell) {
      cxd acc = 0.0;
      for (std::size_t i = 0; i + ell < n; ++i)
        acc += A[i + ell] * std::conj(A[i]);
      acf[ell] = acc;
    }
    return acf;
  }
  const std::size_t padded = detail::next_pow2(2 * n);
  std::vector<cxd> buf(padded, 0.0);
  std::copy(A.values().begin(), A.values().end(), buf.begin());
  detail::dft_pow2(buf.data(), padded, -1);
  for (auto& x : buf) x = cxd(std::norm(x), 0.0);
  detail::dft_pow2(buf.data(), padded, +1);
  const double scale = 1.0 / static_cast<double>(padded);
  for (std::size_t ell = 0; ell < n; ++ell) acf[ell] = buf[ell] * scale;
  return acf;
}

double star(const CxSeq& A, const CxSeq& B) {
  require(A.size() == B.size(), "star: length mismatch");
  const std::vector<cxd> a = autocorrelation(A);
  const std::vector<cxd> b = autocorrelation(B);
  // A(-ell) is the conjugate of A(ell), so each |..| appears twice.
  double total = std::abs(a[0] + b[0]);
  for (std::size_t ell = 1; ell < a.size(); ++ell)
    total += 2.0 * std::abs(a[ell] + b[ell]);
  return total;
}

CxSeq extend(const CxSeq& F, const ExtensionSpec& spec) {
  require(F.full_support(), "extend: source must be fully supported");
  int k = 0;
  while ((std::size_t(1) << k) < F.size()) ++k;
  require(F.size() == (std::size_t(1) << k), "extend: source length not 2^k");
  spec.validate(k);

  const std::vector<int> comp = spec.complement();
  std::size_t base = 0;
  for (std::size_t a = 0; a < comp.size(); ++a) {
    if (spec.assign[a]) base += std::size_t(1) << comp[a];
  }
  const std::size_t n = std::size_t(1) << spec.m;
  std::vector<cxd> values(n, 0.0);
  std::vector<uint8_t> mask(n, 0);
  for (std::size_t u = 0; u < F.size(); ++u) {
    std::size_t pos = base;
    for (int a = 0; a < k; ++a) {
      if (u & (std::size_t(1) << a)) pos += std::size_t(1) << spec.embed[a];
    }
    values[pos] = F[u];
    mask[pos] = 1;
  }
  return CxSeq(std::move(values), std::move(mask));
}

Gbf extend_gbf(const Gbf& f, std::span<const int> embed, int m) {
  require(static_cast<int>(embed.size()) == f.m(),
          "extend_gbf: |embed| != source variables");
  int prev = -1;
  for (int i : embed) {
    require(i > prev && i < m, "extend_gbf: embed not increasing in [0,m)");
    prev = i;
  }
  return f.relabel(embed, m);
}

CxSeq phi(const Gbf& f) {
  const int k = f.m();
  const TruthTable t = anf_to_truth_table(f);
  const std::size_t n = ((std::size_t(1) << (2 * k)) + 2) / 3;
  std::vector<cxd> values(n, 0.0);
  std::vector<uint8_t> mask(n, 0);
  for (std::size_t u = 0; u < t.size(); ++u) {
    std::size_t pos = 0;
    for (int a = 0; a < k; ++a) {
      if (u & (std::size_t(1) << a)) pos += std::size_t(1) << (2 * a);
    }
    values[pos] = f.mod().phase(t.at(u));
    mask[pos] = 1;
  }
  return CxSeq(std::move(values), std::move(mask));
}

double phi_star(const Gbf& a, const Gbf& b) {
  require(a.mod() == b.mod() && a.m() == b.m(), "phi_star: shape mismatch");
  return star(phi(a), phi(b));
}

}  // namespace rmcoset
