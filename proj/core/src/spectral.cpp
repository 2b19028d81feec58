#include "rmcoset/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rmcoset/detail/fft.hpp"

namespace rmcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double envelope_power(const CxSeq& A, double theta) {
  cxd s = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(i) * theta;
    s += A[i] * cxd(std::cos(arg), std::sin(arg));
  }
  return std::norm(s);
}

namespace {

// |S|^2 on the grid t/(grid) for t = 0..grid-1.
std::vector<double> envelope_grid(const CxSeq& A, std::size_t grid) {
  std::vector<double> out(grid);
  if (detail::is_pow2(grid)) {
    std::vector<cxd> buf(grid, 0.0);
    std::copy(A.values().begin(), A.values().end(), buf.begin());
    detail::dft_pow2(buf.data(), grid, +1);  // e^{+2 pi i t / grid} kernel
    for (std::size_t t = 0; t < grid; ++t) out[t] = std::norm(buf[t]);
  } else {
    for (std::size_t t = 0; t < grid; ++t)
      out[t] = envelope_power(A, static_cast<double>(t) / grid);
  }
  return out;
}

// Local maximum of |S(theta)|^2 by ternary search; the envelope is smooth,
// so a bracketed peak behaves unimodally at grid resolution.
std::pair<double, double> refine_peak(const CxSeq& A, double lo, double hi) {
  constexpr double kThetaTol = 1e-10;
  while (hi - lo > kThetaTol) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (envelope_power(A, m1) < envelope_power(A, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double theta = 0.5 * (lo + hi);
  return {envelope_power(A, theta), theta};
}

}  // namespace

PmeprEstimate pmepr(const CxSeq& A, const EnvelopeConfig& cfg) {
  require(A.full_support(), "pmepr: unsupported entries present");
  require(cfg.oversampling >= 2, "pmepr: oversampling must be >= 2");
  const std::size_t n = A.size();
  const std::size_t grid = n * static_cast<std::size_t>(cfg.oversampling);
  const std::vector<double> power = envelope_grid(A, grid);

  PmeprEstimate est;
  est.oversampling = cfg.oversampling;
  std::size_t best_t = 0;
  for (std::size_t t = 1; t < grid; ++t) {
    if (power[t] > power[best_t]) best_t = t;
  }
  double best_power = power[best_t];
  double best_theta = static_cast<double>(best_t) / grid;

  if (cfg.refine) {
    est.refined = true;
    // top three local grid peaks
    std::vector<std::size_t> peaks;
    for (std::size_t t = 0; t < grid; ++t) {
      const double prev = power[(t + grid - 1) % grid];
      const double next = power[(t + 1) % grid];
      if (power[t] >= prev && power[t] >= next) peaks.push_back(t);
    }
    std::partial_sort(peaks.begin(),
                      peaks.begin() + std::min<std::size_t>(3, peaks.size()),
                      peaks.end(), [&](std::size_t x, std::size_t y) {
                        return power[x] > power[y];
                      });
    peaks.resize(std::min<std::size_t>(3, peaks.size()));
    for (std::size_t t : peaks) {
      const double lo = (static_cast<double>(t) - 1.0) / grid;
      const double hi = (static_cast<double>(t) + 1.0) / grid;
      auto [p, theta] = refine_peak(A, lo, hi);
      if (p > best_power) {
        best_power = p;
        best_theta = theta;
      }
    }
  }

  est.grid_max = best_power / static_cast<double>(n);
  est.argmax_theta = best_theta - std::floor(best_theta);
  return est;
}

double pmepr_upper_bound_star(const CxSeq& A, const CxSeq& B) {
  require(A.size() == B.size(), "pmepr_upper_bound_star: length mismatch");
  require(A.is_polyphase() && B.is_polyphase(),
          "pmepr_upper_bound_star: polyphase inputs required");
  return star(A, B) / static_cast<double>(A.size());
}

WhtSpectrum::WhtSpectrum(Modulus mod, int m, std::vector<cxd> values)
    : mod_(std::move(mod)), m_(m), values_(std::move(values)) {
  std::size_t expect = 1;
  for (int a = 0; a < m_; ++a) expect *= static_cast<std::size_t>(mod_.q());
  require(values_.size() == expect, "WhtSpectrum: length != q^m");
}

double WhtSpectrum::max_abs2() const noexcept {
  double best = 0.0;
  for (const auto& v : values_) best = std::max(best, std::norm(v));
  return best;
}

std::size_t WhtSpectrum::argmax() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (std::norm(values_[i]) > std::norm(values_[best])) best = i;
  }
  return best;
}

std::vector<int> WhtSpectrum::digits(std::size_t widx) const {
  std::vector<int> out(m_);
  for (int a = 0; a < m_; ++a) {
    out[a] = static_cast<int>(widx % mod_.q());
    widx /= mod_.q();
  }
  return out;
}

namespace {

// Fold out variables m-1 down to 0.  Each step trades one point dimension
// for one spectral digit, with the digit set {0, stride, 2*stride, ...}:
//   S'(x, w_v + D*widx) = S(x0, widx) + xi^{w_v} S(x1, widx).
// The final layout sum_a w_a D^a keeps w_0 fastest.
std::vector<cxd> fold_spectrum(const Gbf& f, int digit_count, int stride,
                               std::size_t cap) {
  const int m = f.m();
  const Modulus& mod = f.mod();
  std::size_t final_size = 1;
  for (int a = 0; a < m; ++a) {
    final_size *= static_cast<std::size_t>(digit_count);
    if (final_size > cap)
      throw std::length_error("wht: spectrum exceeds the entry cap");
  }

  const TruthTable t = anf_to_truth_table(f);
  std::vector<cxd> cur(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) cur[i] = mod.phase(t.at(i));

  const std::size_t D = static_cast<std::size_t>(digit_count);
  std::size_t points = std::size_t(1) << m;  // remaining point dimension
  std::size_t words = 1;                     // collected digit dimension
  for (int step = 0; step < m; ++step) {
    const std::size_t half = points / 2;
    std::vector<cxd> next(half * words * D);
    for (std::size_t widx = 0; widx < words; ++widx) {
      const cxd* lo = cur.data() + widx * points;
      const cxd* hi = lo + half;
      for (std::size_t dv = 0; dv < D; ++dv) {
        const cxd w = mod.phase(static_cast<long long>(dv) * stride);
        cxd* out = next.data() + (widx * D + dv) * half;
        for (std::size_t x = 0; x < half; ++x) out[x] = lo[x] + w * hi[x];
      }
    }
    cur.swap(next);
    points = half;
    words *= D;
  }
  return cur;
}

}  // namespace

WhtSpectrum wht(const Gbf& f, std::size_t cap) {
  return WhtSpectrum(f.mod(), f.m(), fold_spectrum(f, f.q(), 1, cap));
}

double papr_p(const Gbf& f, int p, std::size_t cap) {
  require(p >= 1 && f.q() % p == 0, "papr_p: p must divide q");
  const std::vector<cxd> spec = fold_spectrum(f, p, f.q() / p, cap);
  double best = 0.0;
  for (const auto& v : spec) best = std::max(best, std::norm(v));
  return best / static_cast<double>(std::size_t(1) << f.m());
}

double coset_lower_bound(const Gbf& f, std::size_t cap) {
  return papr_p(f, f.q(), cap);
}

std::pair<int, double> covering_radius_check(const Gbf& f) {
  require(f.q() == 2, "covering_radius_check: q = 2 only");
  require(f.m() <= 12, "covering_radius_check: m <= 12 only");
  const int m = f.m();
  const std::size_t n = std::size_t(1) << m;
  const TruthTable t = anf_to_truth_table(f);

  const WhtSpectrum spec = wht(f);
  const double max_abs = std::sqrt(spec.max_abs2());

  // affine words w.x + w0 over Z_2
  int best = static_cast<int>(n) + 1;
  for (std::size_t w = 0; w < 2 * n; ++w) {
    const unsigned lin = static_cast<unsigned>(w >> 1);
    const int w0 = static_cast<int>(w & 1);
    int d = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const int c = (std::popcount(static_cast<unsigned>(x) & lin) + w0) & 1;
      d += (c != t.at(x));
    }
    best = std::min(best, d);
  }

  const double expected = static_cast<double>(n) - 2.0 * best;
  if (std::abs(max_abs - expected) > 1e-6)
    throw std::logic_error(
        "covering_radius_check: max |F| != 2^m - 2 d_min");
  return {best, max_abs};
}

}  // namespace rmcoset
