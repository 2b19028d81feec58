#include "rmcoset/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace rmcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_permutation(const std::vector<int>& perm, int n, const char* what) {
  require(static_cast<int>(perm.size()) == n, what);
  std::vector<uint8_t> seen(n, 0);
  for (int v : perm) {
    require(v >= 0 && v < n && !seen[v], what);
    seen[v] = 1;
  }
}

}  // namespace

KernelPair make_kernel(Gbf a, Gbf b) {
  require(a.mod() == b.mod() && a.m() == b.m(),
          "make_kernel: kernel halves must share q and k");
  KernelPair kp{std::move(a), std::move(b)};
  kp.merit = phi_star(kp.a, kp.b);
  kp.star_psi = star(psi(kp.a), psi(kp.b));
  return kp;
}

SeqPair rs_combine(const CxSeq& A, const CxSeq& B) {
  require(A.size() == B.size(), "rs_combine: length mismatch");
  std::vector<cxd> c(A.size()), d(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    c[i] = A[i] + B[i];
    d[i] = A[i] - B[i];
  }
  return {CxSeq::from_values(std::move(c)), CxSeq::from_values(std::move(d))};
}

SeqPair golay_concatenate(const SeqPair& p) {
  require(p.a.size() == p.b.size(), "golay_concatenate: length mismatch");
  const std::size_t n = p.a.size();
  std::vector<cxd> c(2 * n), d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = p.a[i];
    c[n + i] = p.b[i];
    d[i] = p.a[i];
    d[n + i] = -p.b[i];
  }
  return {CxSeq::from_values(std::move(c)), CxSeq::from_values(std::move(d))};
}

SeqPair golay_interleave(const SeqPair& p) {
  require(p.a.size() == p.b.size(), "golay_interleave: length mismatch");
  const std::size_t n = p.a.size();
  std::vector<cxd> c(2 * n), d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c[2 * i] = p.a[i];
    c[2 * i + 1] = p.b[i];
    d[2 * i] = p.a[i];
    d[2 * i + 1] = -p.b[i];
  }
  return {CxSeq::from_values(std::move(c)), CxSeq::from_values(std::move(d))};
}

std::pair<Gbf, Gbf> construct_path(const KernelPair& kernel,
                                   const PathSpec& spec) {
  const int k = kernel.k();
  const int m = spec.m;
  require(m > k, "construct_path: need m > k");
  require(spec.s >= 0 && spec.t >= 0 && spec.s + spec.t == m - k,
          "construct_path: s + t must equal m - k");
  check_permutation(spec.perm, m - k, "construct_path: bad permutation");
  require(spec.weights.size() == static_cast<std::size_t>(m - k),
          "construct_path: need m - k weights");

  // J = {0..s-1} u {m-t..m-1} carries the chain; the kernel sits on the
  // middle block I = {s..s+k-1}.
  std::vector<int> j_idx;
  for (int i = 0; i < spec.s; ++i) j_idx.push_back(i);
  for (int i = m - spec.t; i < m; ++i) j_idx.push_back(i);
  std::vector<int> i_idx(k);
  std::iota(i_idx.begin(), i_idx.end(), spec.s);

  Gbf c = kernel.a.relabel(i_idx, m);
  Gbf d = kernel.b.relabel(i_idx, m);
  const int q = kernel.q();
  for (int mu = 0; mu < m - k; ++mu) {
    const int var = j_idx[spec.perm[mu]];
    // c' = c (1 - x) + (d + w) x = c + (d - c + w) x;  d' = c' + (q/2) x
    Gbf delta = (d - c).plus_constant(spec.weights[mu]);
    c = c + delta.times_var(var);
    d = c + Gbf::monomial(kernel.a.mod(), m, 1u << var, q / 2);
  }
  return {c.plus_constant(spec.constant), d.plus_constant(spec.constant)};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::golay: return "golay";
    case Family::alpha_beta: return "alpha-beta";
    case Family::cubic: return "cubic";
    case Family::custom: return "custom";
  }
  return "custom";
}

CosetRep construct_coset_rep(const KernelPair& kernel, int m,
                             std::vector<int> perm, Family family) {
  const int k = kernel.k();
  require(m > k, "construct_coset_rep: need m > k");
  check_permutation(perm, m, "construct_coset_rep: bad permutation");

  const Modulus& mod = kernel.a.mod();
  const int q = mod.q();

  std::vector<int> kernel_vars(perm.begin(), perm.begin() + k);
  Gbf a_ext = kernel.a.relabel(kernel_vars, m);
  Gbf b_ext = kernel.b.relabel(kernel_vars, m);

  // f = a(1 - x_{pi(k)}) + b x_{pi(k)} + (q/2) sum x_{pi(al)} x_{pi(al+1)}
  Gbf f = a_ext + (b_ext - a_ext).times_var(perm[k]);
  for (int al = k; al + 1 <= m - 1; ++al) {
    f.add_coeff((1u << perm[al]) | (1u << perm[al + 1]), q / 2);
  }

  CosetRep rep{kernel, m, std::move(perm), f, 0.0, 0, false, family};
  rep.upper_bound =
      kernel.merit / static_cast<double>(std::size_t(1) << k);
  const int r_kernel =
      std::max((kernel.b - kernel.a).degree() + 1, kernel.a.degree());
  rep.degree = (m == k + 1) ? r_kernel : std::max(r_kernel, 2);
  if (q >= 4) {
    rep.zrm = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int c = f.coeff(static_cast<unsigned>(i));
      if (c != 0 && std::popcount(i) == static_cast<unsigned>(rep.degree) &&
          c % 2 != 0) {
        rep.zrm = false;
        break;
      }
    }
  }
  return rep;
}

Gbf coset_companion(const CosetRep& rep) {
  return rep.gbf + Gbf::monomial(rep.gbf.mod(), rep.m,
                                 1u << rep.perm[rep.m - 1],
                                 rep.gbf.q() / 2);
}

CosetSweep::CosetSweep(Gbf f) : f_(std::move(f)), size_(1) {
  for (int a = 0; a <= f_.m(); ++a)
    size_ *= static_cast<std::size_t>(f_.q());
}

Gbf CosetSweep::word_function(std::size_t index) const {
  std::vector<int> w(f_.m());
  for (int a = 0; a < f_.m(); ++a) {
    w[a] = static_cast<int>(index % f_.q());
    index /= f_.q();
  }
  const int w0 = static_cast<int>(index % f_.q());
  return f_.plus_affine(w, w0);
}

CxSeq CosetSweep::word(std::size_t index) const {
  return psi(word_function(index));
}

std::vector<std::size_t> CosetSweep::exhaustive() const {
  if (size_ > kExhaustiveCap)
    throw std::length_error("CosetSweep: q^{m+1} above the exhaustive cap");
  std::vector<std::size_t> idx(size_);
  std::iota(idx.begin(), idx.end(), std::size_t(0));
  return idx;
}

std::vector<std::size_t> CosetSweep::sample(std::size_t n,
                                            uint64_t seed) const {
  if (n >= size_) return exhaustive();
  // one draw per stratum of the index space
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out(n);
  const double width = static_cast<double>(size_) / static_cast<double>(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto lo = static_cast<std::size_t>(s * width);
    auto hi = static_cast<std::size_t>((s + 1) * width);
    hi = std::max(hi, lo + 1);
    std::uniform_int_distribution<std::size_t> dist(lo, hi - 1);
    out[s] = dist(rng);
  }
  return out;
}

std::vector<CosetRep> davis_jedwab_family(const Modulus& mod, int m) {
  require(m >= 2, "davis_jedwab_family: need m >= 2");
  const KernelPair kernel = trivial_kernel(mod);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CosetRep> out;
  do {
    if (perm[0] > perm[m - 1]) continue;  // one order per reversal class
    out.push_back(construct_coset_rep(kernel, m, perm, Family::golay));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<CosetRep> alpha_beta_family(const Modulus& mod, int p, int m) {
  require(p == 2 || p == 4 || p == 8, "alpha_beta_family: p must be 2, 4, 8");
  require(mod.q() % p == 0, "alpha_beta_family: p must divide q");
  require(m > 2, "alpha_beta_family: need m > 2");
  const int step = mod.q() / p;
  std::vector<CosetRep> out;
  for (int ai = 0; ai < p; ++ai) {
    for (int bi = 0; bi < p; ++bi) {
      const int alpha = ai * step, beta = bi * step;
      // alpha = beta = q/2 regenerates the alpha = beta = 0 cosets
      if (alpha == mod.q() / 2 && beta == alpha) continue;
      const KernelPair kernel = alpha_beta_kernel(mod, alpha, beta);
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (perm[0] > perm[m - 1]) continue;
        out.push_back(
            construct_coset_rep(kernel, m, perm, Family::alpha_beta));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

KernelPair trivial_kernel(const Modulus& mod) {
  return make_kernel(Gbf(mod, 0), Gbf(mod, 0));
}

KernelPair alpha_beta_kernel(const Modulus& mod, int alpha, int beta) {
  const int q = mod.q();
  Gbf a = Gbf::monomial(mod, 2, 3, q / 2);
  Gbf b = a;
  b.add_coeff(1, alpha + q / 2);
  b.add_coeff(2, beta);
  return make_kernel(std::move(a), std::move(b));
}

KernelPair cubic_kernel(const Modulus& mod, int gamma, int delta, int alpha,
                        int beta) {
  const int q = mod.q();
  Gbf a = Gbf::monomial(mod, 2, 3, gamma);
  Gbf b = Gbf::monomial(mod, 2, 3, delta);
  b.add_coeff(1, alpha + q / 2);
  b.add_coeff(2, beta);
  return make_kernel(std::move(a), std::move(b));
}

KernelPair holzmann_kernel() {
  const Modulus mod(4);
  Gbf a(mod, 3);
  a.set_coeff(0b011, 2);  // 2 x0 x1
  a.set_coeff(0b110, 2);  // 2 x1 x2
  Gbf b(mod, 3);
  b.set_coeff(0b101, 2);  // 2 x0 x2
  b.set_coeff(0b110, 2);  // 2 x1 x2
  b.set_coeff(0b001, 1);  // x0
  b.set_coeff(0b010, 1);  // x1
  return make_kernel(std::move(a), std::move(b));
}

std::vector<NamedKernel> kernel_catalog(const Modulus& mod) {
  const int q = mod.q();
  std::vector<NamedKernel> out;
  out.push_back({"trivial", trivial_kernel(mod)});

  const int p = q % 8 == 0 ? 8 : (q % 4 == 0 ? 4 : 2);
  const int step = q / p;
  for (int ai = 0; ai < p; ++ai) {
    for (int bi = 0; bi < p; ++bi) {
      const int alpha = ai * step, beta = bi * step;
      out.push_back({"alpha-beta(" + std::to_string(alpha) + "," +
                         std::to_string(beta) + ")",
                     alpha_beta_kernel(mod, alpha, beta)});
    }
  }

  if (q == 4) out.push_back({"holzmann", holzmann_kernel()});

  if (q <= 8) {
    for (int g = 0; g < q; ++g) {
      for (int d = 0; d < q; ++d) {
        if (g == q / 2 && d == q / 2) continue;  // alpha/beta form
        for (int al = 0; al < q; ++al) {
          for (int be = 0; be < q; ++be) {
            KernelPair kp = cubic_kernel(mod, g, d, al, be);
            if (kp.merit <= 16.0 + 1e-9) {
              out.push_back({"cubic(" + std::to_string(g) + "," +
                                 std::to_string(d) + "," + std::to_string(al) +
                                 "," + std::to_string(be) + ")",
                             std::move(kp)});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace rmcoset
