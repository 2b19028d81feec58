#include "rmcoset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rmcoset/parallel.hpp"

namespace rmcoset {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::tight: return "tight";
    case Verdict::gap: return "gap";
    case Verdict::unverified: return "unverified";
  }
  return "unverified";
}

double lb_closed_form(const KernelPair& kernel, bool m_minus_k_even) {
  const Modulus& mod = kernel.a.mod();
  const int q = mod.q();
  const int k = kernel.k();
  const WhtSpectrum A = wht(kernel.a);
  const WhtSpectrum B = wht(kernel.b);

  double best = 0.0;
  for (std::size_t wp = 0; wp < A.size(); ++wp) {
    const cxd Aw = A.at(wp);
    const cxd Bw = B.at(wp);
    // |A| + |B| caps anything the inner phases can reach
    const double mA = std::abs(Aw), mB = std::abs(Bw);
    const double envelope =
        m_minus_k_even ? 2.0 * (mA + mB) : (mA + mB);
    if (envelope * envelope <= best) continue;
    for (int wk = 0; wk < q; ++wk) {
      const cxd Bk = Bw * mod.phase(wk);
      if (!m_minus_k_even) {
        best = std::max(best, std::norm(Aw + Bk));
      } else {
        for (int wk1 = 0; wk1 < q; ++wk1) {
          const cxd u = mod.phase(wk1);
          best = std::max(best, std::norm(Aw * (1.0 + u) + Bk * (1.0 - u)));
        }
      }
    }
  }
  const int shift = m_minus_k_even ? k + 2 : k + 1;
  return best / static_cast<double>(std::size_t(1) << shift);
}

double lb_closed_form(const KernelPair& kernel, int m) {
  require(m > kernel.k(), "lb_closed_form: need m > k");
  return lb_closed_form(kernel, (m - kernel.k()) % 2 == 0);
}

namespace {

double class_bound(const Modulus& mod, int alpha, int beta) {
  return 2.0 + (std::abs(1.0 - mod.phase(beta - alpha)) +
                std::abs(1.0 - mod.phase(beta + alpha))) /
                   2.0;
}

std::string residue_name(const Modulus& mod, int v) {
  const int q = mod.q();
  v = mod.reduce(v);
  if (v == 0) return "0";
  if (v == q / 2) return "q/2";
  if (q % 4 == 0 && v % (q / 4) == 0)
    return std::to_string(v / (q / 4)) + "q/4";
  if (q % 8 == 0 && v % (q / 8) == 0)
    return std::to_string(v / (q / 8)) + "q/8";
  return std::to_string(v);
}

// Distinct cosets contributed by the class, in units of m!: grid pairs with
// this bound, one m!/2 block each, minus the duplicated alpha=beta=q/2 point.
double class_multiplier(const Modulus& mod, int p, double bound) {
  const int step = mod.q() / p;
  int pairs = 0;
  bool holds_origin = false;
  for (int ai = 0; ai < p; ++ai) {
    for (int bi = 0; bi < p; ++bi) {
      if (std::abs(class_bound(mod, ai * step, bi * step) - bound) < 1e-9) {
        ++pairs;
        if (ai == 0 && bi == 0) holds_origin = true;
      }
    }
  }
  if (holds_origin) --pairs;  // alpha = beta = q/2 duplicates the origin
  return pairs / 2.0;
}

}  // namespace

ClassRow classify_alpha_beta(const Modulus& mod, int p, int alpha, int beta) {
  require(p >= 1 && mod.q() % p == 0, "classify_alpha_beta: p must divide q");
  const int step = mod.q() / p;
  require(mod.reduce(alpha) % step == 0 && mod.reduce(beta) % step == 0,
          "classify_alpha_beta: alpha, beta must lie in (q/p) Z_p");
  ClassRow row;
  row.p = p;
  row.bound = class_bound(mod, alpha, beta);
  row.constraint = "b+a=" + residue_name(mod, beta + alpha) +
                   ", b-a=" + residue_name(mod, beta - alpha);
  row.count_multiplier = class_multiplier(mod, p, row.bound);
  return row;
}

std::vector<ClassRow> class_tables(const Modulus& mod, int p, int m) {
  require(p == 4 || p == 8, "class_tables: p must be 4 or 8");
  require(mod.q() % p == 0, "class_tables: p must divide q");
  require(m > 2, "class_tables: need m > 2");
  const int step = mod.q() / p;
  std::map<long long, ClassRow> by_bound;  // keyed on rounded bound
  for (int ai = 0; ai < p; ++ai) {
    for (int bi = 0; bi < p; ++bi) {
      ClassRow row = classify_alpha_beta(mod, p, ai * step, bi * step);
      const auto key = static_cast<long long>(std::llround(row.bound * 1e9));
      by_bound.emplace(key, std::move(row));
    }
  }
  std::vector<ClassRow> rows;
  rows.reserve(by_bound.size());
  for (auto& [key, row] : by_bound) rows.push_back(std::move(row));
  return rows;
}

bool tightness_claimed(const CosetRep& rep) {
  const int q = rep.gbf.q();
  switch (rep.family) {
    case Family::golay:
      return (rep.m - rep.kernel.k()) % 2 == 1 || q % 4 == 0;
    case Family::alpha_beta: {
      // smallest grid containing the kernel's linear offsets
      const int alpha =
          rep.kernel.a.mod().reduce(rep.kernel.b.coeff(1) - q / 2);
      const int beta = rep.kernel.b.coeff(2);
      for (int p : {2, 4, 8}) {
        if (q % p != 0) continue;
        const int step = q / p;
        if (alpha % step == 0 && beta % step == 0) return q % (2 * p) == 0;
      }
      return false;
    }
    default:
      return false;
  }
}

BoundReport tightness_verdict(const CosetRep& rep, const SweepBudget& budget) {
  BoundReport report;
  report.upper = rep.upper_bound;
  report.parity_even = (rep.m - rep.kernel.k()) % 2 == 0;
  report.lower = lb_closed_form(rep.kernel, rep.m);
  report.tightness_claimed = tightness_claimed(rep);

  const CosetSweep sweep(rep.gbf);
  std::vector<std::size_t> indices;
  if (sweep.size() <= budget.exhaustive_cap &&
      sweep.size() <= CosetSweep::kExhaustiveCap) {
    indices = sweep.exhaustive();
    report.sampled = false;
  } else if (budget.sample_size > 0) {
    indices = sweep.sample(budget.sample_size, budget.seed);
    report.sampled = true;
  } else {
    report.verdict = Verdict::unverified;
    return report;
  }

  std::vector<double> maxima(indices.size());
  parallel_for(indices.size(), budget.workers, [&](std::size_t i) {
    maxima[i] = pmepr(sweep.word(indices[i]), budget.envelope).grid_max;
  });
  report.measured = *std::max_element(maxima.begin(), maxima.end());
  report.verdict = (*report.measured >= report.upper - 0.02) ? Verdict::tight
                                                             : Verdict::gap;
  return report;
}

}  // namespace rmcoset
