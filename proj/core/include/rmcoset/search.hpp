#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rmcoset/construct.hpp"

namespace rmcoset {

// Exhaustive kernel search over pairs (a, b) of functions on k variables.
// Pruning uses only the merit-preserving orbit
//   (a, b) -> (a o sigma + L + c, b o sigma + L + c)
// of simultaneous variable permutations and shared affine offsets.
struct SearchConfig {
  int q = 2;
  int k = 2;
  std::optional<int> degree_cap;  // restrict a and b to this ANF degree
  double merit_threshold = 4.0;   // keep pairs with merit / 2^k < threshold
  int workers = 1;
  bool canonical_pruning = true;
  std::size_t work_cap = std::size_t(1) << 28;  // raw pairs (pruning off) or
                                                // candidate scans (on)
  std::size_t block_size = 64;  // a-candidates per checkpoint block
};

struct FoundKernel {
  KernelPair pair;
  std::size_t orbit_size = 1;
  uint64_t a_index = 0;  // base-q encodings of the ANFs, for stable ordering
  uint64_t b_index = 0;
};

// Progress that survives a checkpoint: everything except wall time.
struct SearchState {
  std::size_t next_block = 0;
  std::size_t explored = 0;
  std::size_t pruned = 0;
  std::vector<FoundKernel> found;
};

struct SearchResult {
  std::vector<FoundKernel> found;  // sorted by (a_index, b_index)
  std::size_t explored = 0;        // pairs whose merit was computed
  std::size_t pruned = 0;          // raw pairs skipped as orbit duplicates
  std::size_t blocks = 0;
  bool partial = false;  // work cap hit before the space was covered
  double wall_time_ms = 0.0;
};

// Raw pair-space size q^(2*2^k) (before any pruning).
std::size_t raw_search_space(const SearchConfig& cfg);

// Lexicographically least ANF pair in the orbit; merit is orbit-invariant.
KernelPair canonicalize(const KernelPair& pair);

// Deterministic for any worker count: the canonical candidate space is cut
// into fixed blocks, results merge in block order.  checkpoint_cb (if set)
// observes the state after each completed block.
SearchResult run_search(const SearchConfig& cfg, SearchState resume = {},
                        const std::function<void(const SearchState&)>&
                            checkpoint_cb = {});

}  // namespace rmcoset
