#pragma once

#include "richsub/instance.hpp"
#include "richsub/selector.hpp"

#include <cstddef>

namespace richsub {

struct OracleResult {
  std::size_t min_size = 0;
  IndexSet witness;                  // lexicographically least at min_size
  unsigned long long explored = 0;   // subsets whose richness was evaluated
};

// Exhaustive ground truth. Enumerates subsets by size, then lexicographically
// within a size, and returns the first rich one, so min_size is exact and the
// witness is reproducible. Prunes a prefix only when even taking every
// remaining vector cannot reach the target, which never skips the designated
// first witness. Refuses instances with more than max_n vectors.
OracleResult brute_min_rich(const Instance& inst, const TargetRatio& ratio,
                            std::size_t max_n = 22);

// d = 1 sanity oracle: the ceil(p*N/q) largest scalars always form a rich
// set of exactly the guaranteed bound size.
Selection greedy_top_k(const Instance& inst, const TargetRatio& ratio);

} // namespace richsub
