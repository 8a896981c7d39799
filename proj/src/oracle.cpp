#include "richsub/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace richsub {
namespace {

struct Search {
  const std::vector<RatVec>& vecs;
  const RatVec& target;
  const std::vector<RatVec>& suffix;  // suffix[i] = sum of vectors i..N-1
  std::size_t dim;
  std::size_t n;
  IndexSet chosen;
  RatVec sum;
  unsigned long long explored = 0;

  bool reachable(std::size_t start) const {
    for (std::size_t j = 0; j < dim; ++j)
      if (sum[j] + suffix[start][j] < target[j])
        return false;
    return true;
  }

  bool run(std::size_t start, std::size_t slots) {
    if (slots == 0) {
      ++explored;
      return vec_geq(sum, target);
    }
    if (!reachable(start))
      return false;
    for (std::size_t i = start; i + slots <= n; ++i) {
      chosen.push_back(i);
      vec_add_assign(sum, vecs[i]);
      if (run(i + 1, slots - 1))
        return true;
      for (std::size_t j = 0; j < dim; ++j)
        sum[j] -= vecs[i][j];
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

OracleResult brute_min_rich(const Instance& inst, const TargetRatio& ratio,
                            std::size_t max_n) {
  const std::size_t n = inst.size();
  if (n > max_n)
    throw std::invalid_argument("brute_min_rich: N=" + std::to_string(n) +
                                " exceeds the search limit " +
                                std::to_string(max_n));

  const std::size_t dim = inst.dim();
  const Rat a = ratio.value();
  RatVec target(dim);
  for (std::size_t j = 0; j < dim; ++j)
    target[j] = a * inst.total()[j];

  std::vector<RatVec> suffix(n + 1, RatVec(dim, Rat(0)));
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    vec_add_assign(suffix[i], inst.vector(i));
  }

  Search search{inst.vectors(), target, suffix, dim, n, {}, RatVec(dim, Rat(0))};
  for (std::size_t k = 0; k <= n; ++k) {
    if (search.run(0, k)) {
      OracleResult result;
      result.min_size = k;
      result.witness = search.chosen;
      result.explored = search.explored;
      return result;
    }
  }
  // The full set is always rich, so the loop cannot fall through.
  throw std::logic_error("brute_min_rich: no rich subset found");
}

Selection greedy_top_k(const Instance& inst, const TargetRatio& ratio) {
  if (inst.dim() != 1)
    throw std::invalid_argument("greedy_top_k: requires d = 1");
  const std::size_t n = inst.size();

  const Int k_exact =
      ceil_div(ratio.p() * static_cast<unsigned long>(n), ratio.q());
  const std::size_t k = k_exact.get_ui();  // p <= q, so k <= n

  IndexSet order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return inst.vector(lhs)[0] > inst.vector(rhs)[0];
                   });

  Selection out;
  out.indices.assign(order.begin(), order.begin() + k);
  std::sort(out.indices.begin(), out.indices.end());
  out.sum = RatVec(1, Rat(0));
  for (std::size_t i : out.indices)
    out.sum[0] += inst.vector(i)[0];
  out.bound_f = upper_bound_f(n, 1, ratio);

  if (!is_rich(inst, ratio, out.indices))
    throw std::logic_error("greedy_top_k: greedy selection is not rich");
  return out;
}

} // namespace richsub
