#pragma once

#include "richsub/instance.hpp"
#include "richsub/rational.hpp"

#include <cstddef>

namespace richsub {

// The unique r in [1, q-1] with p*r = 1 (mod q). Requires 1 <= p < q and
// gcd(p, q) = 1; throws std::invalid_argument otherwise.
Int mod_inverse(const Int& p, const Int& q);

/*
 * Parameters of the tight family: r copies of each of e_1 .. e_{d-1}
 * followed by N - r(d-1) copies of e_d. On these instances no selection
 * smaller than the guaranteed bound is rich, which is what pins the bound as
 * exact for large N.
 */
struct ExtremalSpec {
  std::size_t dim;
  std::size_t n;
  TargetRatio ratio;  // 1 <= p < q
  Int r;              // p * r = 1 (mod q)
  Int m;              // ceil(p * r / q); q*m - p*r = q - 1 follows

  static ExtremalSpec create(std::size_t dim, std::size_t n,
                             const TargetRatio& ratio);
};

Instance extremal_instance(const ExtremalSpec& spec);

// Exact minimum size of a rich selection on extremal_instance(spec):
// (d-1)*m + ceil(p*(N - r(d-1)) / q). Equals upper_bound_f(N, d, ratio);
// the identity is asserted.
long extremal_min_size(const ExtremalSpec& spec);

} // namespace richsub
