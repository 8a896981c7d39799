#pragma once

#include "richsub/instance.hpp"

#include <cstdint>

namespace richsub {

// Deterministic pseudo-random instance: each coordinate is 0 with probability
// zero_density, otherwise num/den with num, den drawn uniformly from
// [1, max_denominator]. The generator is pinned (mt19937_64 with a fixed
// draw order and fixed integer mapping), so equal seeds give byte-identical
// instances on every platform.
Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t dim,
                         std::uint32_t max_denominator,
                         const Rat& zero_density);

} // namespace richsub
