#include "richsub/random.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace richsub {

Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t dim,
                         std::uint32_t max_denominator,
                         const Rat& zero_density) {
  if (n == 0 || dim == 0)
    throw std::invalid_argument("random_instance: N and d must be positive");
  if (max_denominator == 0)
    throw std::invalid_argument(
        "random_instance: max_denominator must be positive");
  if (sgn(zero_density) < 0 || zero_density > 1)
    throw std::invalid_argument(
        "random_instance: zero_density outside [0, 1]");

  std::mt19937_64 engine(seed);
  // Plain modulo instead of uniform_int_distribution: the standard does not
  // pin the distribution algorithm, and equal seeds must reproduce exactly.
  const auto draw = [&](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(engine() % (hi - lo + 1ULL));
  };
  // u / 2^64 < zero_density, compared exactly.
  const auto draw_zero = [&]() {
    const std::uint64_t u = engine();
    const Int lhs = Int(static_cast<unsigned long>(u)) * zero_density.get_den();
    const Int rhs = zero_density.get_num() << 64;
    return lhs < rhs;
  };

  std::vector<RatVec> vectors(n, RatVec(dim, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (draw_zero())
        continue;
      const Int num(static_cast<unsigned long>(draw(1, max_denominator)));
      const Int den(static_cast<unsigned long>(draw(1, max_denominator)));
      vectors[i][j] = make_rat(num, den);
    }
  return Instance(dim, std::move(vectors));
}

} // namespace richsub
