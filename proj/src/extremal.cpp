#include "richsub/extremal.hpp"

#include "richsub/selector.hpp"

#include <stdexcept>

namespace richsub {

Int mod_inverse(const Int& p, const Int& q) {
  if (q < 2)
    throw std::invalid_argument("mod_inverse: modulus must be at least 2");
  if (p < 1 || p >= q)
    throw std::invalid_argument("mod_inverse: argument outside [1, q-1]");
  Int r;
  if (mpz_invert(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: arguments are not coprime");
  return r;
}

ExtremalSpec ExtremalSpec::create(std::size_t dim, std::size_t n,
                                  const TargetRatio& ratio) {
  if (dim == 0 || n == 0)
    throw std::invalid_argument("ExtremalSpec: N and d must be positive");
  if (sgn(ratio.p()) == 0 || ratio.p() == ratio.q())
    throw std::invalid_argument("ExtremalSpec: ratio must satisfy 0 < p < q");

  const Int r = mod_inverse(ratio.p(), ratio.q());
  const Int m = ceil_div(ratio.p() * r, ratio.q());
  const Int needed = r * static_cast<unsigned long>(dim - 1);
  if (needed > static_cast<unsigned long>(n))
    throw std::invalid_argument(
        "ExtremalSpec: N too small, construction needs r*(d-1) vectors");
  return ExtremalSpec{dim, n, ratio, r, m};
}

Instance extremal_instance(const ExtremalSpec& spec) {
  const std::size_t s = spec.dim - 1;
  const std::size_t r = spec.r.get_ui();  // r*s <= n, so r fits when s > 0

  std::vector<RatVec> vectors;
  vectors.reserve(spec.n);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t copy = 0; copy < r; ++copy) {
      RatVec e(spec.dim, Rat(0));
      e[i] = 1;
      vectors.push_back(std::move(e));
    }
  while (vectors.size() < spec.n) {
    RatVec e(spec.dim, Rat(0));
    e[spec.dim - 1] = 1;
    vectors.push_back(std::move(e));
  }
  return Instance(spec.dim, std::move(vectors));
}

long extremal_min_size(const ExtremalSpec& spec) {
  const Int s(static_cast<unsigned long>(spec.dim - 1));
  const Int tail = static_cast<unsigned long>(spec.n) - spec.r * s;
  const Int min_size = s * spec.m + ceil_div(spec.ratio.p() * tail,
                                             spec.ratio.q());
  const long f = upper_bound_f(spec.n, spec.dim, spec.ratio);
  if (min_size != f)
    throw std::logic_error("extremal_min_size: bound identity broken");
  return f;
}

} // namespace richsub
