#include "richsub/rational.hpp"

#include <stdexcept>

namespace richsub {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0)
    throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int ceil_div(const Int& num, const Int& den) {
  if (sgn(den) <= 0)
    throw std::invalid_argument("ceil_div: denominator must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace richsub
