#pragma once

#include <gmpxx.h>

#include <string>

namespace richsub {

// Exact scalars. GMP keeps rationals canonical (gcd(|num|, den) = 1,
// den > 0) as long as values are produced by its arithmetic operators or by
// make_rat below. Nothing in the solver touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

// Smallest integer >= num/den. Throws std::invalid_argument when den <= 0.
Int ceil_div(const Int& num, const Int& den);

// "7" when den == 1, otherwise "num/den".
std::string rat_to_string(const Rat& value);

} // namespace richsub
