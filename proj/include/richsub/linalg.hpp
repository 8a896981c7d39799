#pragma once

#include "richsub/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace richsub {

// Fixed-length vector of exact rationals.
using RatVec = std::vector<Rat>;

// Coordinatewise order: lhs_j >= rhs_j for every j.
// Throws std::invalid_argument on dimension mismatch.
bool vec_geq(const RatVec& lhs, const RatVec& rhs);

bool vec_is_zero(const RatVec& v);
void vec_add_assign(RatVec& acc, const RatVec& v);

/*
 * Certificate of linear dependence: nonzero coefficients v with
 * sum_i v[i] * columns[i] == 0 (exactly, every coordinate), or nullopt when
 * the columns are linearly independent.
 *
 * Deterministic by construction. Columns are scanned left to right; each is
 * eliminated against the pivots accumulated so far, the pivot row being the
 * first row with a nonzero residual entry. The first column that reduces to
 * zero yields the certificate, which is scaled so that its first nonzero
 * entry equals +1.
 */
std::optional<RatVec> kernel_vector(const std::vector<RatVec>& columns);

} // namespace richsub
