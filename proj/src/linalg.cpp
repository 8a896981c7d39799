#include "richsub/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace richsub {

bool vec_geq(const RatVec& lhs, const RatVec& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("vec_geq: dimension mismatch");
  for (std::size_t j = 0; j < lhs.size(); ++j)
    if (lhs[j] < rhs[j])
      return false;
  return true;
}

bool vec_is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

void vec_add_assign(RatVec& acc, const RatVec& v) {
  if (acc.size() != v.size())
    throw std::invalid_argument("vec_add_assign: dimension mismatch");
  for (std::size_t j = 0; j < v.size(); ++j)
    acc[j] += v[j];
}

namespace {

// A reduced pivot column: unit entry at `row`, zero entries at the pivot
// rows of every earlier pivot, plus its expression in the original columns.
struct Pivot {
  std::size_t row;
  RatVec col;    // reduced column, length = dimension
  RatVec combo;  // combination of original columns producing `col`
};

} // namespace

std::optional<RatVec> kernel_vector(const std::vector<RatVec>& columns) {
  const std::size_t k = columns.size();
  if (k == 0)
    return std::nullopt;
  const std::size_t dim = columns[0].size();
  for (const RatVec& c : columns)
    if (c.size() != dim)
      throw std::invalid_argument("kernel_vector: dimension mismatch");

  std::vector<Pivot> pivots;
  for (std::size_t j = 0; j < k; ++j) {
    RatVec col = columns[j];
    std::vector<Rat> coeff(pivots.size());
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      coeff[t] = col[pivots[t].row];
      if (sgn(coeff[t]) == 0)
        continue;
      for (std::size_t r = 0; r < dim; ++r)
        col[r] -= coeff[t] * pivots[t].col[r];
    }

    std::size_t row = dim;
    for (std::size_t r = 0; r < dim; ++r) {
      if (sgn(col[r]) != 0) {
        row = r;
        break;
      }
    }

    if (row == dim) {
      // columns[j] == sum_t coeff[t] * pivot_t, a dependence on earlier columns
      RatVec v(k, Rat(0));
      for (std::size_t t = 0; t < pivots.size(); ++t) {
        if (sgn(coeff[t]) == 0)
          continue;
        for (std::size_t i = 0; i < j; ++i)
          v[i] += coeff[t] * pivots[t].combo[i];
      }
      v[j] -= 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(v[i]) != 0) {
          const Rat lead = v[i];
          for (std::size_t m = i; m < k; ++m)
            v[m] /= lead;
          break;
        }
      }
      return v;
    }

    RatVec combo(k, Rat(0));
    combo[j] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      if (sgn(coeff[t]) == 0)
        continue;
      for (std::size_t i = 0; i < j; ++i)
        combo[i] -= coeff[t] * pivots[t].combo[i];
    }
    const Rat lead = col[row];
    for (std::size_t r = 0; r < dim; ++r)
      col[r] /= lead;
    for (std::size_t i = 0; i <= j; ++i)
      combo[i] /= lead;
    pivots.push_back(Pivot{row, std::move(col), std::move(combo)});
  }
  return std::nullopt;
}

} // namespace richsub
