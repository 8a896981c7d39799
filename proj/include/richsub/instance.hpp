#pragma once

#include "richsub/linalg.hpp"
#include "richsub/rational.hpp"

#include <cstddef>
#include <vector>

namespace richsub {

// Ratio p/q in lowest terms with 0 <= p <= q and q > 0. Construction
// normalizes (reduces by the gcd, fixes signs) and rejects values outside
// [0, 1] with std::invalid_argument.
class TargetRatio {
 public:
  TargetRatio(Int p, Int q);
  explicit TargetRatio(const Rat& value);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  Rat value() const { return make_rat(p_, q_); }

  bool operator==(const TargetRatio& other) const {
    return p_ == other.p_ && q_ == other.q_;
  }

 private:
  Int p_;
  Int q_;
};

// N nonnegative d-dimensional rational vectors together with their cached
// coordinatewise sum. Immutable once built; construction validates N >= 1,
// d >= 1, per-vector dimensions, and nonnegativity of every coordinate.
class Instance {
 public:
  Instance(std::size_t dim, std::vector<RatVec> vectors);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<RatVec>& vectors() const { return vectors_; }
  const RatVec& vector(std::size_t i) const { return vectors_[i]; }
  const RatVec& total() const { return total_; }

 private:
  std::size_t dim_;
  std::vector<RatVec> vectors_;
  RatVec total_;
};

} // namespace richsub
