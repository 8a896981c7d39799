#include "richsub/instance.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace richsub {

TargetRatio::TargetRatio(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (sgn(q_) == 0)
    throw std::invalid_argument("TargetRatio: zero denominator");
  if (sgn(q_) < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (sgn(p_) < 0)
    throw std::invalid_argument("TargetRatio: ratio below 0");
  if (p_ > q_)
    throw std::invalid_argument("TargetRatio: ratio above 1");
  const Int g = gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

TargetRatio::TargetRatio(const Rat& value)
    : TargetRatio(value.get_num(), value.get_den()) {}

Instance::Instance(std::size_t dim, std::vector<RatVec> vectors)
    : dim_(dim), vectors_(std::move(vectors)), total_(dim, Rat(0)) {
  if (dim_ == 0)
    throw std::invalid_argument("Instance: dimension must be positive");
  if (vectors_.empty())
    throw std::invalid_argument("Instance: at least one vector required");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != dim_)
      throw std::invalid_argument("Instance: vector " + std::to_string(i) +
                                  " has wrong dimension");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(vectors_[i][j]) < 0)
        throw std::invalid_argument("Instance: vector " + std::to_string(i) +
                                    " coordinate " + std::to_string(j) +
                                    " is negative");
      total_[j] += vectors_[i][j];
    }
  }
}

} // namespace richsub
