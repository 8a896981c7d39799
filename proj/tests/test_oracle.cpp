#include "richsub/oracle.hpp"

#include "corpus.hpp"
#include "richsub/extremal.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace richsub;

namespace {

TargetRatio ratio(unsigned long p, unsigned long q) {
  return TargetRatio(Int(p), Int(q));
}

} // namespace

TEST_CASE("brute_min_rich hand cases") {
  SUBCASE("four unit scalars") {
    const Instance inst(1, {{Rat(1)}, {Rat(1)}, {Rat(1)}, {Rat(1)}});
    const OracleResult result = brute_min_rich(inst, ratio(1, 2));
    CHECK(result.min_size == 2);
    CHECK(result.witness == IndexSet{0, 1});
  }
  SUBCASE("tight instance d=2 a=2/3") {
    const auto spec = ExtremalSpec::create(2, 5, ratio(2, 3));
    const OracleResult result =
        brute_min_rich(extremal_instance(spec), spec.ratio);
    CHECK(result.min_size == 4);
  }
  SUBCASE("zero ratio") {
    const Instance inst(2, {{Rat(3), Rat(1)}});
    const OracleResult result = brute_min_rich(inst, ratio(0, 1));
    CHECK(result.min_size == 0);
    CHECK(result.witness.empty());
  }
  SUBCASE("size limit") {
    const Instance inst(1, std::vector<RatVec>(8, {Rat(1)}));
    CHECK_THROWS_AS(brute_min_rich(inst, ratio(1, 2), 7),
                    std::invalid_argument);
  }
}

TEST_CASE("oracle sandwich: truth <= selection <= bound") {
  const auto cases = corpus::random_cases(120, 12, 4, 7, 0xACE5ULL);
  for (const auto& c : cases) {
    const OracleResult truth = brute_min_rich(c.instance, c.ratio);
    const Selection sel = select_rich_subset(c.instance, c.ratio);
    CHECK(truth.min_size <= sel.indices.size());
    CHECK(static_cast<long>(sel.indices.size()) <= sel.bound_f);
    CHECK(is_rich(c.instance, c.ratio, truth.witness));
    CHECK(truth.witness.size() == truth.min_size);
  }
}

TEST_CASE("min size is invariant under permutation and rescaling") {
  std::mt19937_64 gen(59);
  const auto cases = corpus::random_cases(40, 10, 3, 5, 0xBADC0DEULL);
  for (const auto& c : cases) {
    const std::size_t base = brute_min_rich(c.instance, c.ratio).min_size;

    std::vector<std::size_t> perm(c.instance.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<RatVec> shuffled;
    for (std::size_t i : perm)
      shuffled.push_back(c.instance.vector(i));
    CHECK(brute_min_rich(Instance(c.instance.dim(), std::move(shuffled)),
                         c.ratio)
              .min_size == base);

    std::vector<RatVec> scaled = c.instance.vectors();
    for (std::size_t j = 0; j < c.instance.dim(); ++j) {
      const Rat factor = make_rat(Int(1 + gen() % 7), Int(1 + gen() % 7));
      for (RatVec& v : scaled)
        v[j] *= factor;
    }
    CHECK(brute_min_rich(Instance(c.instance.dim(), std::move(scaled)),
                         c.ratio)
              .min_size == base);
  }
}

TEST_CASE("greedy_top_k") {
  SUBCASE("heavy head") {
    const Instance inst(1, {{Rat(3)}, {Rat(1)}, {Rat(1)}, {Rat(1)}});
    const Selection sel = greedy_top_k(inst, ratio(2, 3));
    CHECK(sel.indices.size() == 3);
    CHECK(sel.sum[0] >= 4);
    CHECK(is_rich(inst, ratio(2, 3), sel.indices));
    CHECK(brute_min_rich(inst, ratio(2, 3)).min_size <= sel.indices.size());
  }
  SUBCASE("symmetric pair") {
    const Instance inst(1, {{Rat(1)}, {Rat(1)}});
    const Selection sel = greedy_top_k(inst, ratio(1, 2));
    CHECK(sel.indices.size() == 1);
    CHECK(sel.sum[0] == 1);
  }
  SUBCASE("zero ratio") {
    const Instance inst(1, {{Rat(5)}});
    CHECK(greedy_top_k(inst, ratio(0, 1)).indices.empty());
  }
  SUBCASE("requires d = 1") {
    const Instance inst(2, {{Rat(1), Rat(1)}});
    CHECK_THROWS_AS(greedy_top_k(inst, ratio(1, 2)), std::invalid_argument);
  }
}

TEST_CASE("greedy matches the d = 1 bound exactly") {
  const auto cases = corpus::random_cases(60, 14, 1, 9, 0x5EEDULL);
  for (const auto& c : cases) {
    const Selection greedy = greedy_top_k(c.instance, c.ratio);
    CHECK(static_cast<long>(greedy.indices.size()) ==
          upper_bound_f(c.instance.size(), 1, c.ratio));
    CHECK(is_rich(c.instance, c.ratio, greedy.indices));
    CHECK(brute_min_rich(c.instance, c.ratio).min_size <=
          greedy.indices.size());
  }
}
