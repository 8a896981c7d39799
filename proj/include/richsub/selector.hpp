#pragma once

#include "richsub/instance.hpp"
#include "richsub/linalg.hpp"
#include "richsub/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace richsub {

// Index sets are 0-based, validated against the instance size; duplicates
// are rejected. Selections come back sorted ascending.
using IndexSet = std::vector<std::size_t>;

// Guaranteed sufficient selection size: (d - 1) + ceil((p*N - d + 1) / q).
// May exceed N; select_rich_subset takes the whole index set in that case.
long upper_bound_f(std::size_t n, std::size_t dim, const TargetRatio& ratio);

// Comparison bounds from interval-partition arguments, for reference output.
// sw_bound = a*N + 2d, alon_bound = (p/q)*N + (p(q-p)/q)*d.
Rat sw_bound(std::size_t n, std::size_t dim, const TargetRatio& ratio);
Rat alon_bound(std::size_t n, std::size_t dim, const TargetRatio& ratio);

// True iff sum_{i in indices} u_i >= (p/q) * total, coordinatewise and exact.
bool is_rich(const Instance& inst, const TargetRatio& ratio,
             const IndexSet& indices);

// Feasible point of { x in [0,1]^N : sum_i x_i u_i = (p/q) * total } with at
// least N - d integer coordinates; the columns indexed by fractional_set are
// linearly independent.
struct PurifiedPoint {
  std::vector<Rat> coords;
  IndexSet zero_set;
  IndexSet one_set;
  IndexSet fractional_set;
  std::size_t pivot_steps = 0;
};

// Pivots the uniform point (p/q, ..., p/q) along kernel directions of the
// currently fractional columns until those columns become independent. Each
// move holds the weighted sum fixed and lands at least one coordinate on 0
// or 1, so at most N pivots run.
PurifiedPoint purify(const Instance& inst, const TargetRatio& ratio);

enum class CaseTag {
  BaseZero,         // a = 0, empty selection
  BaseOne,          // a = 1, full selection
  ShortcutAll,      // f >= N, full selection
  CaseI,            // enough zeros: keep the positive support
  CaseIiPrime,      // recurse on {x_i < 1} with ratio p / (q - p)
  CaseIiDoublePrime // keep {x_i = 1}, recurse on the rest with (2p - q) / p
};

std::string case_tag_name(CaseTag tag);

struct TraceStep {
  CaseTag tag;
  std::size_t n = 0;                 // instance size when the step ran
  std::optional<Int> sub_p;          // ratio handed to the recursive call
  std::optional<Int> sub_q;
  std::optional<std::size_t> sub_n;  // size of the recursive subproblem
  std::optional<std::size_t> j_size; // |J| where J = {i : x_i < 1}
};

struct Selection {
  IndexSet indices;  // sorted ascending, no duplicates
  RatVec sum;        // exact sum over indices
  long bound_f = 0;  // upper_bound_f for the original instance
  std::vector<TraceStep> trace;
};

// Returns a set I with sum_{i in I} u_i >= (p/q) * total and
// |I| <= upper_bound_f(N, d, ratio). Deterministic. Case order: the two base
// ratios, then the f >= N shortcut, then the purified point decides between
// keeping the positive support (preferred) and recursing on a reduced ratio.
Selection select_rich_subset(const Instance& inst, const TargetRatio& ratio);

} // namespace richsub
