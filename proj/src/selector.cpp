#include "richsub/selector.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace richsub {
namespace {

Int bound_f_exact(std::size_t n, std::size_t dim, const Int& p, const Int& q) {
  const Int s(static_cast<unsigned long>(dim - 1));
  return s + ceil_div(p * static_cast<unsigned long>(n) - s, q);
}

long narrow_to_long(const Int& value, const char* what) {
  if (!value.fits_slong_p())
    throw std::logic_error(std::string(what) + ": value out of range");
  return value.get_si();
}

void check_sizes(std::size_t n, std::size_t dim, const char* what) {
  if (n == 0 || dim == 0)
    throw std::invalid_argument(std::string(what) +
                                ": N and d must be positive");
}

// Sorted copy with validation; the exact-sum helpers below rely on it.
IndexSet canonical_indices(const IndexSet& indices, std::size_t n,
                           const char* what) {
  IndexSet sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t] >= n)
      throw std::invalid_argument(std::string(what) + ": index out of range");
    if (t > 0 && sorted[t] == sorted[t - 1])
      throw std::invalid_argument(std::string(what) + ": duplicate index");
  }
  return sorted;
}

RatVec sum_over(const std::vector<RatVec>& vecs, const IndexSet& indices,
                std::size_t dim) {
  RatVec sum(dim, Rat(0));
  for (std::size_t i : indices)
    vec_add_assign(sum, vecs[i]);
  return sum;
}

struct PurifyOutcome {
  std::vector<Rat> coords;  // aligned with the active index list
  std::size_t pivot_steps = 0;
};

TraceStep leaf_step(CaseTag tag, std::size_t n) {
  TraceStep step;
  step.tag = tag;
  step.n = n;
  return step;
}

TraceStep recursion_step(CaseTag tag, std::size_t n, Int sub_p, Int sub_q,
                         std::size_t sub_n, std::size_t j_size) {
  TraceStep step;
  step.tag = tag;
  step.n = n;
  step.sub_p = std::move(sub_p);
  step.sub_q = std::move(sub_q);
  step.sub_n = sub_n;
  step.j_size = j_size;
  return step;
}

// Purification over the sub-instance given by `active`. The loop invariant
// sum_i x_i u_i = (p/q) * sum_{active} u_i is re-checked exactly after every
// pivot; a violation means a bug, not bad input.
PurifyOutcome purify_active(const std::vector<RatVec>& all,
                            const std::vector<std::size_t>& active,
                            std::size_t dim, const Int& p, const Int& q) {
  const std::size_t n = active.size();
  const Rat a = make_rat(p, q);

  PurifyOutcome out;
  out.coords.assign(n, a);

  RatVec rhs(dim, Rat(0));
  for (std::size_t i : active)
    for (std::size_t j = 0; j < dim; ++j)
      rhs[j] += a * all[i][j];

  for (;;) {
    std::vector<std::size_t> frac;
    for (std::size_t t = 0; t < n; ++t)
      if (sgn(out.coords[t]) > 0 && out.coords[t] < 1)
        frac.push_back(t);
    if (frac.empty())
      break;

    std::vector<RatVec> cols;
    cols.reserve(frac.size());
    for (std::size_t t : frac)
      cols.push_back(all[active[t]]);
    const auto direction = kernel_vector(cols);
    if (!direction)
      break;
    const RatVec& v = *direction;

    // Largest step keeping every coordinate inside [0,1]; the smallest
    // blocking index wins ties, so at least one coordinate lands exactly on
    // a bound.
    Rat alpha;
    bool have_alpha = false;
    for (std::size_t t = 0; t < frac.size(); ++t) {
      const int sg = sgn(v[t]);
      if (sg == 0)
        continue;
      const Rat& x = out.coords[frac[t]];
      const Rat room = sg > 0 ? Rat((1 - x) / v[t]) : Rat(x / -v[t]);
      if (!have_alpha || room < alpha) {
        alpha = room;
        have_alpha = true;
      }
    }
    if (!have_alpha || sgn(alpha) <= 0)
      throw std::logic_error("purify: degenerate pivot direction");

    for (std::size_t t = 0; t < frac.size(); ++t)
      if (sgn(v[t]) != 0)
        out.coords[frac[t]] += alpha * v[t];

    ++out.pivot_steps;
    if (out.pivot_steps > n)
      throw std::logic_error("purify: pivot budget exceeded");

    RatVec lhs(dim, Rat(0));
    for (std::size_t t = 0; t < n; ++t) {
      if (sgn(out.coords[t]) < 0 || out.coords[t] > 1)
        throw std::logic_error("purify: coordinate left [0,1]");
      if (sgn(out.coords[t]) == 0)
        continue;
      for (std::size_t j = 0; j < dim; ++j)
        lhs[j] += out.coords[t] * all[active[t]][j];
    }
    if (lhs != rhs)
      throw std::logic_error("purify: weighted sum drifted");
  }
  return out;
}

} // namespace

long upper_bound_f(std::size_t n, std::size_t dim, const TargetRatio& ratio) {
  check_sizes(n, dim, "upper_bound_f");
  return narrow_to_long(bound_f_exact(n, dim, ratio.p(), ratio.q()),
                        "upper_bound_f");
}

Rat sw_bound(std::size_t n, std::size_t dim, const TargetRatio& ratio) {
  check_sizes(n, dim, "sw_bound");
  Rat out = ratio.value();
  out *= static_cast<unsigned long>(n);
  out += 2 * static_cast<unsigned long>(dim);
  return out;
}

Rat alon_bound(std::size_t n, std::size_t dim, const TargetRatio& ratio) {
  check_sizes(n, dim, "alon_bound");
  Rat out = ratio.value();
  out *= static_cast<unsigned long>(n);
  out += make_rat(ratio.p() * (ratio.q() - ratio.p()) *
                      static_cast<unsigned long>(dim),
                  ratio.q());
  return out;
}

bool is_rich(const Instance& inst, const TargetRatio& ratio,
             const IndexSet& indices) {
  const IndexSet sorted = canonical_indices(indices, inst.size(), "is_rich");
  const RatVec sum = sum_over(inst.vectors(), sorted, inst.dim());
  const Rat a = ratio.value();
  for (std::size_t j = 0; j < inst.dim(); ++j)
    if (sum[j] < a * inst.total()[j])
      return false;
  return true;
}

PurifiedPoint purify(const Instance& inst, const TargetRatio& ratio) {
  std::vector<std::size_t> active(inst.size());
  std::iota(active.begin(), active.end(), 0);
  PurifyOutcome raw = purify_active(inst.vectors(), active, inst.dim(),
                                    ratio.p(), ratio.q());

  PurifiedPoint point;
  point.coords = std::move(raw.coords);
  point.pivot_steps = raw.pivot_steps;
  for (std::size_t i = 0; i < point.coords.size(); ++i) {
    if (sgn(point.coords[i]) == 0)
      point.zero_set.push_back(i);
    else if (point.coords[i] == 1)
      point.one_set.push_back(i);
    else
      point.fractional_set.push_back(i);
  }
  if (point.fractional_set.size() > inst.dim())
    throw std::logic_error("purify: too many fractional coordinates");
  return point;
}

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::BaseZero: return "base_zero";
    case CaseTag::BaseOne: return "base_one";
    case CaseTag::ShortcutAll: return "shortcut_all";
    case CaseTag::CaseI: return "case_i";
    case CaseTag::CaseIiPrime: return "case_ii_prime";
    case CaseTag::CaseIiDoublePrime: return "case_ii_double_prime";
  }
  return "unknown";
}

Selection select_rich_subset(const Instance& inst, const TargetRatio& ratio) {
  const std::size_t dim = inst.dim();
  const std::vector<RatVec>& vecs = inst.vectors();

  Int p = ratio.p();
  Int q = ratio.q();

  std::vector<std::size_t> active(inst.size());
  std::iota(active.begin(), active.end(), 0);
  IndexSet committed;  // indices fixed by the keep-the-ones recursions
  std::vector<TraceStep> trace;
  IndexSet result;

  // Both recursive cases are tail calls, so the induction on p + q runs as a
  // loop: `active` holds the current subproblem, `committed` the indices
  // already forced into the answer.
  for (;;) {
    const std::size_t n = active.size();

    if (sgn(p) == 0) {
      trace.push_back(leaf_step(CaseTag::BaseZero, n));
      result = committed;
      break;
    }
    if (p == q) {
      trace.push_back(leaf_step(CaseTag::BaseOne, n));
      result = committed;
      result.insert(result.end(), active.begin(), active.end());
      break;
    }

    const Int f_exact = bound_f_exact(n, dim, p, q);
    if (f_exact >= static_cast<unsigned long>(n)) {
      trace.push_back(leaf_step(CaseTag::ShortcutAll, n));
      result = committed;
      result.insert(result.end(), active.begin(), active.end());
      break;
    }
    const long f = narrow_to_long(f_exact, "select_rich_subset");
    const long s = static_cast<long>(dim) - 1;

    const PurifyOutcome point = purify_active(vecs, active, dim, p, q);
    long zeros = 0;
    long ones = 0;
    for (const Rat& x : point.coords) {
      if (sgn(x) == 0)
        ++zeros;
      else if (x == 1)
        ++ones;
    }

    if (zeros >= static_cast<long>(n) - f) {
      trace.push_back(leaf_step(CaseTag::CaseI, n));
      result = committed;
      for (std::size_t t = 0; t < n; ++t)
        if (sgn(point.coords[t]) > 0)
          result.push_back(active[t]);
      break;
    }
    if (ones < f - s)
      throw std::logic_error(
          "select_rich_subset: zero/one dichotomy violated");

    std::vector<std::size_t> keep;  // J = {i : x_i < 1}, original indices
    std::vector<std::size_t> rest;  // complement, all pinned at 1
    for (std::size_t t = 0; t < n; ++t) {
      if (point.coords[t] < 1)
        keep.push_back(active[t]);
      else
        rest.push_back(active[t]);
    }
    const std::size_t j_size = keep.size();

    if (2 * p <= q) {
      trace.push_back(recursion_step(CaseTag::CaseIiPrime, n, p, q - p,
                                     j_size, j_size));
      active = std::move(keep);
      q -= p;
    } else {
      trace.push_back(recursion_step(CaseTag::CaseIiDoublePrime, n,
                                     2 * p - q, p, n - j_size, j_size));
      committed.insert(committed.end(), keep.begin(), keep.end());
      active = std::move(rest);
      const Int next_p = 2 * p - q;
      q = p;
      p = next_p;
    }
  }

  Selection selection;
  std::sort(result.begin(), result.end());
  selection.indices = std::move(result);
  selection.bound_f = upper_bound_f(inst.size(), dim, ratio);
  selection.sum = sum_over(vecs, selection.indices, dim);
  selection.trace = std::move(trace);

  if (static_cast<long>(selection.indices.size()) > selection.bound_f)
    throw std::logic_error("select_rich_subset: selection exceeds bound");
  if (!is_rich(inst, ratio, selection.indices))
    throw std::logic_error("select_rich_subset: selection is not rich");
  return selection;
}

} // namespace richsub
