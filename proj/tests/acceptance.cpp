// Acceptance suite. Runs every product-level criterion end to end and prints
// one PASS/FAIL line per criterion. The CLI binary path is taken from
// argv[1] for the pipeline criterion.

#include "corpus.hpp"
#include "richsub/extremal.hpp"
#include "richsub/io.hpp"
#include "richsub/oracle.hpp"
#include "richsub/random.hpp"
#include "richsub/selector.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace richsub;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

std::vector<Criterion> results;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void record(int id, const std::string& title, bool passed,
            const std::string& detail, double seconds) {
  results.push_back({id, title, passed, detail, seconds});
}

TargetRatio ratio(unsigned long p, unsigned long q) {
  return TargetRatio(Int(p), Int(q));
}

RatVec target_of(const Instance& inst, const TargetRatio& r) {
  RatVec t(inst.dim());
  for (std::size_t j = 0; j < inst.dim(); ++j)
    t[j] = r.value() * inst.total()[j];
  return t;
}

bool selection_ok(const Instance& inst, const TargetRatio& r,
                  const Selection& sel, std::string& why) {
  if (!is_rich(inst, r, sel.indices)) {
    why = "selection is not rich";
    return false;
  }
  if (static_cast<long>(sel.indices.size()) >
      upper_bound_f(inst.size(), inst.dim(), r)) {
    why = "selection exceeds the bound";
    return false;
  }
  return true;
}

bool purified_ok(const Instance& inst, const TargetRatio& r,
                 std::string& why) {
  const PurifiedPoint point = purify(inst, r);
  const std::size_t n = inst.size();
  RatVec weighted(inst.dim(), Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(point.coords[i]) < 0 || point.coords[i] > 1) {
      why = "coordinate outside [0,1]";
      return false;
    }
    for (std::size_t j = 0; j < inst.dim(); ++j)
      weighted[j] += point.coords[i] * inst.vector(i)[j];
  }
  if (weighted != target_of(inst, r)) {
    why = "weighted sum misses the target";
    return false;
  }
  if (n - point.zero_set.size() - point.one_set.size() > inst.dim()) {
    why = "fewer than N - d integer coordinates";
    return false;
  }
  std::vector<RatVec> frac_cols;
  for (std::size_t i : point.fractional_set)
    frac_cols.push_back(inst.vector(i));
  if (!frac_cols.empty() && kernel_vector(frac_cols).has_value()) {
    why = "fractional columns are dependent";
    return false;
  }
  if (point.pivot_steps > n) {
    why = "pivot budget exceeded";
    return false;
  }
  return true;
}

bool trace_ok(const TargetRatio& r, const Selection& sel, std::string& why) {
  Int budget = r.p() + r.q();
  for (const TraceStep& step : sel.trace) {
    if (!step.sub_p.has_value())
      continue;
    const Int next = *step.sub_p + *step.sub_q;
    if (next >= budget) {
      why = "subproblem p + q did not decrease";
      return false;
    }
    budget = next;
  }
  return true;
}

// Criteria 1, 3, and 4 share the 5000-instance corpus; one pass collects
// everything.
void criteria_1_3_4() {
  Timer timer;
  const std::size_t count = 5000;
  std::size_t bad_select = 0;
  std::size_t bad_purify = 0;
  std::size_t bad_trace = 0;
  std::size_t case_i = 0, case_prime = 0, case_double_prime = 0;
  std::string why;

  const auto corpus_cases = corpus::random_cases(count, 40, 5, 9);
  for (const auto& c : corpus_cases) {
    const Selection sel = select_rich_subset(c.instance, c.ratio);
    if (!selection_ok(c.instance, c.ratio, sel, why))
      ++bad_select;
    if (!purified_ok(c.instance, c.ratio, why))
      ++bad_purify;
    if (!trace_ok(c.ratio, sel, why))
      ++bad_trace;
    for (const TraceStep& step : sel.trace) {
      if (step.tag == CaseTag::CaseI)
        ++case_i;
      else if (step.tag == CaseTag::CaseIiPrime)
        ++case_prime;
      else if (step.tag == CaseTag::CaseIiDoublePrime)
        ++case_double_prime;
    }
  }
  const double select_time = timer.seconds();

  record(1, "guaranteed bound holds on the random corpus", bad_select == 0,
         std::to_string(count) + " instances, " +
             std::to_string(bad_select) + " violations",
         select_time);
  record(3, "purification contract on the random corpus", bad_purify == 0,
         std::to_string(bad_purify) + " violations", timer.seconds());

  // Targeted zero/unit instances keep every recursion branch exercised.
  Timer branch_timer;
  for (const auto& c : corpus::branch_cases(4, 9)) {
    const Selection sel = select_rich_subset(c.instance, c.ratio);
    if (!trace_ok(c.ratio, sel, why))
      ++bad_trace;
    for (const TraceStep& step : sel.trace) {
      if (step.tag == CaseTag::CaseI)
        ++case_i;
      else if (step.tag == CaseTag::CaseIiPrime)
        ++case_prime;
      else if (step.tag == CaseTag::CaseIiDoublePrime)
        ++case_double_prime;
    }
  }
  const bool coverage =
      case_i >= 50 && case_prime >= 50 && case_double_prime >= 50;
  record(4, "recursion structure and branch coverage",
         bad_trace == 0 && coverage,
         "case_i=" + std::to_string(case_i) +
             " case_ii_prime=" + std::to_string(case_prime) +
             " case_ii_double_prime=" + std::to_string(case_double_prime) +
             ", " + std::to_string(bad_trace) + " bad traces",
         branch_timer.seconds());
}

void criterion_2() {
  Timer timer;
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (unsigned long q = 2; q <= 6; ++q)
    for (unsigned long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      for (std::size_t dim = 1; dim <= 3; ++dim) {
        const std::size_t r = mod_inverse(Int(p), Int(q)).get_ui();
        const std::size_t rs = r * (dim - 1);
        const std::size_t lo = std::max<std::size_t>(rs, 1);
        const std::size_t hi = std::min<std::size_t>(rs + 8, 18);
        for (std::size_t n = lo; n <= hi; ++n) {
          if (n < (q - 1) * (dim - 1))
            continue;  // the equality claim starts here
          const auto spec = ExtremalSpec::create(dim, n, ratio(p, q));
          const Instance inst = extremal_instance(spec);
          const long predicted = extremal_min_size(spec);
          const long truth =
              static_cast<long>(brute_min_rich(inst, spec.ratio).min_size);
          const long f = upper_bound_f(n, dim, spec.ratio);
          ++cases;
          if (truth != predicted || predicted != f)
            ++failures;
        }
      }
    }
  record(2, "tightness of the bound on the extremal family", failures == 0,
         std::to_string(cases) + " cases, " + std::to_string(failures) +
             " mismatches",
         timer.seconds());
}

void criterion_5() {
  Timer timer;
  std::size_t failures = 0;
  const auto cases = corpus::random_cases(500, 14, 5, 9, 0x5A11ULL);
  for (const auto& c : cases) {
    const OracleResult truth = brute_min_rich(c.instance, c.ratio);
    const Selection sel = select_rich_subset(c.instance, c.ratio);
    const long f = upper_bound_f(c.instance.size(), c.instance.dim(), c.ratio);
    if (!(truth.min_size <= sel.indices.size() &&
          static_cast<long>(sel.indices.size()) <= f))
      ++failures;
  }
  record(5, "oracle sandwich on 500 small instances", failures == 0,
         std::to_string(failures) + " violations", timer.seconds());
}

void criterion_6() {
  Timer timer;
  std::size_t failures = 0;
  std::size_t cases = 0;
  for (unsigned long q = 2; q <= 12; ++q)
    for (unsigned long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      for (std::size_t dim = 1; dim <= 8; ++dim)
        for (std::size_t n = 1; n <= 200; ++n) {
          const TargetRatio r = ratio(p, q);
          const Rat f(upper_bound_f(n, dim, r));
          ++cases;
          if (f > sw_bound(n, dim, r) || f > alon_bound(n, dim, r))
            ++failures;
        }
    }
  record(6, "bound dominance (f <= sw, f <= alon)", failures == 0,
         std::to_string(cases) + " triples, " + std::to_string(failures) +
             " exceptions",
         timer.seconds());
}

void criterion_7() {
  Timer timer;
  bool ok = true;
  std::string detail = "all degenerate inputs handled";
  std::string why;
  try {
    {
      const Instance inst(2, {{Rat(1), Rat(2)}, {Rat(3), Rat(4)},
                              {Rat(5), Rat(6)}});
      const Selection sel = select_rich_subset(inst, ratio(0, 1));
      if (!sel.indices.empty())
        throw std::runtime_error("a=0 must select nothing");
    }
    {
      const Instance inst(2, {{Rat(1), Rat(2)}, {Rat(3), Rat(4)},
                              {Rat(5), Rat(6)}});
      const Selection sel = select_rich_subset(inst, ratio(1, 1));
      if (sel.indices.size() != 3)
        throw std::runtime_error("a=1 must select everything");
    }
    {
      const Instance inst(3, std::vector<RatVec>(11, RatVec(3, Rat(0))));
      for (auto r : {ratio(0, 1), ratio(1, 3), ratio(3, 5), ratio(1, 1)}) {
        const Selection sel = select_rich_subset(inst, r);
        if (!selection_ok(inst, r, sel, why))
          throw std::runtime_error("all-zero instance: " + why);
      }
    }
    {
      std::vector<RatVec> vecs;
      for (int i = 0; i < 8; ++i)
        vecs.push_back({Rat(i % 3), Rat(0), Rat((i * 7) % 5)});
      const Instance inst(3, std::move(vecs));
      const Selection sel = select_rich_subset(inst, ratio(2, 5));
      if (!selection_ok(inst, ratio(2, 5), sel, why))
        throw std::runtime_error("zero total coordinate: " + why);
    }
    {
      const Instance inst(6, {{Rat(1), Rat(0), Rat(2), Rat(0), Rat(1), Rat(3)},
                              {Rat(0), Rat(2), Rat(1), Rat(1), Rat(0), Rat(1)}});
      const Selection sel = select_rich_subset(inst, ratio(1, 2));
      if (!selection_ok(inst, ratio(1, 2), sel, why))
        throw std::runtime_error("N < d: " + why);
    }
    {
      const Instance inst(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                              {Rat(1), Rat(1)}, {Rat(2), Rat(1)}});
      const Selection sel = select_rich_subset(inst, ratio(2, 3));
      if (sel.trace.empty() || sel.trace[0].tag != CaseTag::ShortcutAll ||
          sel.indices.size() != 4)
        throw std::runtime_error("f >= N shortcut did not take all indices");
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  record(7, "degenerate-input suite", ok, detail, timer.seconds());
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& command) {
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe)
    return result;
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe))
    result.out += buffer;
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_8(const std::string& cli) {
  Timer timer;
  std::size_t failures = 0;
  std::string detail;

  const fs::path tmp =
      fs::temp_directory_path() /
      ("richsub_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);

  const char* ratios[] = {"1/2", "1/3", "2/3", "3/4", "2/5",
                          "5/6", "4/7", "1/1", "0/1", "7/9"};
  const char* densities[] = {"0", "1/4", "1/2"};

  for (unsigned seed = 1; seed <= 100 && failures == 0; ++seed) {
    const std::string file = (tmp / ("inst_" + std::to_string(seed) + ".json")).string();
    const std::string a = ratios[seed % 10];
    const std::ostringstream random_cmd = [&] {
      std::ostringstream cmd;
      cmd << "'" << cli << "' random --seed " << seed << " --n "
          << 1 + seed % 12 << " --d " << 1 + seed % 4 << " --a '" << a
          << "' --max-den 10 --zero-density '" << densities[seed % 3]
          << "' -o '" << file << "'";
      return cmd;
    }();
    if (run_cli(random_cmd.str()).status != 0) {
      ++failures;
      detail = "random failed at seed " + std::to_string(seed);
      break;
    }

    // emitted files re-parse and re-emit byte-identically
    const std::string bytes = read_file(file);
    const auto parsed = parse_instance(bytes);
    if (emit_instance(parsed.instance, parsed.ratio) != bytes) {
      ++failures;
      detail = "emit round trip changed bytes at seed " + std::to_string(seed);
      break;
    }

    const CliResult select =
        run_cli("'" + cli + "' select -i '" + file + "' --trace");
    if (select.status != 0) {
      ++failures;
      detail = "select failed at seed " + std::to_string(seed);
      break;
    }
    const auto report = nlohmann::json::parse(select.out);
    if (report["rich"] != true ||
        report["size"].get<long>() > report["bound_f"].get<long>()) {
      ++failures;
      detail = "select report invalid at seed " + std::to_string(seed);
      break;
    }

    std::string list;
    for (const auto& index : report["indices"]) {
      if (!list.empty())
        list += ",";
      list += std::to_string(index.get<std::size_t>());
    }
    const CliResult verify = run_cli("'" + cli + "' verify -i '" + file +
                                     "' --indices '" + list + "'");
    if (verify.status != 0 ||
        nlohmann::json::parse(verify.out)["rich"] != true) {
      ++failures;
      detail = "verify rejected the selection at seed " + std::to_string(seed);
      break;
    }
  }

  // Exit-code contract: validation and usage problems exit 1.
  if (failures == 0) {
    const fs::path bad = tmp / "bad.json";
    fs::create_directories(tmp);
    std::ofstream(bad) << "{\"d\": 1, \"a\": \"3/2\", \"vectors\": [[\"1\"]]}";
    if (run_cli("'" + cli + "' select -i '" + bad.string() +
                "' 2>/dev/null")
            .status != 1) {
      ++failures;
      detail = "validation error did not exit 1";
    } else if (run_cli("'" + cli + "' no-such-command 2>/dev/null").status !=
               1) {
      ++failures;
      detail = "unknown subcommand did not exit 1";
    } else if (run_cli("'" + cli + "' select -i /nonexistent.json 2>/dev/null")
                   .status != 1) {
      ++failures;
      detail = "missing file did not exit 1";
    }
  }

  fs::remove_all(tmp);
  if (failures == 0)
    detail = "100 random/select/verify pipelines, byte-stable files, "
             "exit codes honored";
  record(8, "CLI pipeline round trip", failures == 0, detail,
         timer.seconds());
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-richsub-cli>\n";
    return 2;
  }

  criteria_1_3_4();
  criterion_2();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(argv[1]);

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  bool all_passed = true;
  for (const Criterion& r : results) {
    std::printf("%s  criterion %d: %s (%s; %.1f s)\n",
                r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    all_passed = all_passed && r.passed;
  }
  std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES PRESENT");
  return all_passed ? 0 : 1;
}
