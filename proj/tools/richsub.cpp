// Command-line front end. Subcommands wire the solver, the tight-instance
// generator, and the exhaustive oracle together over JSON instance files.
// Exit codes: 0 success, 1 validation or usage error, 2 internal assertion
// failure.

#include "richsub/extremal.hpp"
#include "richsub/io.hpp"
#include "richsub/oracle.hpp"
#include "richsub/random.hpp"
#include "richsub/selector.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using richsub::IndexSet;
using richsub::TargetRatio;

TargetRatio ratio_from_text(const std::string& text) {
  return TargetRatio(richsub::parse_rational(text));
}

IndexSet parse_index_list(const std::string& text) {
  IndexSet indices;
  if (text.empty())
    return indices;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--indices: expected a comma-separated "
                                  "list of nonnegative integers, got \"" +
                                  item + "\"");
    indices.push_back(std::stoull(item));
    pos = comma + 1;
    if (comma == text.size())
      break;
  }
  return indices;
}

void print_report(const nlohmann::json& doc) {
  std::cout << richsub::json_to_text(doc);
}

void setup_select(CLI::App& app) {
  auto* cmd = app.add_subcommand("select", "Pick a rich subset within the guaranteed bound");
  auto input = std::make_shared<std::string>();
  auto with_trace = std::make_shared<bool>(false);
  cmd->add_option("-i,--input", *input, "instance file (JSON)")->required();
  cmd->add_flag("--trace", *with_trace, "include the case trace in the report");
  cmd->callback([input, with_trace] {
    auto parsed = richsub::load_instance_file(*input);
    auto selection = richsub::select_rich_subset(parsed.instance, parsed.ratio);
    print_report(richsub::selection_report(parsed.instance, parsed.ratio,
                                           selection, *with_trace));
  });
}

void setup_bound(CLI::App& app) {
  auto* cmd = app.add_subcommand("bound", "Evaluate the three size bounds");
  auto n = std::make_shared<std::size_t>();
  auto d = std::make_shared<std::size_t>();
  auto a = std::make_shared<std::string>();
  cmd->add_option("-N,--n", *n, "number of vectors")->required();
  cmd->add_option("-d,--dim", *d, "dimension")->required();
  cmd->add_option("-a,--ratio", *a, "target ratio in [0,1]")->required();
  cmd->callback([n, d, a] {
    print_report(richsub::bound_report(*n, *d, ratio_from_text(*a)));
  });
}

void setup_extremal(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "extremal", "Generate a tight instance and its exact minimum");
  auto n = std::make_shared<std::size_t>();
  auto d = std::make_shared<std::size_t>();
  auto a = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  cmd->add_option("-N,--n", *n, "number of vectors")->required();
  cmd->add_option("-d,--dim", *d, "dimension")->required();
  cmd->add_option("-a,--ratio", *a, "target ratio with 0 < p < q")->required();
  cmd->add_option("-o,--output", *out, "write the instance file here");
  cmd->callback([n, d, a, out] {
    const auto spec =
        richsub::ExtremalSpec::create(*d, *n, ratio_from_text(*a));
    const auto inst = richsub::extremal_instance(spec);
    nlohmann::json doc;
    doc["predicted_min_size"] = richsub::extremal_min_size(spec);
    doc["bound_f"] = richsub::upper_bound_f(*n, *d, spec.ratio);
    doc["r"] = spec.r.get_str();
    doc["m"] = spec.m.get_str();
    if (out->empty()) {
      doc["instance"] = richsub::instance_to_json(inst, spec.ratio);
    } else {
      richsub::write_instance_file(*out, inst, spec.ratio);
      doc["instance_file"] = *out;
    }
    print_report(doc);
  });
}

void setup_oracle(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "oracle", "Exhaustively compute the true minimum rich size");
  auto input = std::make_shared<std::string>();
  auto max_n = std::make_shared<std::size_t>(22);
  cmd->add_option("-i,--input", *input, "instance file (JSON)")->required();
  cmd->add_option("--max-n", *max_n, "refuse instances larger than this");
  cmd->callback([input, max_n] {
    auto parsed = richsub::load_instance_file(*input);
    auto result = richsub::brute_min_rich(parsed.instance, parsed.ratio, *max_n);
    print_report(richsub::oracle_report(parsed.instance, parsed.ratio, result));
  });
}

void setup_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand("verify", "Check whether an index set is rich");
  auto input = std::make_shared<std::string>();
  auto indices = std::make_shared<std::string>();
  cmd->add_option("-i,--input", *input, "instance file (JSON)")->required();
  cmd->add_option("--indices", *indices,
                  "comma-separated 0-based indices (empty for the empty set)")
      ->required();
  cmd->callback([input, indices] {
    auto parsed = richsub::load_instance_file(*input);
    print_report(richsub::verify_report(parsed.instance, parsed.ratio,
                                        parse_index_list(*indices)));
  });
}

void setup_random(CLI::App& app) {
  auto* cmd = app.add_subcommand("random", "Generate a seeded random instance");
  auto seed = std::make_shared<std::uint64_t>();
  auto n = std::make_shared<std::size_t>();
  auto d = std::make_shared<std::size_t>();
  auto a = std::make_shared<std::string>();
  auto max_den = std::make_shared<std::uint32_t>(10);
  auto zero_density = std::make_shared<std::string>("0");
  auto out = std::make_shared<std::string>();
  cmd->add_option("--seed", *seed, "generator seed")->required();
  cmd->add_option("--n", *n, "number of vectors")->required();
  cmd->add_option("--d", *d, "dimension")->required();
  cmd->add_option("--a", *a, "target ratio in [0,1]")->required();
  cmd->add_option("--max-den", *max_den,
                  "numerators and denominators are drawn from [1, this]");
  cmd->add_option("--zero-density", *zero_density,
                  "probability that a coordinate is 0 (rational in [0,1])");
  cmd->add_option("-o,--output", *out, "write the instance file here");
  cmd->callback([seed, n, d, a, max_den, zero_density, out] {
    const TargetRatio ratio = ratio_from_text(*a);
    const auto inst = richsub::random_instance(
        *seed, *n, *d, *max_den, richsub::parse_rational(*zero_density));
    if (out->empty()) {
      std::cout << richsub::emit_instance(inst, ratio);
    } else {
      richsub::write_instance_file(*out, inst, ratio);
      nlohmann::json doc;
      doc["instance_file"] = *out;
      doc["n"] = *n;
      doc["d"] = *d;
      doc["a"] = richsub::rat_to_string(ratio.value());
      print_report(doc);
    }
  });
}

void setup_compare_bounds(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "compare-bounds", "Tabulate f, sw, and alon for n = 1..N");
  auto n = std::make_shared<std::size_t>();
  auto d = std::make_shared<std::size_t>();
  auto a = std::make_shared<std::string>();
  cmd->add_option("-N,--n", *n, "largest instance size in the table")->required();
  cmd->add_option("-d,--dim", *d, "dimension")->required();
  cmd->add_option("-a,--ratio", *a, "target ratio in [0,1]")->required();
  cmd->callback([n, d, a] {
    print_report(richsub::bounds_table(*n, *d, ratio_from_text(*a)));
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for coordinatewise-rich subset selection"};
  app.require_subcommand(1);
  setup_select(app);
  setup_bound(app);
  setup_extremal(app);
  setup_oracle(app);
  setup_verify(app);
  setup_random(app);
  setup_compare_bounds(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
