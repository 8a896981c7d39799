#pragma once

#include "richsub/instance.hpp"
#include "richsub/oracle.hpp"
#include "richsub/selector.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace richsub {

// Exact text forms: integer "7", fraction "3/4", or finite decimal "0.25"
// (converted exactly, so "0.25" is 1/4). Anything else raises
// std::invalid_argument with the offending position.
Rat parse_rational(std::string_view text);

struct ParsedInstance {
  Instance instance;
  TargetRatio ratio;
};

// Instance documents are JSON objects:
//   { "d": 2, "a": "1/3", "vectors": [["1", "0"], ["0", "1"]] }
// All indices in files and reports are 0-based. Validation errors name the
// offending entry.
ParsedInstance parse_instance(std::string_view text);
ParsedInstance load_instance_file(const std::string& path);

nlohmann::json instance_to_json(const Instance& inst, const TargetRatio& ratio);
std::string emit_instance(const Instance& inst, const TargetRatio& ratio);
void write_instance_file(const std::string& path, const Instance& inst,
                         const TargetRatio& ratio);

std::string json_to_text(const nlohmann::json& doc);

// Reports. Rationals are rendered as canonical strings, never as floats;
// the `rich` flag is recomputed from the indices at emission time.
nlohmann::json selection_report(const Instance& inst, const TargetRatio& ratio,
                                const Selection& selection, bool with_trace);
nlohmann::json verify_report(const Instance& inst, const TargetRatio& ratio,
                             const IndexSet& indices);
nlohmann::json oracle_report(const Instance& inst, const TargetRatio& ratio,
                             const OracleResult& result);
nlohmann::json bound_report(std::size_t n, std::size_t dim,
                            const TargetRatio& ratio);
nlohmann::json bounds_table(std::size_t n_max, std::size_t dim,
                            const TargetRatio& ratio);

} // namespace richsub
