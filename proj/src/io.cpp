#include "richsub/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace richsub {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("parse error at position " +
                              std::to_string(pos) + " in \"" +
                              std::string(text) + "\": " + what);
}

// digits -> Int, validated character by character
Int parse_digits(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start)
    parse_fail(text, start, "expected a digit");
  return Int(std::string(text.substr(start, pos - start)), 10);
}

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
  }
}

Rat parse_coordinate(const json& cell, std::size_t i, std::size_t j) {
  const std::string where =
      "vectors[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (!cell.is_string())
    throw std::invalid_argument(where + ": expected a rational string");
  Rat value;
  try {
    value = parse_rational(cell.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(where + ": " + err.what());
  }
  if (sgn(value) < 0)
    throw std::invalid_argument(where + ": negative coordinate");
  return value;
}

json rat_strings(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v)
    out.push_back(rat_to_string(x));
  return out;
}

json index_array(const IndexSet& indices) {
  json out = json::array();
  for (std::size_t i : indices)
    out.push_back(i);
  return out;
}

json trace_array(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const TraceStep& step : trace) {
    json row;
    row["case"] = case_tag_name(step.tag);
    row["n"] = step.n;
    if (step.sub_p)
      row["sub_p"] = step.sub_p->get_str();
    if (step.sub_q)
      row["sub_q"] = step.sub_q->get_str();
    if (step.sub_n)
      row["sub_n"] = *step.sub_n;
    if (step.j_size)
      row["j_size"] = *step.j_size;
    out.push_back(row);
  }
  return out;
}

RatVec target_vector(const Instance& inst, const TargetRatio& ratio) {
  const Rat a = ratio.value();
  RatVec target(inst.dim());
  for (std::size_t j = 0; j < inst.dim(); ++j)
    target[j] = a * inst.total()[j];
  return target;
}

} // namespace

Rat parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty())
    parse_fail(text, 0, "empty input");

  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Int head = parse_digits(text, pos);

  Rat value;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    Int den = parse_digits(text, pos);
    if (sgn(den) == 0)
      parse_fail(text, den_pos, "zero denominator");
    value = make_rat(head, den);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    Int frac = parse_digits(text, pos);
    Int scale(1);
    for (std::size_t t = frac_start; t < pos; ++t)
      scale *= 10;
    value = make_rat(head * scale + frac, scale);
  } else {
    value = Rat(head);
  }

  if (pos != text.size())
    parse_fail(text, pos, "trailing characters");
  if (negative)
    value = -value;
  return value;
}

ParsedInstance parse_instance(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object())
    throw std::invalid_argument("instance document must be a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer())
    throw std::invalid_argument("d: expected an integer");
  if (!doc.contains("a") || !doc["a"].is_string())
    throw std::invalid_argument("a: expected a rational string");
  if (!doc.contains("vectors") || !doc["vectors"].is_array())
    throw std::invalid_argument("vectors: expected an array of arrays");

  const long long dim_raw = doc["d"].get<long long>();
  if (dim_raw < 1)
    throw std::invalid_argument("d: must be positive");
  const std::size_t dim = static_cast<std::size_t>(dim_raw);

  Rat a;
  try {
    a = parse_rational(doc["a"].get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument(std::string("a: ") + err.what());
  }
  if (sgn(a) < 0 || a > 1)
    throw std::invalid_argument("a: outside [0, 1]");

  const json& rows = doc["vectors"];
  if (rows.empty())
    throw std::invalid_argument("vectors: at least one vector required");
  std::vector<RatVec> vectors;
  vectors.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw std::invalid_argument("vectors[" + std::to_string(i) +
                                  "]: expected " + std::to_string(dim) +
                                  " rational strings");
    RatVec row(dim);
    for (std::size_t j = 0; j < dim; ++j)
      row[j] = parse_coordinate(rows[i][j], i, j);
    vectors.push_back(std::move(row));
  }

  return ParsedInstance{Instance(dim, std::move(vectors)), TargetRatio(a)};
}

ParsedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json instance_to_json(const Instance& inst, const TargetRatio& ratio) {
  json doc;
  doc["d"] = inst.dim();
  doc["a"] = rat_to_string(ratio.value());
  json rows = json::array();
  for (const RatVec& v : inst.vectors())
    rows.push_back(rat_strings(v));
  doc["vectors"] = rows;
  return doc;
}

std::string json_to_text(const json& doc) {
  return doc.dump(2) + "\n";
}

std::string emit_instance(const Instance& inst, const TargetRatio& ratio) {
  return json_to_text(instance_to_json(inst, ratio));
}

void write_instance_file(const std::string& path, const Instance& inst,
                         const TargetRatio& ratio) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::invalid_argument("cannot write instance file: " + path);
  out << emit_instance(inst, ratio);
}

json selection_report(const Instance& inst, const TargetRatio& ratio,
                      const Selection& selection, bool with_trace) {
  json doc;
  doc["indices"] = index_array(selection.indices);
  doc["size"] = selection.indices.size();
  doc["bound_f"] = selection.bound_f;
  doc["sum"] = rat_strings(selection.sum);
  doc["target"] = rat_strings(target_vector(inst, ratio));
  doc["rich"] = is_rich(inst, ratio, selection.indices);
  doc["bounds_comparison"] = {
      {"f", upper_bound_f(inst.size(), inst.dim(), ratio)},
      {"sw", rat_to_string(sw_bound(inst.size(), inst.dim(), ratio))},
      {"alon", rat_to_string(alon_bound(inst.size(), inst.dim(), ratio))}};
  if (with_trace)
    doc["trace"] = trace_array(selection.trace);
  return doc;
}

json verify_report(const Instance& inst, const TargetRatio& ratio,
                   const IndexSet& indices) {
  const bool rich = is_rich(inst, ratio, indices);  // validates the indices
  IndexSet sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  RatVec sum(inst.dim(), Rat(0));
  for (std::size_t i : sorted)
    vec_add_assign(sum, inst.vector(i));
  json doc;
  doc["indices"] = index_array(sorted);
  doc["size"] = sorted.size();
  doc["sum"] = rat_strings(sum);
  doc["target"] = rat_strings(target_vector(inst, ratio));
  doc["rich"] = rich;
  return doc;
}

json oracle_report(const Instance& inst, const TargetRatio& ratio,
                   const OracleResult& result) {
  json doc;
  doc["min_size"] = result.min_size;
  doc["witness"] = index_array(result.witness);
  doc["explored"] = result.explored;
  doc["rich"] = is_rich(inst, ratio, result.witness);
  doc["bound_f"] = upper_bound_f(inst.size(), inst.dim(), ratio);
  return doc;
}

json bound_report(std::size_t n, std::size_t dim, const TargetRatio& ratio) {
  json doc;
  doc["n"] = n;
  doc["d"] = dim;
  doc["a"] = rat_to_string(ratio.value());
  doc["f"] = upper_bound_f(n, dim, ratio);
  doc["sw"] = rat_to_string(sw_bound(n, dim, ratio));
  doc["alon"] = rat_to_string(alon_bound(n, dim, ratio));
  return doc;
}

json bounds_table(std::size_t n_max, std::size_t dim,
                  const TargetRatio& ratio) {
  json doc;
  doc["d"] = dim;
  doc["a"] = rat_to_string(ratio.value());
  json rows = json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    json row;
    row["n"] = n;
    row["f"] = upper_bound_f(n, dim, ratio);
    row["sw"] = rat_to_string(sw_bound(n, dim, ratio));
    row["alon"] = rat_to_string(alon_bound(n, dim, ratio));
    rows.push_back(row);
  }
  doc["bounds"] = rows;
  return doc;
}

} // namespace richsub
