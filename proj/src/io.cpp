#include "hicomm/io.hpp"

#include <fstream>
#include <sstream>

#include "hicomm/malcev.hpp"
#include "json.hpp"

namespace hicomm {

using nlohmann::json;

ParsedAlgebra parse_algebra_text(const std::string& text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("algebra file: top level must be an object");
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    throw ValidationError("algebra file: missing integer field 'size'");
  const int m = doc["size"].get<int>();
  std::string name = doc.value("name", std::string("algebra"));
  if (!doc.contains("operations") || !doc["operations"].is_array())
    throw ValidationError("algebra file: missing array field 'operations'");

  std::vector<OperationTable> ops;
  int index = 0;
  for (const auto& o : doc["operations"]) {
    const std::string where = "operations[" + std::to_string(index++) + "]";
    if (!o.is_object()) throw ValidationError("algebra file: " + where + " must be an object");
    if (!o.contains("symbol") || !o["symbol"].is_string())
      throw ValidationError("algebra file: " + where + " missing string 'symbol'");
    if (!o.contains("arity") || !o["arity"].is_number_integer())
      throw ValidationError("algebra file: " + where + " missing integer 'arity'");
    if (!o.contains("table") || !o["table"].is_array())
      throw ValidationError("algebra file: " + where + " missing array 'table'");
    OperationTable t;
    t.symbol = o["symbol"].get<std::string>();
    t.arity = o["arity"].get<int>();
    for (const auto& v : o["table"]) {
      if (!v.is_number_integer())
        throw ValidationError("algebra file: " + where + " table entries must be integers");
      t.table.push_back(v.get<int>());
    }
    if (t.arity < 0 || m <= 0)
      throw ValidationError("algebra file: " + where + " has negative arity or bad size");
    std::size_t expect = 1;
    for (int k = 0; k < t.arity; ++k) expect *= static_cast<std::size_t>(m);
    if (t.table.size() != expect)
      throw ValidationError("algebra file: " + where + " table has " +
                            std::to_string(t.table.size()) + " entries, expected " +
                            std::to_string(expect));
    for (int v : t.table)
      if (v < 0 || v >= m)
        throw ValidationError("algebra file: " + where + " table entry " + std::to_string(v) +
                              " is outside the carrier");
    ops.push_back(std::move(t));
  }

  ParsedAlgebra out{FiniteAlgebra(std::move(name), m, std::move(ops), limits), std::nullopt};
  if (doc.value("with_constants", false)) out.algebra = out.algebra.with_constants();
  if (doc.contains("malcev_term")) {
    if (!doc["malcev_term"].is_string())
      throw ValidationError("algebra file: 'malcev_term' must be a term string");
    Term q = parse_term(doc["malcev_term"].get<std::string>());
    if (!verify_malcev(out.algebra, q))
      throw ValidationError("algebra file: malcev_term fails the Mal'cev identities");
    out.malcev = std::move(q);
  }
  return out;
}

ParsedAlgebra parse_algebra_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_text(ss.str(), limits);
}

std::string serialize_algebra(const FiniteAlgebra& alg) {
  json doc;
  doc["name"] = alg.name();
  doc["size"] = alg.size();
  doc["operations"] = json::array();
  for (const auto& op : alg.ops()) {
    json o;
    o["symbol"] = op.symbol;
    o["arity"] = op.arity;
    o["table"] = op.table;
    doc["operations"].push_back(o);
  }
  return doc.dump(2);
}

std::uint64_t algebra_fingerprint(const FiniteAlgebra& alg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_algebra(alg)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hicomm
