#include "covariant/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "covariant/errors.hpp"

namespace covariant {

FiniteGroup load_group(std::string_view json_text, AssociativityCheck check, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedTable(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedTable("document must be a JSON object");
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() <= 0) {
    throw MalformedTable("\"order\" must be a positive integer");
  }
  if (!doc.contains("table") || !doc["table"].is_array()) throw MalformedTable("\"table\" must be an array of rows");

  const auto n = static_cast<std::size_t>(doc["order"].get<long long>());
  const auto& rows = doc["table"];
  if (rows.size() != n) {
    throw MalformedTable("\"table\" has " + std::to_string(rows.size()) + " rows but order is " + std::to_string(n));
  }
  std::vector<std::vector<Element>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array()) throw MalformedTable("row " + std::to_string(r) + " is not an array");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const auto& v = rows[r][c];
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= static_cast<long long>(n)) {
        throw MalformedTable("cell (" + std::to_string(r) + "," + std::to_string(c) + ") = " + v.dump() +
                             " is not an index in [0," + std::to_string(n) + ")");
      }
      table[r].push_back(static_cast<Element>(v.get<long long>()));
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw MalformedTable("\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw MalformedTable("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroup::from_table(table, std::move(labels), std::move(name), check);
}

FiniteGroup load_group_file(const std::filesystem::path& path, AssociativityCheck check) {
  std::ifstream in(path);
  if (!in) throw MalformedTable("cannot read group table file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return load_group(text.str(), check, path.stem().string());
  } catch (const MalformedTable& e) {
    throw MalformedTable(path.string() + ": " + e.what());
  } catch (const NotAGroup& e) {
    throw NotAGroup(path.string() + ": " + e.what());
  }
}

std::string serialize_group(const FiniteGroup& g) {
  nlohmann::ordered_json doc;
  doc["order"] = g.order();
  doc["table"] = g.table();
  doc["labels"] = g.labels();
  return doc.dump();
}

}  // namespace covariant
