#include "leibniz/document.hpp"

#include <json.hpp>

#include <map>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

using json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kParseError, where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw Error(ErrorCode::kParseError, where + "." + key + ": expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw Error(ErrorCode::kParseError, where + "." + key + ": expected an array");
  return v;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::kParseError, "document: expected a JSON object");

  AlgebraDocument doc;
  doc.name = root.contains("name") ? string_field(root, "name", "document") : "";
  const json& dim = field(root, "dim", "document");
  if (!dim.is_number_unsigned()) throw Error(ErrorCode::kParseError, "document.dim: expected a non-negative integer");
  doc.dim = dim.get<std::size_t>();
  const json& basis = array_field(root, "basis", "document");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) {
      throw Error(ErrorCode::kParseError, "document.basis[" + std::to_string(i) + "]: expected a string");
    }
    doc.basis.push_back(basis[i].get<std::string>());
  }
  const json& table = array_field(root, "table", "document");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string where = "document.table[" + std::to_string(i) + "]";
    DocumentEntry entry{string_field(table[i], "left", where), string_field(table[i], "right", where), {}};
    const json& result = array_field(table[i], "result", where);
    for (std::size_t j = 0; j < result.size(); ++j) {
      const std::string term_where = where + ".result[" + std::to_string(j) + "]";
      entry.result.push_back({string_field(result[j], "basis", term_where), string_field(result[j], "coeff", term_where)});
    }
    doc.table.push_back(std::move(entry));
  }
  return doc;
}

std::string serialize(const AlgebraDocument& doc) {
  json root;
  root["name"] = doc.name;
  root["dim"] = doc.dim;
  root["basis"] = doc.basis;
  json table = json::array();
  for (const auto& entry : doc.table) {
    json result = json::array();
    for (const auto& term : entry.result) result.push_back({{"basis", term.basis}, {"coeff", term.coeff}});
    table.push_back({{"left", entry.left}, {"right", entry.right}, {"result", std::move(result)}});
  }
  root["table"] = std::move(table);
  return root.dump(2) + "\n";
}

LeibnizAlgebra to_algebra(const AlgebraDocument& doc, bool validate) {
  if (doc.basis.size() != doc.dim) {
    throw Error(ErrorCode::kParseError, "dim is " + std::to_string(doc.dim) + " but " +
                                            std::to_string(doc.basis.size()) + " basis labels are given");
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.basis.size(); ++i) {
    if (!index.emplace(doc.basis[i], i).second) {
      throw Error(ErrorCode::kDuplicateEntry, "basis label '" + doc.basis[i] + "' repeated");
    }
  }
  auto lookup = [&](const std::string& label) {
    const auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorCode::kUnknownLabel, "unknown basis label '" + label + "'");
    return it->second;
  };
  std::vector<ProductEntry> entries;
  for (const auto& e : doc.table) {
    ProductEntry entry{lookup(e.left), lookup(e.right), {}};
    for (const auto& t : e.result) entry.result.push_back({lookup(t.basis), Rational::parse(t.coeff)});
    entries.push_back(std::move(entry));
  }
  return LeibnizAlgebra(doc.basis, std::move(entries),
                        validate ? LeibnizAlgebra::Validation::kEnforce : LeibnizAlgebra::Validation::kDeferred);
}

AlgebraDocument to_document(const LeibnizAlgebra& algebra, std::string name) {
  AlgebraDocument doc{std::move(name), algebra.dim(), algebra.basis_names(), {}};
  const auto& names = algebra.basis_names();
  for (const auto& e : algebra.entries()) {
    DocumentEntry entry{names[e.left], names[e.right], {}};
    for (const auto& t : e.result) entry.result.push_back({names[t.basis], t.coeff.to_string()});
    doc.table.push_back(std::move(entry));
  }
  return doc;
}

LeibnizAlgebra parse_algebra(std::string_view text, bool validate) {
  return to_algebra(parse_document(text), validate);
}

}  // namespace leibniz
