#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

// JSON algebra file:
//   {"name": "...", "dim": 3, "basis": ["x","y","z"],
//    "table": [{"left": "x", "right": "z", "result": [{"basis": "x", "coeff": "1"}]}]}
// Coefficients are rational literal strings, never JSON numbers.
struct DocumentTerm {
  std::string basis;
  std::string coeff;
  friend bool operator==(const DocumentTerm&, const DocumentTerm&) = default;
};

struct DocumentEntry {
  std::string left;
  std::string right;
  std::vector<DocumentTerm> result;
  friend bool operator==(const DocumentEntry&, const DocumentEntry&) = default;
};

struct AlgebraDocument {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<DocumentEntry> table;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

// Throws Error(kParseError) with line and column for malformed JSON, or the
// offending field for a document of the wrong shape.
AlgebraDocument parse_document(std::string_view text);
std::string serialize(const AlgebraDocument& doc);

// Resolves labels and literals. Throws kUnknownLabel, kDuplicateEntry,
// kParseError (bad literal, dim mismatch) or kValidationError.
LeibnizAlgebra to_algebra(const AlgebraDocument& doc, bool validate = true);
AlgebraDocument to_document(const LeibnizAlgebra& algebra, std::string name);

LeibnizAlgebra parse_algebra(std::string_view text, bool validate = true);

}  // namespace leibniz
