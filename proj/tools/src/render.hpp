#pragma once

#include <string>

#include "json.hpp"

namespace leibniz::cli {

using Json = nlohmann::ordered_json;

// Indented key/value rendering of a report for terminals.
std::string render_text(const Json& report);

}  // namespace leibniz::cli
