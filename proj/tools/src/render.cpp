#include "render.hpp"

#include <sstream>

namespace leibniz::cli {

namespace {

std::string scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

bool is_flat(const Json& value) {
  if (!value.is_array()) return value.is_primitive();
  for (const auto& item : value) {
    if (!item.is_primitive()) return false;
  }
  return true;
}

std::string inline_array(const Json& value) {
  std::string out = "[";
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i > 0) out += ", ";
    out += scalar(value[i]);
  }
  return out + "]";
}

void emit(std::ostringstream& out, const Json& value, int indent);

void emit_item(std::ostringstream& out, const Json& item, int indent) {
  const std::string pad(indent, ' ');
  if (item.is_primitive()) {
    out << pad << "- " << scalar(item) << '\n';
  } else if (is_flat(item)) {
    out << pad << "- " << inline_array(item) << '\n';
  } else {
    out << pad << "-\n";
    emit(out, item, indent + 2);
  }
}

void emit(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(indent, ' ');
  if (value.is_array()) {
    for (const auto& item : value) emit_item(out, item, indent);
    return;
  }
  for (const auto& [key, child] : value.items()) {
    if (child.is_primitive()) {
      out << pad << key << ": " << scalar(child) << '\n';
    } else if (is_flat(child) && child.size() <= 8) {
      out << pad << key << ": " << inline_array(child) << '\n';
    } else if (child.empty()) {
      out << pad << key << ": " << (child.is_array() ? "[]" : "{}") << '\n';
    } else {
      out << pad << key << ":\n";
      emit(out, child, indent + 2);
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  emit(out, report, 0);
  return out.str();
}

}  // namespace leibniz::cli
