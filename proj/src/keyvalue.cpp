#include "cytrans/keyvalue.hpp"

#include <fstream>
#include <sstream>

#include "cytrans/errors.hpp"
#include "cytrans/poly_text.hpp"

namespace cytrans {

const KeyValue* Section::find(std::string_view key) const {
  for (const auto& kv : entries)
    if (kv.key == key) return &kv;
  return nullptr;
}

const KeyValue& Section::require(std::string_view key) const {
  if (const KeyValue* kv = find(key)) return *kv;
  const std::string where = name.empty() ? "header" : "[" + name + "]";
  throw ParseError(where + " is missing '" + std::string(key) + "'", line);
}

std::vector<Section> parse_sections(std::string_view text) {
  std::vector<Section> out(1);
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim_copy(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ParseError("malformed section header '" + line + "'", lineno);
      out.push_back(Section{trim_copy(std::string_view(line).substr(1, line.size() - 2)), lineno, {}});
      continue;
    }
    auto kv = split_header_line(line);
    if (!kv) throw ParseError("expected 'key: value', got '" + line + "'", lineno);
    out.back().entries.push_back({kv->first, kv->second, lineno});
  }
  return out;
}

long parse_long(const KeyValue& kv) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(kv.value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != kv.value.size()) throw ParseError("'" + kv.key + "' must be an integer", kv.line);
  return v;
}

bool parse_bool(const KeyValue& kv) {
  if (kv.value == "true" || kv.value == "yes") return true;
  if (kv.value == "false" || kv.value == "no") return false;
  throw ParseError("'" + kv.key + "' must be true or false", kv.line);
}

std::vector<long> parse_long_list(const KeyValue& kv) {
  std::vector<long> out;
  for (const auto& item : split_list(kv.value)) out.push_back(parse_long(KeyValue{kv.key, item, kv.line}));
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cytrans
