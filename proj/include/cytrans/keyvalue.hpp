#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cytrans {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

struct Section {
  std::string name;  // empty for the entries before the first [header]
  int line = 0;
  std::vector<KeyValue> entries;

  const KeyValue* find(std::string_view key) const;
  // Throws ParseError naming the section when the key is absent.
  const KeyValue& require(std::string_view key) const;
};

// Sectioned key-value text:
//
//   name: quintic_ca4
//   [smoothing]
//   betti: 1,0,1,204,1,0,1
//
// `#` starts a comment; keys are identifiers; sections may repeat.
std::vector<Section> parse_sections(std::string_view text);

long parse_long(const KeyValue& kv);
bool parse_bool(const KeyValue& kv);
std::vector<long> parse_long_list(const KeyValue& kv);

// Whole file as text; throws Error when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace cytrans
