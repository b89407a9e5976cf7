#pragma once

#include <map>
#include <string>
#include <vector>

namespace adrfem {

/// Plain-text configuration: one `key = value` pair per line, `#` starts a
/// comment, blank lines ignored. Keys are unique; later duplicates win.
using KeyValueMap = std::map<std::string, std::string>;

KeyValueMap parse_key_value_text(const std::string& text);
KeyValueMap parse_key_value_file(const std::string& path);

/// Typed lookups. The `get_*` forms throw std::invalid_argument when the key
/// is missing or malformed; the `*_or` forms fall back to a default.
double get_double(const KeyValueMap& kv, const std::string& key);
double get_double_or(const KeyValueMap& kv, const std::string& key, double fallback);
int get_int(const KeyValueMap& kv, const std::string& key);
int get_int_or(const KeyValueMap& kv, const std::string& key, int fallback);
std::string get_string(const KeyValueMap& kv, const std::string& key);
std::string get_string_or(const KeyValueMap& kv, const std::string& key, const std::string& fallback);

/// Comma-separated list of integers, e.g. "10,20,40".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace adrfem
