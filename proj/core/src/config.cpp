#include "adrfem/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adrfem {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

KeyValueMap parse_key_value_text(const std::string& text) {
    KeyValueMap kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        }
        kv[key] = value;
    }
    return kv;
}

KeyValueMap parse_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_key_value_text(buffer.str());
}

double get_double(const KeyValueMap& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("config: missing key '" + key + "'");
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0') {
        throw std::invalid_argument("config: key '" + key + "' is not a number: " + it->second);
    }
    return v;
}

double get_double_or(const KeyValueMap& kv, const std::string& key, double fallback) {
    return kv.count(key) ? get_double(kv, key) : fallback;
}

int get_int(const KeyValueMap& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("config: missing key '" + key + "'");
    try {
        std::size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' is not an integer: " + it->second);
    }
}

int get_int_or(const KeyValueMap& kv, const std::string& key, int fallback) {
    return kv.count(key) ? get_int(kv, key) : fallback;
}

std::string get_string(const KeyValueMap& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("config: missing key '" + key + "'");
    return it->second;
}

std::string get_string_or(const KeyValueMap& kv, const std::string& key, const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        while (pos < item.size() && (item[pos] == ' ' || item[pos] == '\t')) ++pos;
        if (pos != item.size()) {
            throw std::invalid_argument("malformed integer list entry: " + item);
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw std::invalid_argument("empty integer list: " + text);
    }
    return values;
}

}  // namespace adrfem
