#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icono/errors.hpp"

namespace icono {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Flat `key = value` configuration. Dotted keys group stage settings
// (style.size, train.learning_rate, ...). Lines starting with '#' are
// comments.
class KvConfig {
 public:
  KvConfig() = default;

  static KvConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open config " + path);
    KvConfig cfg;
    cfg.path_ = path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      size_t eq = t.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::ConfigError,
                    path + ":" + std::to_string(lineno) + ": expected key = value");
      }
      cfg.values_[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return cfg;
  }

  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_string(const std::string& key,
                         const std::string& fallback = "") const {
    auto v = get(key);
    return v ? *v : fallback;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw Error(ErrorCode::ConfigError, "missing key " + key);
    return *v;
  }

  double get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    return parse_double(key, *v);
  }

  int64_t get_int(const std::string& key, int64_t fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    return parse_int(key, *v);
  }

  bool get_bool(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw Error(ErrorCode::ConfigError, key + ": expected boolean, got " + *v);
  }

  const std::map<std::string, std::string>& values() const { return values_; }
  const std::string& path() const { return path_; }

  static double parse_double(const std::string& key, const std::string& v) {
    try {
      size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, key + ": expected number, got " + v);
    }
  }

  static int64_t parse_int(const std::string& key, const std::string& v) {
    try {
      size_t pos = 0;
      long long d = std::stoll(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, key + ": expected integer, got " + v);
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::string path_;
};

}  // namespace icono
