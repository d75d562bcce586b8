#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "icono/errors.hpp"

namespace icono {

// FNV-1a, 64 bit. Used for weight-file fingerprints, stage input hashes and
// pinned regression hashes. Stability across runs matters more than strength.
struct Fnv64 {
  uint64_t state = 1469598103934665603ull;

  void update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 1099511628211ull;
    }
  }

  void update(const std::string& s) { update(s.data(), s.size()); }

  uint64_t value() const { return state; }
};

inline uint64_t fnv64(const void* data, size_t n) {
  Fnv64 h;
  h.update(data, n);
  return h.value();
}

inline uint64_t fnv64(const std::string& s) { return fnv64(s.data(), s.size()); }

inline std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

inline uint64_t hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingWeights, "cannot open " + path);
  Fnv64 h;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    h.update(buf.data(), static_cast<size_t>(in.gcount()));
  }
  return h.value();
}

}  // namespace icono
